#include "lapack_bridge.hpp"

#include <complex>
#include <string>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "zwire/errors.hpp"

namespace zwire::detail {

void solve_dense(std::vector<std::complex<double>>& A, int n, std::vector<std::complex<double>>& B,
                 int nrhs) {
    std::vector<lapack_int> ipiv(n);
    const lapack_int info =
        LAPACKE_zgesv(LAPACK_COL_MAJOR, n, nrhs, A.data(), n, ipiv.data(), B.data(), n);
    if (info > 0) throw SingularError("dense matching system is singular (pivot " + std::to_string(info) + ")");
    if (info < 0) throw Error("zgesv rejected argument " + std::to_string(-info));
}

BandMatrix::BandMatrix(int n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku), ldab_(2 * kl + ku + 1), ab_(static_cast<std::size_t>(ldab_) * n) {}

std::complex<double>& BandMatrix::operator()(int i, int j) {
    // LAPACK band storage: AB(kl + ku + i - j, j), column-major.
    return ab_[static_cast<std::size_t>(j) * ldab_ + (kl_ + ku_ + i - j)];
}

void BandMatrix::solve(std::vector<std::complex<double>>& B, int nrhs) {
    std::vector<lapack_int> ipiv(n_);
    const lapack_int info = LAPACKE_zgbsv(LAPACK_COL_MAJOR, n_, kl_, ku_, nrhs, ab_.data(), ldab_,
                                          ipiv.data(), B.data(), n_);
    if (info > 0) throw SingularError("banded lattice system is singular (pivot " + std::to_string(info) + ")");
    if (info < 0) throw Error("zgbsv rejected argument " + std::to_string(-info));
}

}  // namespace zwire::detail
