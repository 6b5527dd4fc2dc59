#pragma once

#include <complex>
#include <vector>

namespace zwire::detail {

// Column-major dense solve A X = B (LAPACK zgesv). B is overwritten with X.
// Throws SingularError on an exactly singular pivot.
void solve_dense(std::vector<std::complex<double>>& A, int n,
                 std::vector<std::complex<double>>& B, int nrhs);

// Banded solve (LAPACK zgbsv). `band(i, j)` access is provided by BandMatrix.
class BandMatrix {
public:
    BandMatrix(int n, int kl, int ku);
    std::complex<double>& operator()(int i, int j);
    int size() const { return n_; }

    // Solves in place; B is n x nrhs column-major.
    void solve(std::vector<std::complex<double>>& B, int nrhs);

private:
    int n_, kl_, ku_, ldab_;
    std::vector<std::complex<double>> ab_;
};

}  // namespace zwire::detail
