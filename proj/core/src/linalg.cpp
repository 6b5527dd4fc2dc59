#include "zwire/linalg.hpp"

#include "zwire/errors.hpp"

namespace zwire {

CMat2 inverse(const CMat2& x) {
    const cplx d = det(x);
    if (std::abs(d) < 1e-300) throw SingularError("2x2 matrix is numerically singular");
    const cplx inv = 1.0 / d;
    return CMat2::from(inv * x(1, 1), -inv * x(0, 1), -inv * x(1, 0), inv * x(0, 0));
}

CMat4 operator*(const CMat4& x, const CMat4& y) {
    CMat4 m;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const cplx xik = x(i, k);
            for (int j = 0; j < 4; ++j) m(i, j) += xik * y(k, j);
        }
    return m;
}

CMat4 operator-(const CMat4& x, const CMat4& y) {
    CMat4 m;
    for (int i = 0; i < 16; ++i) m.a[i] = x.a[i] - y.a[i];
    return m;
}

CMat4 adjoint(const CMat4& x) {
    CMat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = std::conj(x(j, i));
    return m;
}

double hs_norm(const CMat4& x) {
    double s = 0.0;
    for (const auto& v : x.a) s += std::norm(v);
    return std::sqrt(s);
}

double max_abs(const CMat4& x) {
    double m = 0.0;
    for (const auto& v : x.a) m = std::max(m, std::abs(v));
    return m;
}

CMat4 block_diag(const CMat2& u) { return CMat4::from_blocks(u, CMat2{}, CMat2{}, u); }

CMat4 symplectic_j() {
    return CMat4::from_blocks(CMat2{}, CMat2::identity(), -1.0 * CMat2::identity(), CMat2{});
}

}  // namespace zwire
