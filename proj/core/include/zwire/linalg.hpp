#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace zwire {

using cplx = std::complex<double>;

// Dense 2x2 complex matrix, row-major. Index 0 is the lower Zeeman channel.
struct CMat2 {
    std::array<cplx, 4> a{};

    cplx& operator()(int i, int j) { return a[2 * i + j]; }
    const cplx& operator()(int i, int j) const { return a[2 * i + j]; }

    static CMat2 identity() { return diag(1.0, 1.0); }
    static CMat2 diag(cplx d0, cplx d1) {
        CMat2 m;
        m(0, 0) = d0;
        m(1, 1) = d1;
        return m;
    }
    static CMat2 from(cplx m00, cplx m01, cplx m10, cplx m11) {
        CMat2 m;
        m.a = {m00, m01, m10, m11};
        return m;
    }
};

inline CMat2 operator*(const CMat2& x, const CMat2& y) {
    return CMat2::from(x(0, 0) * y(0, 0) + x(0, 1) * y(1, 0),
                       x(0, 0) * y(0, 1) + x(0, 1) * y(1, 1),
                       x(1, 0) * y(0, 0) + x(1, 1) * y(1, 0),
                       x(1, 0) * y(0, 1) + x(1, 1) * y(1, 1));
}

inline CMat2 operator+(const CMat2& x, const CMat2& y) {
    CMat2 m;
    for (int i = 0; i < 4; ++i) m.a[i] = x.a[i] + y.a[i];
    return m;
}

inline CMat2 operator-(const CMat2& x, const CMat2& y) {
    CMat2 m;
    for (int i = 0; i < 4; ++i) m.a[i] = x.a[i] - y.a[i];
    return m;
}

inline CMat2 operator*(cplx s, const CMat2& x) {
    CMat2 m;
    for (int i = 0; i < 4; ++i) m.a[i] = s * x.a[i];
    return m;
}

inline CMat2 adjoint(const CMat2& x) {
    return CMat2::from(std::conj(x(0, 0)), std::conj(x(1, 0)), std::conj(x(0, 1)),
                       std::conj(x(1, 1)));
}

inline CMat2 transpose(const CMat2& x) { return CMat2::from(x(0, 0), x(1, 0), x(0, 1), x(1, 1)); }

inline cplx det(const CMat2& x) { return x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0); }

// Adjugate over determinant; throws SingularError when |det| < 1e-300.
CMat2 inverse(const CMat2& x);

inline double hs_norm(const CMat2& x) {
    double s = 0.0;
    for (const auto& v : x.a) s += std::norm(v);
    return std::sqrt(s);
}

inline double max_abs(const CMat2& x) {
    double m = 0.0;
    for (const auto& v : x.a) m = std::max(m, std::abs(v));
    return m;
}

// Real planar rotation [[cos(d/2), -sin(d/2)], [sin(d/2), cos(d/2)]].
inline CMat2 half_angle_rotation(double delta) {
    const double c = std::cos(0.5 * delta);
    const double s = std::sin(0.5 * delta);
    return CMat2::from(c, -s, s, c);
}

// Dense 4x4 complex matrix viewed as 2x2 blocks of CMat2.
struct CMat4 {
    std::array<cplx, 16> a{};

    cplx& operator()(int i, int j) { return a[4 * i + j]; }
    const cplx& operator()(int i, int j) const { return a[4 * i + j]; }

    static CMat4 identity() {
        CMat4 m;
        for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }

    CMat2 block(int bi, int bj) const {
        return CMat2::from((*this)(2 * bi, 2 * bj), (*this)(2 * bi, 2 * bj + 1),
                           (*this)(2 * bi + 1, 2 * bj), (*this)(2 * bi + 1, 2 * bj + 1));
    }

    void set_block(int bi, int bj, const CMat2& m) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) (*this)(2 * bi + i, 2 * bj + j) = m(i, j);
    }

    static CMat4 from_blocks(const CMat2& b00, const CMat2& b01, const CMat2& b10,
                             const CMat2& b11) {
        CMat4 m;
        m.set_block(0, 0, b00);
        m.set_block(0, 1, b01);
        m.set_block(1, 0, b10);
        m.set_block(1, 1, b11);
        return m;
    }
};

CMat4 operator*(const CMat4& x, const CMat4& y);
CMat4 operator-(const CMat4& x, const CMat4& y);
CMat4 adjoint(const CMat4& x);
double hs_norm(const CMat4& x);
double max_abs(const CMat4& x);

// diag(U, U)
CMat4 block_diag(const CMat2& u);

// J = [[0, I], [-I, 0]]
CMat4 symplectic_j();

}  // namespace zwire
