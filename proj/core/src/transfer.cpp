#include "zwire/transfer.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "zwire/errors.hpp"

namespace zwire {

namespace {

// Scalar entries of exp(L [[0, 1], [-q, 0]]): c = cos, s = sin/sqrt(q), m = -sqrt(q) sin.
template <class T>
struct Entries {
    T c, s, m;
    double growth;
};

template <class T>
Entries<T> scalar_block(T q, T L) {
    using std::cos, std::cosh, std::sin, std::sinh, std::sqrt;
    if (q > 0) {
        const T k = sqrt(q), x = k * L;
        const T sn = sin(x);
        return {cos(x), sn / k, -k * sn, 0.0};
    }
    if (q < 0) {
        const T kap = sqrt(-q), x = kap * L;
        const T sh = sinh(x);
        return {cosh(x), sh / kap, kap * sh, static_cast<double>(x)};
    }
    return {1, L, 0, 0.0};
}

}  // namespace

CMat4 dblock(const CMat2& Q, double L) {
    const double a = Q(0, 0).real(), d = Q(1, 1).real();
    const cplx b = Q(0, 1);
    if (b == 0.0 && Q(1, 0) == 0.0) {
        const auto e0 = scalar_block(a, L), e1 = scalar_block(d, L);
        return CMat4::from_blocks(CMat2::diag(e0.c, e1.c), CMat2::diag(e0.s, e1.s),
                                  CMat2::diag(e0.m, e1.m), CMat2::diag(e0.c, e1.c));
    }
    const double mean = 0.5 * (a + d);
    const double rad = std::hypot(0.5 * (a - d), std::abs(b));
    const double lp = mean + rad, lm = mean - rad;
    // Eigenvector of lp from whichever row is better conditioned.
    std::array<cplx, 2> v{b, lp - a};
    std::array<cplx, 2> w{lp - d, std::conj(b)};
    if (std::norm(w[0]) + std::norm(w[1]) > std::norm(v[0]) + std::norm(v[1])) v = w;
    const double nv = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    v[0] /= nv;
    v[1] /= nv;
    const std::array<cplx, 2> u{-std::conj(v[1]), std::conj(v[0])};
    auto proj = [](const std::array<cplx, 2>& x) {
        return CMat2::from(x[0] * std::conj(x[0]), x[0] * std::conj(x[1]), x[1] * std::conj(x[0]),
                           x[1] * std::conj(x[1]));
    };
    const CMat2 Pp = proj(v), Pm = proj(u);
    const auto ep = scalar_block(lp, L), em = scalar_block(lm, L);
    const CMat2 C = cplx(ep.c) * Pp + cplx(em.c) * Pm;
    const CMat2 S = cplx(ep.s) * Pp + cplx(em.s) * Pm;
    const CMat2 M = cplx(ep.m) * Pp + cplx(em.m) * Pm;
    return CMat4::from_blocks(C, S, M, C);
}

SegmentPlan segment_plan(const PlanarField& field, double y1, double y2, double E, int N,
                         ZeroFieldBasis basis) {
    if (N < 1) throw Error("segment count must be >= 1");
    if (!(y2 >= y1)) throw Error("segment plan needs y1 <= y2");
    SegmentPlan p;
    p.N = N;
    p.E = E;
    p.y_start = y1;
    p.y_end = y2;
    p.h = (y2 - y1) / N;
    // Interface angles come from the leads so a zero-length region keeps its rotation.
    p.theta_start = y1 <= field.y_left() ? field.theta_left() : field.theta(y1);
    p.theta_end = y2 >= field.y_right() ? field.theta_right() : field.theta(y2);
    p.omega.resize(N);

    std::vector<std::optional<double>> mid(N);
    for (int j = 0; j < N; ++j) {
        const double y = y1 + (j + 0.5) * p.h;
        p.omega[j] = field.omega(y);
        if (!field.zero_field(y)) mid[j] = field.theta(y);
    }
    // A zero-field segment has no eigenbasis of its own; it borrows the
    // nearest defined angle on the chosen side so the rotation collapses
    // onto the opposite interface.
    std::vector<double> ang(N);
    if (basis == ZeroFieldBasis::Left) {
        double last = p.theta_start;
        for (int j = 0; j < N; ++j) ang[j] = last = mid[j].value_or(last);
    } else {
        double next = p.theta_end;
        for (int j = N - 1; j >= 0; --j) ang[j] = next = mid[j].value_or(next);
    }
    p.jump_angle.resize(N + 1);
    p.jump_angle[0] = ang[0] - p.theta_start;
    for (int j = 1; j < N; ++j) p.jump_angle[j] = ang[j] - ang[j - 1];
    p.jump_angle[N] = p.theta_end - ang[N - 1];
    return p;
}

SegmentPlan segment_plan(const PlanarField& field, double E, int N, ZeroFieldBasis basis) {
    return segment_plan(field, field.y_left(), field.y_right(), E, N, basis);
}

TransferMatrix4 gamma_from_plan(const SegmentPlan& plan, double E) {
    // Real arithmetic throughout: for real E every factor is real. Extended
    // precision keeps the symplectic residual small when evanescent entries grow.
    using real = long double;
    real g[4][4] = {};
    {
        const real half = 0.5L * plan.jump_angle[0];
        const real c = std::cos(half), s = std::sin(half);
        g[0][0] = c, g[0][1] = -s, g[1][0] = s, g[1][1] = c;
        g[2][2] = c, g[2][3] = -s, g[3][2] = s, g[3][3] = c;
    }
    double growth = 0.0;
    for (int j = 0; j < plan.N; ++j) {
        const auto e0 = scalar_block<real>(real(E) - plan.omega[j].e0, plan.h);
        const auto e1 = scalar_block<real>(real(E) - plan.omega[j].e1, plan.h);
        growth += std::max(e0.growth, e1.growth);
        const real half = 0.5L * plan.jump_angle[j + 1];
        const real c = std::cos(half), s = std::sin(half);
        for (int col = 0; col < 4; ++col) {
            const real a0 = e0.c * g[0][col] + e0.s * g[2][col];
            const real b0 = e0.m * g[0][col] + e0.c * g[2][col];
            const real a1 = e1.c * g[1][col] + e1.s * g[3][col];
            const real b1 = e1.m * g[1][col] + e1.c * g[3][col];
            g[0][col] = c * a0 - s * a1;
            g[1][col] = s * a0 + c * a1;
            g[2][col] = c * b0 - s * b1;
            g[3][col] = s * b0 + c * b1;
        }
    }
    if (growth > kMaxGrowthExponent)
        throw OverflowError("evanescent growth exponent " + std::to_string(growth) +
                            " exceeds the overflow guard (60)");

    TransferMatrix4 tm;
    tm.E = E;
    tm.N = plan.N;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) tm.gamma(i, k) = static_cast<double>(g[i][k]);
    tm.berry = plan.berry();
    tm.gamma_tilde = block_diag(adjoint(tm.berry)) * tm.gamma;
    tm.X00 = tm.gamma_tilde.block(0, 0);
    tm.X01 = tm.gamma_tilde.block(0, 1);
    tm.X10 = tm.gamma_tilde.block(1, 0);
    tm.X11 = tm.gamma_tilde.block(1, 1);
    return tm;
}

TransferMatrix4 gamma_piecewise(const PlanarField& field, double E, int N, ZeroFieldBasis basis) {
    return gamma_from_plan(segment_plan(field, E, N, basis), E);
}

double flow_defect(const TransferMatrix4& tm) {
    const CMat4 J = symplectic_j();
    return hs_norm(adjoint(tm.gamma_tilde) * J * tm.gamma_tilde - J);
}

TransferEngine::TransferEngine(const PlanarField& field, int N, ZeroFieldBasis basis)
    : plan_(segment_plan(field, 0.0, N, basis)) {}

}  // namespace zwire
