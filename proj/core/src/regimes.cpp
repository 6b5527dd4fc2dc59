#include "zwire/regimes.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "lapack_bridge.hpp"
#include "zwire/berry.hpp"
#include "zwire/errors.hpp"

namespace zwire {

namespace {

const cplx I(0.0, 1.0);

void require_open(const ChannelData& ch) {
    if (is_threshold(ch.E)) throw ThresholdError("energy sits exactly on a band bottom");
    if (ch.regime == Regime::Closed) throw RegimeError("no open channel");
}

bool antipodal(const Direction& a, const Direction& b) {
    const double na = std::sqrt(a.n1 * a.n1 + a.n2 * a.n2 + a.n3 * a.n3);
    const double nb = std::sqrt(b.n1 * b.n1 + b.n2 * b.n2 + b.n3 * b.n3);
    return std::abs(a.n1 / na + b.n1 / nb) + std::abs(a.n2 / na + b.n2 / nb) +
               std::abs(a.n3 / na + b.n3 / nb) <
           1e-12;
}

}  // namespace

CMat2 high_energy_t(const PlanarField& field) {
    return half_angle_rotation(field.theta_right() - field.theta_left());
}

CMat2 first_order_reflection(const PlanarField& field, double E, int N) {
    if (!(E >= 4.0)) throw RegimeError("first-order reflection is only provided for E >= 4");
    if (N < 1) throw Error("segment count must be >= 1");
    const double k = std::sqrt(E);
    const double k1 = std::sqrt(E - kBandBottom1);
    const double L = field.length();
    const double h = L / N;
    const CMat2 sz = CMat2::diag(1.0, -1.0);
    auto rotated = [&](double y) {
        const CMat2 u = half_angle_rotation(field.theta(y) - field.theta_left());
        return adjoint(u) * sz * u;
    };
    CMat2 integral;
    for (int j = 0; j < N; ++j) integral = integral + cplx(h) * rotated((j + 0.5) * h);
    const CMat2 bracket = rotated(L) + sz - cplx(k) * integral;
    const cplx pref = std::exp(2.0 * I * k * L) * 0.5 * (1.0 - (k1 * k1) / (k * k));
    return pref * bracket;
}

ScatterResult delta_wall_scattering(const Direction& nL, const Direction& nR, double E) {
    const ChannelData ch = wave_vectors(E);
    require_open(ch);
    const CMat2 U = antipodal(nL, nR) ? half_angle_rotation(std::numbers::pi)
                                      : berry_operator_overlap(nL, nR).value;
    const BoundaryMatrices bm = boundary_matrices(ch, 0.0);
    const CMat2 Winv = inverse(bm.W);
    const CMat2 M = bm.W * adjoint(U) * Winv * Winv * U * bm.W;
    const CMat2 Id = CMat2::identity();
    const CMat2 inv = inverse(M + Id);
    ScatterResult res;
    res.channel = ch;
    res.r = (M - Id) * inv;
    res.t = cplx(2.0) * Winv * U * bm.W * inv;
    finalize_observables(res);
    return res;
}

ScatterResult magnetic_wall_scattering(const WallConfig& cfg) {
    const ChannelData ch = wave_vectors(cfg.E);
    require_open(ch);
    if (!(cfg.L >= 0.0)) throw Error("wall length must be >= 0");
    const cplx kk[2] = {ch.k0, ch.k1};
    const cplx k = branch_sqrt(cfg.E);
    const double L = cfg.L;
    const cplx cosL = std::cos(k * L);
    const cplx sincL = k == 0.0 ? cplx(L) : std::sin(k * L) / k;

    std::array<cplx, 2> chiL[2], chiR[2];
    for (int l = 0; l < 2; ++l) {
        chiL[l] = planar_spinor(l, cfg.thetaL);
        chiR[l] = planar_spinor(l, cfg.thetaR);
    }

    // Unknowns: R0 R1 | c_up c_dn | d_up d_dn | T'0 T'1 with interior
    // psi = c cos(ky) + d sin(ky)/k and T' = T e^{i k_l L}.
    constexpr int n = 8;
    std::vector<cplx> A(n * n), B(n * 2);
    auto at = [&](int row, int col) -> cplx& { return A[col * n + row]; };
    for (int s = 0; s < 2; ++s) {
        for (int l = 0; l < 2; ++l) {
            at(s, l) = chiL[l][s];
            at(2 + s, l) = -I * kk[l] * chiL[l][s];
            at(4 + s, 6 + l) = -chiR[l][s];
            at(6 + s, 6 + l) = -I * kk[l] * chiR[l][s];
        }
        at(s, 2 + s) = -1.0;
        at(2 + s, 4 + s) = -1.0;
        at(4 + s, 2 + s) = cosL;
        at(4 + s, 4 + s) = sincL;
        at(6 + s, 2 + s) = -cfg.E * sincL;
        at(6 + s, 4 + s) = cosL;
        for (int lin = 0; lin < 2; ++lin) {
            B[lin * n + s] = -chiL[lin][s];
            B[lin * n + 2 + s] = -I * kk[lin] * chiL[lin][s];
        }
    }
    detail::solve_dense(A, n, B, 2);

    const cplx w[2] = {1.0, std::sqrt(ch.k1 / ch.k0)};
    ScatterResult res;
    res.channel = ch;
    for (int lin = 0; lin < 2; ++lin)
        for (int l = 0; l < 2; ++l) {
            res.r(l, lin) = B[lin * n + l] * w[l] / w[lin];
            res.t(l, lin) = B[lin * n + 6 + l] * std::exp(-I * kk[l] * L) * w[l] / w[lin];
        }
    finalize_observables(res);
    return res;
}

}  // namespace zwire
