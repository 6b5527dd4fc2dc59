#include "zwire/fd_oracle.hpp"

#include <cmath>
#include <string>

#include "lapack_bridge.hpp"
#include "zwire/errors.hpp"

namespace zwire {

namespace {

const cplx I(0.0, 1.0);

struct LeadMode {
    cplx z;  // e^{i k a}, |z| <= 1
    cplx v;  // lattice group velocity 2 sin(k a) / a
};

LeadMode lead_mode(double E, double band_bottom, double a) {
    const double eps = E - band_bottom;
    if (eps == 0.0) throw ThresholdError("lattice channel exactly at threshold");
    const double x = std::sqrt(std::abs(eps)) * a / 2.0;
    if (eps > 0.0) {
        if (x >= 1.0) throw ChannelMismatchError("energy lies above the lattice band; refine the spacing");
        const double ka = 2.0 * std::asin(x);
        if (ka >= 0.5)
            throw ChannelMismatchError("lattice too coarse: k a = " + std::to_string(ka) + " >= 0.5");
        return {std::exp(I * ka), 2.0 * std::sin(ka) / a};
    }
    const double kappa_a = 2.0 * std::asinh(x);
    return {cplx(std::exp(-kappa_a)), I * (2.0 * std::sinh(kappa_a) / a)};
}

// Zeeman eigenvectors (up, down) at planar angle theta; channel 0 is the lower one.
std::array<cplx, 2> lead_spinor(int channel, double theta) {
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    if (channel == 0) return {cplx(-s), cplx(c)};
    return {cplx(c), cplx(s)};
}

struct Onsite {
    double m[2][2];
};

Onsite onsite(const PlanarField& field, double y, double a, double E) {
    const FieldSample lo = field.b(y - 0.25 * a), hi = field.b(y + 0.25 * a);
    const double b1 = 0.5 * (lo.b1 + hi.b1), b3 = 0.5 * (lo.b3 + hi.b3);
    const double diag = 2.0 / (a * a) - E;
    return {{{diag + b3, b1}, {b1, diag - b3}}};
}

}  // namespace

ScatterResult fd_scattering_cells(const PlanarField& field, double E, int M) {
    const ChannelData ch = wave_vectors(E);
    if (is_threshold(E)) throw ThresholdError("energy sits exactly on a band bottom");
    if (ch.regime == Regime::Closed) throw RegimeError("no open channel");
    if (M < 2) throw Error("lattice needs at least two cells");
    const double L = field.length();
    if (!(L > 0.0)) throw Error("lattice oracle needs L > 0");
    const double a = L / M;
    const double hop = 1.0 / (a * a);

    const LeadMode mode[2] = {lead_mode(E, kBandBottom0, a), lead_mode(E, kBandBottom1, a)};
    std::array<cplx, 2> chiL[2], chiR[2];
    for (int l = 0; l < 2; ++l) {
        chiL[l] = lead_spinor(l, field.theta_left());
        chiR[l] = lead_spinor(l, field.theta_right());
    }

    // Unknowns: R_l (cols 0,1), psi_n for n = 1..M-1 (cols 2n, 2n+1),
    // T'_l = T_l z_l^M (cols 2M, 2M+1). Row 2n + s is site n, spin s.
    const int n = 2 * (M + 1);
    detail::BandMatrix A(n, 3, 3);
    std::vector<cplx> B(static_cast<std::size_t>(n) * 2, 0.0);

    {
        const Onsite h = onsite(field, 0.0, a, E);
        for (int s = 0; s < 2; ++s) {
            for (int l = 0; l < 2; ++l) {
                const cplx hchi = h.m[s][0] * chiL[l][0] + h.m[s][1] * chiL[l][1];
                A(s, l) = hchi - hop * mode[l].z * chiL[l][s];
                B[l * n + s] = -(hchi - hop / mode[l].z * chiL[l][s]);
            }
            if (M - 1 >= 1) A(s, 2 + s) = -hop;
        }
    }
    for (int site = 1; site <= M - 1; ++site) {
        const Onsite h = onsite(field, site * a, a, E);
        for (int s = 0; s < 2; ++s) {
            const int row = 2 * site + s;
            for (int sp = 0; sp < 2; ++sp) A(row, 2 * site + sp) = h.m[s][sp];
            if (site == 1) {
                for (int l = 0; l < 2; ++l) {
                    A(row, l) = -hop * chiL[l][s];
                    B[l * n + row] = hop * chiL[l][s];
                }
            } else {
                A(row, 2 * (site - 1) + s) = -hop;
            }
            if (site == M - 1) {
                for (int l = 0; l < 2; ++l) A(row, 2 * M + l) = -hop * chiR[l][s];
            } else {
                A(row, 2 * (site + 1) + s) = -hop;
            }
        }
    }
    {
        const Onsite h = onsite(field, L, a, E);
        for (int s = 0; s < 2; ++s) {
            const int row = 2 * M + s;
            for (int l = 0; l < 2; ++l) {
                const cplx hchi = h.m[s][0] * chiR[l][0] + h.m[s][1] * chiR[l][1];
                A(row, 2 * M + l) = hchi - hop * mode[l].z * chiR[l][s];
            }
            A(row, 2 * (M - 1) + s) = -hop;
        }
    }
    A.solve(B, 2);

    const cplx w[2] = {1.0, std::sqrt(mode[1].v / mode[0].v)};
    ScatterResult res;
    res.channel = ch;
    res.N_used = M;
    for (int lin = 0; lin < 2; ++lin)
        for (int l = 0; l < 2; ++l) {
            const cplx R = B[lin * n + l];
            const cplx T = B[lin * n + 2 * M + l] * std::pow(mode[l].z, -M);
            res.r(l, lin) = R * w[l] / w[lin];
            res.t(l, lin) = T * w[l] / w[lin];
        }
    finalize_observables(res);
    return res;
}

ScatterResult fd_scattering(const PlanarField& field, double E, double a) {
    if (!(a > 0.0)) throw Error("lattice spacing must be positive");
    const long cells = std::lround(field.length() / a);
    return fd_scattering_cells(field, E, static_cast<int>(std::max(2L, cells)));
}

}  // namespace zwire
