#include "zwire/scattering.hpp"

#include <cmath>
#include <numbers>

#include "zwire/errors.hpp"

namespace zwire {

namespace {

const cplx I(0.0, 1.0);

void require_open(const ChannelData& ch) {
    if (is_threshold(ch.E))
        throw ThresholdError("energy sits exactly on a band bottom (E = " + std::to_string(ch.E) + ")");
    if (ch.regime == Regime::Closed)
        throw RegimeError("no open channel at E = " + std::to_string(ch.E));
}

}  // namespace

BoundaryMatrices boundary_matrices(const ChannelData& ch, double L) {
    if (ch.regime == Regime::Closed) throw RegimeError("boundary matrices need an open channel");
    BoundaryMatrices bm;
    bm.W = CMat2::diag(1.0, std::sqrt(ch.k1 / ch.k0));
    bm.V = CMat2::diag(ch.k0, ch.k1);
    bm.FL = CMat2::identity();
    bm.FR = CMat2::diag(std::exp(I * ch.k0 * L), std::exp(I * ch.k1 * L));
    return bm;
}

void finalize_observables(ScatterResult& res) {
    for (int i = 0; i < 4; ++i) res.probabilities[i] = std::norm(res.t.a[i]);
    if (res.channel.regime == Regime::TwoChannel) {
        const CMat2 f = adjoint(res.r) * res.r + adjoint(res.t) * res.t - CMat2::identity();
        res.unitarity_defect = hs_norm(f);
    } else {
        res.unitarity_defect = std::abs(std::norm(res.r(0, 0)) + std::norm(res.t(0, 0)) - 1.0);
    }
    res.conductance = conductance(res);
}

ScatterResult solve_scattering(const TransferMatrix4& tm, double L) {
    const ChannelData ch = wave_vectors(tm.E);
    require_open(ch);
    const BoundaryMatrices bm = boundary_matrices(ch, L);
    const CMat2& U = tm.berry;
    const CMat2& V = bm.V;
    const CMat2 iX10 = I * tm.X10;
    const CMat2 iX01V = I * (tm.X01 * V);
    const CMat2 X11V = tm.X11 * V;
    const CMat2 plus = tm.X00 + iX01V;
    const CMat2 minus = tm.X00 - iX01V;

    const CMat2 lhs = U * (X11V + iX10) + V * U * minus;
    const CMat2 rhs = U * (X11V - iX10) - V * U * plus;
    const CMat2 rho = inverse(lhs) * rhs;

    const CMat2 Winv = inverse(bm.W);
    const CMat2 FRinv = CMat2::diag(1.0 / bm.FR(0, 0), 1.0 / bm.FR(1, 1));

    ScatterResult res;
    res.channel = ch;
    res.N_used = tm.N;
    res.r = bm.W * rho * Winv;
    res.t = bm.W * FRinv * U * (plus + minus * rho) * Winv;
    res.flow_defect = flow_defect(tm);
    finalize_observables(res);
    return res;
}

ScatterResult solve_scattering(const PlanarField& field, double E, int N) {
    require_open(wave_vectors(E));
    return solve_scattering(gamma_piecewise(field, E, N), field.length());
}

double conductance(const ScatterResult& res) {
    if (res.channel.regime == Regime::SingleChannel) return std::norm(res.t(0, 0));
    double g = 0.0;
    for (const auto& v : res.t.a) g += std::norm(v);
    return g;
}

std::vector<LabeledProbability> probabilities(const ScatterResult& res, LabelStyle style) {
    const bool spin = style == LabelStyle::Spin;
    const bool two = res.channel.regime == Regime::TwoChannel;
    auto entry = [&](const char* label, int idx, bool always) {
        const bool phys = always || two;
        return LabeledProbability{label, phys ? res.probabilities[idx] : 0.0, phys};
    };
    return {
        entry(spin ? "P(dn->up)" : "P(dn->-)", 0, true),
        entry(spin ? "P(up->dn)" : "P(up->+)", 3, false),
        entry(spin ? "P(dn->dn)" : "P(dn->+)", 2, false),
        entry(spin ? "P(up->up)" : "P(up->-)", 1, false),
    };
}

CMat2 reciprocal_gauge(const ScatterResult& res, double L) {
    const cplx g[2] = {1.0, I};
    const cplx ph[2] = {std::exp(I * res.channel.k0 * L), std::exp(I * res.channel.k1 * L)};
    CMat2 out;
    for (int l = 0; l < 2; ++l)
        for (int lp = 0; lp < 2; ++lp) out(l, lp) = g[l] * ph[l] * res.t(l, lp) / g[lp];
    return out;
}

ReciprocityReport reciprocity_check(const PlanarField& field, double E, int N) {
    if (!(E > kBandBottom1)) throw RegimeError("reciprocity check needs two open channels");
    const ScatterResult res = solve_scattering(field, E, N);
    const CMat2 tg = reciprocal_gauge(res, field.length());
    ReciprocityReport rep;
    rep.amplitude_gap_raw = std::abs(res.t(0, 1) - res.t(1, 0));
    rep.amplitude_gap = std::abs(tg(0, 1) - tg(1, 0));
    rep.modulus_gap = std::abs(std::norm(res.t(0, 1)) - std::norm(res.t(1, 0)));
    return rep;
}

double EnergyGrid::at(int i) const {
    if (points <= 1) return E_min;
    return E_min + (E_max - E_min) * static_cast<double>(i) / (points - 1);
}

double fermi(double E, double mu, double temperature) {
    if (temperature <= 0.0) return E < mu ? 1.0 : (E > mu ? 0.0 : 0.5);
    const double x = (E - mu) / temperature;
    if (x > 0.0) {
        const double e = std::exp(-x);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(x));
}

LandauerResult landauer_current(const std::vector<double>& energies,
                                const std::vector<double>& G, double muL, double muR,
                                double temperature) {
    if (energies.size() != G.size()) throw Error("energy and conductance samples differ in length");
    LandauerResult out;
    out.energies = energies;
    out.conductance = G;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < energies.size(); ++i) {
        const double f0 = G[i] * (fermi(energies[i], muL, temperature) - fermi(energies[i], muR, temperature));
        const double f1 = G[i + 1] *
                          (fermi(energies[i + 1], muL, temperature) - fermi(energies[i + 1], muR, temperature));
        acc += 0.5 * (f0 + f1) * (energies[i + 1] - energies[i]);
        const double big = std::max(std::abs(G[i]), std::abs(G[i + 1]));
        if (big > 1e-12 && std::abs(G[i + 1] - G[i]) > 0.1 * big) ++out.coarse_pairs;
    }
    out.current = acc / (2.0 * std::numbers::pi);
    return out;
}

LandauerResult landauer_current(const PlanarField& field, double muL, double muR,
                                double temperature, const EnergyGrid& grid, int N) {
    if (grid.points < 2) throw Error("Landauer quadrature needs at least two grid points");
    const TransferEngine engine(field, N);
    std::vector<double> E(grid.points), G(grid.points, 0.0);
    for (int i = 0; i < grid.points; ++i) {
        E[i] = grid.at(i);
        const double e = nudge_off_threshold(E[i]);
        if (wave_vectors(e).regime == Regime::Closed) continue;
        G[i] = solve_scattering(engine.build(e), field.length()).conductance;
    }
    return landauer_current(E, G, muL, muR, temperature);
}

}  // namespace zwire
