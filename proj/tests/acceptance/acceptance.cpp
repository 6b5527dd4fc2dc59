// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "zwire/zwire.hpp"

using namespace zwire;

namespace {

constexpr double pi = std::numbers::pi;

// Largest structural residual seen on any engine build in criteria 1-7.
double g_flow_defect = 0.0;
long g_builds = 0;

ScatterResult engine_solve(const TransferEngine& eng, double E, double L) {
    const TransferMatrix4 tm = eng.build(E);
    g_flow_defect = std::max(g_flow_defect, flow_defect(tm));
    ++g_builds;
    return solve_scattering(tm, L);
}

ScatterResult engine_solve(const PlanarField& f, double E, int N) {
    return engine_solve(TransferEngine(f, N), E, f.length());
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
    return v;
}

// Energies strictly inside (a, b).
std::vector<double> interior(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * (i + 1) / (n + 1);
    return v;
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

using Profile = std::pair<std::string, PlanarField>;

std::vector<Profile> unitarity_profiles() {
    const std::pair<int, int> qs[] = {{0, 0}, {1, 0}, {10, 0}, {0, 1}, {0, 10}};
    std::vector<Profile> out;
    for (auto [q1, q2] : qs) {
        out.emplace_back(fmt("I(%d,%d)", q1, q2), scheme1_field(q1, q2, 3.0));
        out.emplace_back(fmt("II(%d,%d)", q1, q2), scheme2_field(q1, q2, 6.0));
    }
    return out;
}

Outcome flux_unitarity() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    std::string where;
    int count = 0;
    for (const auto& [name, f] : unitarity_profiles()) {
        const TransferEngine eng(f, 4096);
        for (double E : linspace(1.01, 10.0, 200)) {
            const double d = engine_solve(eng, E, f.length()).unitarity_defect;
            ++count;
            if (d > worst) worst = d, where = fmt("%s E=%.4g", name.c_str(), E);
        }
    }
    const double t = seconds_since(t0);
    return {worst <= 1e-8 && t < 30.0,
            fmt("max defect %.3e at %s over %d solves (tol 1e-8); %.2f s (target < 30 s)", worst,
                where.c_str(), count, t)};
}

Outcome single_channel_identity() {
    double worst = 0.0;
    for (const PlanarField& f : {scheme1_field(0, 0, 3.0), scheme2_field(0, 0, 6.0)}) {
        const TransferEngine eng(f, 4096);
        for (double E : interior(-0.99, 0.99, 100)) {
            const ScatterResult r = engine_solve(eng, E, f.length());
            worst = std::max(worst, std::abs(std::norm(r.r(0, 0)) + std::norm(r.t(0, 0)) - 1.0));
        }
    }
    return {worst <= 1e-8, fmt("max ||r00|^2 + |t00|^2 - 1| = %.3e (tol 1e-8)", worst)};
}

Outcome scheme1_values() {
    const PlanarField f = scheme1_field(0, 0, 3.0);
    const TransferEngine eng(f, 4096);
    double best = 0.0, bestE = 0.0;
    for (double E : linspace(0.5, 0.999, 500)) {
        const double p = engine_solve(eng, E, f.length()).probabilities[0];
        if (p > best) best = p, bestE = E;
    }
    const double p6 = engine_solve(eng, 6.0, f.length()).probabilities[2];
    double gap = 0.0;
    for (double E : linspace(1.01, 100.0, 200)) {
        const ScatterResult r = engine_solve(eng, E, f.length());
        gap = std::max(gap, std::abs(r.probabilities[2] - r.probabilities[1]));
    }
    const bool ok = best >= 0.99 && p6 >= 0.85 && p6 <= 0.95 && gap <= 1e-8;
    return {ok, fmt("max P(dn->up) on [0.5,0.999] = %.6f at E=%.4f (>= 0.99); P(dn->dn)(E=6) = %.5f "
                    "(in [0.85,0.95]); max |P(dn->dn)-P(up->up)| = %.2e (tol 1e-8)",
                    best, bestE, p6, gap)};
}

Outcome scheme2_values() {
    const PlanarField f = scheme2_field(0, 0, 6.0);
    const double L = f.length();
    const TransferEngine eng(f, 4096);
    double best = 0.0, bestE = 0.0;
    for (double E : interior(0.0, 1.0, 500)) {
        const double p = engine_solve(eng, E, L).probabilities[0];
        if (p > best) best = p, bestE = E;
    }
    const ScatterResult hi = engine_solve(eng, 100.0, L);
    double spread = 0.0;
    for (double p : hi.probabilities) spread = std::max(spread, std::abs(p - 0.5));
    double gap = 0.0, gap_raw = 0.0;
    for (double E : linspace(1.01, 100.0, 200)) {
        const ScatterResult r = engine_solve(eng, E, L);
        const CMat2 tg = reciprocal_gauge(r, L);
        gap = std::max(gap, std::abs(tg(0, 1) - tg(1, 0)));
        gap_raw = std::max(gap_raw, std::abs(r.t(0, 1) - r.t(1, 0)));
    }
    const bool ok = best >= 0.99 && spread <= 0.05 && gap <= 1e-8;
    return {ok, fmt("max P(dn->-) on (0,1) = %.6f at E=%.4f (>= 0.99); max |P-1/2| at E=100 = %.4f "
                    "(<= 0.05); max |t01-t10| = %.2e in the reciprocal lead gauge (tol 1e-8; "
                    "%.2e with y measured from the left interface in both leads)",
                    best, bestE, spread, gap, gap_raw)};
}

Outcome berry_limit() {
    std::string detail;
    bool ok = true;
    const std::pair<const char*, PlanarField> cases[] = {{"I", scheme1_field(0, 0, 3.0)},
                                                         {"II", scheme2_field(0, 0, 6.0)}};
    for (const auto& [name, f] : cases) {
        const TransferEngine eng(f, 4096);
        const CMat2 U = high_energy_t(f);
        const ScatterResult r10 = engine_solve(eng, 10.0, f.length());
        const ScatterResult r100 = engine_solve(eng, 100.0, f.length());
        const double d10 = hs_distance(r10.t, U), d100 = hs_distance(r100.t, U);
        const double rn = hs_norm(r100.r);
        ok = ok && d100 < d10 && rn < 0.1;
        detail += fmt("%s%s: ||t-U|| %.3e (E=10) -> %.3e (E=100), ||r||(E=100) = %.2e", detail.empty() ? "" : "; ",
                      name, d10, d100, rn);
    }
    return {ok, detail};
}

double max_rel_prob(const ScatterResult& a, const ScatterResult& ref) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i)
        m = std::max(m, std::abs(a.probabilities[i] - ref.probabilities[i]) / ref.probabilities[i]);
    return m;
}

Outcome oracle_equivalence() {
    bool ok = true;
    double worst = 0.0, worst_ratio = 1e300;
    std::string trend;
    const std::pair<const char*, PlanarField> cases[] = {{"I", scheme1_field(0, 0, 3.0)},
                                                         {"II", scheme2_field(0, 0, 6.0)}};
    for (const auto& [name, f] : cases) {
        for (double E : {2.0, 5.0}) {
            const ScatterResult ref = engine_solve(f, E, 16384);
            double errs[3];
            const int cells[3] = {2048, 4096, 8192};
            for (int i = 0; i < 3; ++i) errs[i] = max_rel_prob(fd_scattering_cells(f, E, cells[i]), ref);
            worst = std::max(worst, errs[2]);
            const double r1 = errs[0] / errs[1], r2 = errs[1] / errs[2];
            worst_ratio = std::min({worst_ratio, r1, r2});
            ok = ok && errs[2] <= 1e-4 && r1 >= 3.0 && r2 >= 3.0;
            trend += fmt(" %s/E=%g: %.1e %.1e %.1e;", name, E, errs[0], errs[1], errs[2]);
        }
    }
    return {ok, fmt("max relative probability error at a=L/8192 = %.2e (tol 1e-4); min error ratio per "
                    "halving of a = %.2f (a^2 trend needs >= 3); errors at L/2048, L/4096, L/8192:%s",
                    worst, worst_ratio, trend.c_str())};
}

Outcome analytic_limits() {
    double wall_gap = 0.0, delta_gap = 0.0, herm = 0.0;
    const std::pair<double, double> geometries[] = {{0.0, pi / 2}, {0.4, 2.6}};
    for (auto [thL, thR] : geometries) {
        const double L = 2.0;
        const PlanarField w = magnetic_wall_field(thL, thR, L);
        const TransferEngine eng(w, 64);
        for (double E : linspace(1.01, 100.0, 50)) {
            const ScatterResult a = engine_solve(eng, E, L);
            const ScatterResult b = magnetic_wall_scattering({thL, thR, L, E});
            wall_gap = std::max({wall_gap, max_abs(a.t - b.t), max_abs(a.r - b.r)});

            const ScatterResult d = delta_wall_scattering(planar_direction(thL), planar_direction(thR), E);
            const ScatterResult s = magnetic_wall_scattering({thL, thR, 1e-6, E});
            delta_gap = std::max({delta_gap, max_abs(d.t - s.t), max_abs(d.r - s.r)});
            herm = std::max(herm, max_abs(d.r - adjoint(d.r)));
        }
    }
    const bool ok = wall_gap <= 1e-10 && delta_gap <= 1e-4 && herm <= 1e-12;
    return {ok, fmt("engine vs wall solver max entry gap %.2e (tol 1e-10); delta wall vs L=1e-6 wall %.2e "
                    "(tol 1e-4); max |r - r^+| %.2e (tol 1e-12)",
                    wall_gap, delta_gap, herm)};
}

Outcome berry_cross_validation() {
    const int N = 4096;
    double seg_gap = 0.0, overlap_gap = 0.0;
    std::vector<PlanarField> fields{scheme1_field(0, 0, 3.0), scheme1_field(0, 1, 3.0), scheme2_field(0, 0, 6.0),
                                    scheme1_field(2, 1, 3.0)};
    double max_winding = 0.0;
    for (const PlanarField& f : fields) {
        std::vector<Direction> path;
        for (int j = 0; j <= N; ++j) path.push_back(planar_direction(f.theta(f.length() * j / N)));
        const CMat2 seg = berry_operator_segmented(path).value;
        const CMat2 closed = berry_operator_planar(f, 0.0, f.length()).value;
        seg_gap = std::max(seg_gap, hs_norm(cplx(sign_alignment(seg, closed)) * seg - closed));
        max_winding = std::max(max_winding, std::abs(f.theta_right() - f.theta_left()));
    }
    // Antipodal endpoints (winding pi) have no overlap route; the closed form covers them.
    for (double w : linspace(0.0, 2 * pi, 65)) {
        if (w >= 2 * pi || std::abs(w - pi) < 1e-12) continue;
        const CMat2 ov = berry_operator_overlap(planar_direction(0.0), planar_direction(w)).value;
        overlap_gap = std::max(overlap_gap, hs_norm(ov - half_angle_rotation(w)));
    }
    for (const PlanarField& f : {scheme2_field(0, 0, 6.0), magnetic_wall_field(0.3, 4.0, 1.0)}) {
        const CMat2 ov = berry_operator_overlap(planar_direction(f.theta_left()), planar_direction(f.theta_right())).value;
        overlap_gap = std::max(overlap_gap, hs_norm(ov - berry_operator_planar(f, 0.0, f.length()).value));
    }
    const bool ok = seg_gap <= 1e-8 && overlap_gap <= 1e-14;
    return {ok, fmt("segmented vs closed form %.2e after sign alignment (tol 1e-8, windings up to %.3g pi); "
                    "overlap vs closed form %.2e for windings < 2 pi (rounding-level)",
                    seg_gap, max_winding / pi, overlap_gap)};
}

Outcome structural_invariant() {
    return {g_flow_defect <= 1e-8,
            fmt("max ||G~^+ J G~ - J|| = %.2e over %ld engine builds in criteria 1-7 (tol 1e-8)", g_flow_defect,
                g_builds)};
}

Outcome self_convergence() {
    const PlanarField f = scheme1_field(0, 0, 3.0);
    const double E = 3.0;
    const ScatterResult ref = solve_scattering(f, E, 16384);
    std::vector<double> err;
    std::string list;
    for (int N : {256, 512, 1024, 2048, 4096}) {
        const ScatterResult r = solve_scattering(f, E, N);
        double e = 0.0;
        for (int i = 0; i < 4; ++i) e = std::max(e, std::abs(r.probabilities[i] - ref.probabilities[i]));
        err.push_back(e);
        list += fmt(" %d:%.2e", N, e);
    }
    bool ok = true;
    double min_ratio = 1e300;
    for (std::size_t i = 1; i < err.size(); ++i) {
        const double ratio = err[i - 1] / err[i];
        min_ratio = std::min(min_ratio, ratio);
        ok = ok && err[i] < err[i - 1] && ratio >= 2.0;
    }
    return {ok, fmt("probability error vs N=16384:%s; min ratio per doubling %.2f (>= 2)", list.c_str(), min_ratio)};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"flux unitarity, two-channel", flux_unitarity},
        {"single-channel flux identity", single_channel_identity},
        {"scheme I reference values", scheme1_values},
        {"scheme II reference values", scheme2_values},
        {"high-energy Berry limit", berry_limit},
        {"finite-difference oracle", oracle_equivalence},
        {"analytic wall limits", analytic_limits},
        {"Berry operator cross-check", berry_cross_validation},
        {"transfer-matrix flow invariant", structural_invariant},
        {"self-convergence in N", self_convergence},
    };
    int failures = 0, index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::printf("%s  [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
