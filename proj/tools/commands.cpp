#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

#include "zwire/zwire.hpp"

namespace zwire::cli {

const char* kColumnHelp =
    "CSV columns (groups selected by 'outputs'):\n"
    "  E                 injection energy (units of E_Z)\n"
    "  P00 P01 P10 P11   |t_ll'|^2; single-channel rows keep only P00\n"
    "  R00sq             |r_00|^2\n"
    "  hs_t_minus_U      ||t - U||_HS, U the full Berry operator (00 entry only below E = 1)\n"
    "  hs_r              ||r||_HS (00 entry only below E = 1)\n"
    "  unitarity_defect  ||r^+r + t^+t - I||_HS, or ||r00|^2+|t00|^2-1| below E = 1\n"
    "  conductance       Tr(t^+t), or |t00|^2 below E = 1\n"
    "  regime            two | single | closed\n"
    "  defect_flag       1 when unitarity_defect exceeds 'tolerance'\n";

std::string format_double(double x) {
    if (x == 0.0) return "0";
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
    return std::string(buf, p);
}

namespace {

struct Row {
    std::string text;
    std::optional<std::string> error;
};

template <class Fn>
void parallel_for(int count, int threads, Fn fn) {
    int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::clamp(workers, 1, std::max(1, count));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) fn(i);
        });
    for (auto& t : pool) t.join();
}

double grid_energy(const SweepConfig& cfg, int i, std::ostream* diag) {
    const EnergyGrid grid{cfg.E_min, cfg.E_max, cfg.points};
    const double E = grid.at(i);
    if (is_threshold(E)) {
        if (diag) *diag << "note: E = " << format_double(E) << " is a band threshold; shifted by 1e-9\n";
        return nudge_off_threshold(E);
    }
    return E;
}

void check_grid(const SweepConfig& cfg) {
    if (!(cfg.E_max >= cfg.E_min)) throw ConfigError("E_max must be >= E_min");
}

std::string sweep_row(const SweepConfig& cfg, const TransferEngine& engine, const PlanarField& field,
                      const CMat2& U, double E) {
    const ChannelData ch = wave_vectors(E);
    double P[4] = {0, 0, 0, 0}, R00 = 0, dtU = 0, dr = 0, defect = 0, G = 0;
    if (ch.regime != Regime::Closed) {
        const ScatterResult res = solve_scattering(engine.build(E), field.length());
        defect = res.unitarity_defect;
        G = res.conductance;
        R00 = std::norm(res.r(0, 0));
        if (ch.regime == Regime::TwoChannel) {
            for (int i = 0; i < 4; ++i) P[i] = res.probabilities[i];
            dtU = hs_distance(res.t, U);
            dr = hs_norm(res.r);
        } else {
            P[0] = res.probabilities[0];
            dtU = std::abs(res.t(0, 0) - U(0, 0));
            dr = std::abs(res.r(0, 0));
        }
    }
    std::string s = format_double(E);
    auto put = [&](double v) {
        s += ',';
        s += format_double(v);
    };
    if (cfg.out_probabilities) {
        for (double p : P) put(p);
        put(R00);
    }
    if (cfg.out_distances) {
        put(dtU);
        put(dr);
    }
    put(defect);
    if (cfg.out_conductance) put(G);
    s += ',';
    s += regime_name(ch.regime);
    s += defect > cfg.tolerance ? ",1" : ",0";
    return s;
}

struct Verdict {
    double worst = 0.0;
    double worst_E = 0.0;
    std::string worst_quantity;
    bool pass = true;

    void record(double value, double tol, double E, const std::string& what) {
        if (value > worst || (std::isnan(value))) {
            worst = value;
            worst_E = E;
            worst_quantity = what;
        }
        if (!(value <= tol)) pass = false;
    }
};

int finish(const Verdict& v, double tol, const std::string& label, std::ostream& out) {
    out << label << ": max deviation " << format_double(v.worst) << " (tolerance " << format_double(tol)
        << ")";
    if (!v.worst_quantity.empty())
        out << ", worst at E = " << format_double(v.worst_E) << " [" << v.worst_quantity << "]";
    out << '\n' << (v.pass ? "PASS" : "FAIL") << '\n';
    return v.pass ? kOk : kValidationFail;
}

const char* kProbNames[4] = {"P00", "P01", "P10", "P11"};

int validate_oracle(const SweepConfig& cfg, const PlanarField& field, std::ostream& out) {
    const double tol = 1e-4;
    Verdict v;
    for (double E0 : cfg.validate_energies) {
        const double E = nudge_off_threshold(E0);
        const ScatterResult eng = solve_scattering(field, E, cfg.segments);
        const ScatterResult fd = fd_scattering_cells(field, E, cfg.lattice_divisions);
        const int n = eng.channel.regime == Regime::TwoChannel ? 4 : 1;
        for (int i = 0; i < n; ++i) {
            const double ref = fd.probabilities[i];
            const double rel = std::abs(eng.probabilities[i] - ref) / std::max(std::abs(ref), 1e-300);
            out << "E = " << format_double(E) << "  " << kProbNames[i] << "  engine " << format_double(eng.probabilities[i])
                << "  lattice " << format_double(ref) << "  rel " << format_double(rel) << '\n';
            v.record(rel, tol, E, kProbNames[i]);
        }
    }
    return finish(v, tol, "engine vs lattice oracle (relative)", out);
}

int validate_wall(const SweepConfig& cfg, const PlanarField& field, std::ostream& out) {
    if (field.kind() != FieldKind::MagneticWall) throw ConfigError("--against wall needs scheme = wall");
    const double tol = 1e-10;
    Verdict v;
    const TransferEngine engine(field, cfg.segments);
    for (int i = 0; i < cfg.points; ++i) {
        const double E = grid_energy(cfg, i, nullptr);
        if (wave_vectors(E).regime == Regime::Closed) continue;
        const ScatterResult a = solve_scattering(engine.build(E), field.length());
        const ScatterResult b = magnetic_wall_scattering({field.theta_left(), field.theta_right(), field.length(), E});
        v.record(max_abs(a.t - b.t), tol, E, "t");
        v.record(max_abs(a.r - b.r), tol, E, "r");
    }
    return finish(v, tol, "engine vs wall matching solver (entrywise)", out);
}

int validate_delta(const SweepConfig& cfg, const PlanarField& field, std::ostream& out) {
    if (field.kind() != FieldKind::MagneticWall) throw ConfigError("--against delta needs scheme = wall");
    const double tol = 1e-4;
    Verdict v, herm;
    const Direction nL = planar_direction(field.theta_left());
    const Direction nR = planar_direction(field.theta_right());
    for (int i = 0; i < cfg.points; ++i) {
        const double E = grid_energy(cfg, i, nullptr);
        const Regime reg = wave_vectors(E).regime;
        if (reg == Regime::Closed) continue;
        const ScatterResult d = delta_wall_scattering(nL, nR, E);
        const ScatterResult w = magnetic_wall_scattering({field.theta_left(), field.theta_right(), 1e-6, E});
        // The overlap gauge can differ from the unwrapped wall angle by a global sign.
        const cplx sgn = sign_alignment(d.t, w.t);
        v.record(max_abs(sgn * d.t - w.t), tol, E, "t");
        v.record(max_abs(d.r - w.r), tol, E, "r");
        if (reg == Regime::TwoChannel) herm.record(max_abs(d.r - adjoint(d.r)), 1e-12, E, "r - r^+");
    }
    const int a = finish(v, tol, "delta wall vs wall solver at L = 1e-6", out);
    const int b = finish(herm, 1e-12, "delta wall reflection hermiticity", out);
    return a == kOk && b == kOk ? kOk : kValidationFail;
}

int validate_berry(const SweepConfig& cfg, const PlanarField& field, std::ostream& out) {
    const double tol = 1e-8;
    const CMat2 closed = high_energy_t(field);
    std::vector<Direction> dirs;
    if (field.kind() == FieldKind::MagneticWall) {
        dirs = {planar_direction(field.theta_left()), planar_direction(field.theta_right())};
    } else {
        for (int j = 0; j <= cfg.segments; ++j)
            dirs.push_back(planar_direction(field.theta(field.length() * j / cfg.segments)));
    }
    const CMat2 seg = berry_operator_segmented(dirs).value;
    const double sgn = sign_alignment(seg, closed);
    Verdict v;
    v.record(max_abs(cplx(sgn) * seg - closed), tol, 0.0, "segmented");
    out << "winding " << format_double(field.theta_right() - field.theta_left()) << ", sign alignment "
        << (sgn > 0 ? "+1" : "-1") << '\n';
    return finish(v, tol, "segmented product vs planar closed form", out);
}

double prob_error(const ScatterResult& a, const ScatterResult& b) {
    const int n = a.channel.regime == Regime::TwoChannel ? 4 : 1;
    double e = 0.0;
    for (int i = 0; i < n; ++i) e = std::max(e, std::abs(a.probabilities[i] - b.probabilities[i]));
    return e;
}

int validate_convergence(const SweepConfig& cfg, const PlanarField& field, std::ostream& out) {
    bool pass = true;
    const int top = cfg.segments;
    if (top < 16) throw ConfigError("convergence check needs segments >= 16");
    for (double E0 : cfg.validate_energies) {
        const double E = nudge_off_threshold(E0);
        const ScatterResult ref = solve_scattering(field, E, 4 * top);
        double prev = -1.0;
        out << "E = " << format_double(E) << "  reference N = " << 4 * top << '\n';
        for (int n = top / 16; n <= top; n *= 2) {
            const double err = prob_error(solve_scattering(field, E, n), ref);
            out << "  N = " << n << "  error " << format_double(err);
            if (prev >= 0.0) {
                const double ratio = err > 0.0 ? prev / err : INFINITY;
                out << "  ratio " << format_double(ratio);
                if (prev > 1e-13 && !(ratio >= 2.0)) pass = false;
            }
            out << '\n';
            prev = err;
        }
    }
    out << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? kOk : kValidationFail;
}

}  // namespace

std::string csv_header(const SweepConfig& cfg) {
    std::string h = "E";
    if (cfg.out_probabilities) h += ",P00,P01,P10,P11,R00sq";
    if (cfg.out_distances) h += ",hs_t_minus_U,hs_r";
    h += ",unitarity_defect";
    if (cfg.out_conductance) h += ",conductance";
    h += ",regime,defect_flag";
    return h;
}

int run_sweep(const SweepConfig& cfg, std::ostream& out, std::ostream& diag) {
    check_grid(cfg);
    const PlanarField field = build_field(cfg);
    const TransferEngine engine(field, cfg.segments);
    const CMat2 U = high_energy_t(field);
    std::vector<double> energies(cfg.points);
    for (int i = 0; i < cfg.points; ++i) energies[i] = grid_energy(cfg, i, &diag);
    std::vector<Row> rows(cfg.points);
    parallel_for(cfg.points, cfg.threads, [&](int i) {
        try {
            rows[i].text = sweep_row(cfg, engine, field, U, energies[i]);
        } catch (const std::exception& e) {
            rows[i].error = e.what();
        }
    });
    for (int i = 0; i < cfg.points; ++i)
        if (rows[i].error) {
            diag << "error at E = " << format_double(energies[i]) << ": " << *rows[i].error << '\n';
            return kNumericFailure;
        }
    out << csv_header(cfg) << '\n';
    for (const auto& r : rows) out << r.text << '\n';
    return kOk;
}

int run_validate(const SweepConfig& cfg, const std::string& against, std::ostream& out, std::ostream&) {
    check_grid(cfg);
    const PlanarField field = build_field(cfg);
    if (against == "oracle") return validate_oracle(cfg, field, out);
    if (against == "wall") return validate_wall(cfg, field, out);
    if (against == "delta") return validate_delta(cfg, field, out);
    if (against == "berry") return validate_berry(cfg, field, out);
    if (against == "convergence") return validate_convergence(cfg, field, out);
    throw ConfigError("unknown validation mode '" + against + "'");
}

int run_dump_profile(const SweepConfig& cfg, std::ostream& out, std::ostream&) {
    const PlanarField field = build_field(cfg);
    out << "# y b1 b3 theta |B|\n";
    const int n = std::max(cfg.points, 2);
    for (int i = 0; i < n; ++i) {
        const double y = field.length() * i / (n - 1);
        const FieldSample b = field.b(y);
        const double th = field.zero_field(y) ? NAN : field.theta(y);
        out << format_double(y) << ' ' << format_double(b.b1) << ' ' << format_double(b.b3) << ' '
            << format_double(th) << ' ' << format_double(field.magnitude(y)) << '\n';
    }
    return kOk;
}

int run_current(const SweepConfig& cfg, double muL, double muR, double temperature, std::ostream& out,
                std::ostream& diag) {
    check_grid(cfg);
    if (cfg.points < 2) throw ConfigError("current needs points >= 2");
    if (temperature < 0.0) throw ConfigError("temperature must be >= 0");
    const PlanarField field = build_field(cfg);
    const TransferEngine engine(field, cfg.segments);
    std::vector<double> E(cfg.points), G(cfg.points, 0.0);
    for (int i = 0; i < cfg.points; ++i) E[i] = EnergyGrid{cfg.E_min, cfg.E_max, cfg.points}.at(i);
    std::vector<Row> errs(cfg.points);
    parallel_for(cfg.points, cfg.threads, [&](int i) {
        try {
            const double e = nudge_off_threshold(E[i]);
            if (wave_vectors(e).regime != Regime::Closed)
                G[i] = solve_scattering(engine.build(e), field.length()).conductance;
        } catch (const std::exception& ex) {
            errs[i].error = ex.what();
        }
    });
    for (int i = 0; i < cfg.points; ++i)
        if (errs[i].error) {
            diag << "error at E = " << format_double(E[i]) << ": " << *errs[i].error << '\n';
            return kNumericFailure;
        }
    const LandauerResult res = landauer_current(E, G, muL, muR, temperature);
    if (res.coarse_pairs > 0)
        diag << "warning: " << res.coarse_pairs
             << " adjacent conductance samples differ by more than 10%; the grid may be too coarse\n";
    out << "current " << format_double(res.current) << '\n';
    out << "grid E_min " << format_double(cfg.E_min) << " E_max " << format_double(cfg.E_max) << " points "
        << cfg.points << '\n';
    return kOk;
}

}  // namespace zwire::cli
