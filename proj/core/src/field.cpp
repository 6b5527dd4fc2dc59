#include "zwire/field.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "zwire/errors.hpp"

namespace zwire {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kDenseSub = 32;

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

// Lifts atan2(b1, b3) onto the 2 pi branch closest to a reference angle.
double lift(double raw, double reference) {
    return raw + 2.0 * kPi * std::round((reference - raw) / (2.0 * kPi));
}

}  // namespace

struct TabulatedProfile {
    std::vector<TabulatedSample> raw;
    std::vector<double> y, b1, b3, m1, m3;
    std::vector<double> dense_y, dense_theta;

    std::size_t interval(double t) const {
        auto it = std::upper_bound(y.begin(), y.end(), t);
        std::size_t i = it == y.begin() ? 0 : static_cast<std::size_t>(it - y.begin()) - 1;
        return std::min(i, y.size() - 2);
    }

    void eval(double t, FieldSample& v, FieldSample& dv) const {
        const std::size_t i = interval(t);
        const double h = y[i + 1] - y[i];
        const double s = (t - y[i]) / h;
        const double s2 = s * s, s3 = s2 * s;
        const double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s;
        const double h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
        const double d00 = (6 * s2 - 6 * s) / h, d10 = 3 * s2 - 4 * s + 1;
        const double d01 = (-6 * s2 + 6 * s) / h, d11 = 3 * s2 - 2 * s;
        v.b1 = h00 * b1[i] + h10 * h * m1[i] + h01 * b1[i + 1] + h11 * h * m1[i + 1];
        v.b3 = h00 * b3[i] + h10 * h * m3[i] + h01 * b3[i + 1] + h11 * h * m3[i + 1];
        dv.b1 = d00 * b1[i] + d10 * m1[i] + d01 * b1[i + 1] + d11 * m1[i + 1];
        dv.b3 = d00 * b3[i] + d10 * m3[i] + d01 * b3[i + 1] + d11 * m3[i + 1];
    }

    double reference_theta(double t) const {
        auto it = std::upper_bound(dense_y.begin(), dense_y.end(), t);
        std::size_t i = it == dense_y.begin() ? 0 : static_cast<std::size_t>(it - dense_y.begin()) - 1;
        i = std::min(i, dense_y.size() - 2);
        const double w = (t - dense_y[i]) / (dense_y[i + 1] - dense_y[i]);
        return (1.0 - w) * dense_theta[i] + w * dense_theta[i + 1];
    }
};

Direction planar_direction(double theta) { return {std::sin(theta), 0.0, std::cos(theta)}; }

const char* field_kind_name(FieldKind k) {
    switch (k) {
        case FieldKind::Scheme1: return "scheme1";
        case FieldKind::Scheme2: return "scheme2";
        case FieldKind::MagneticWall: return "wall";
        case FieldKind::Uniform: return "uniform";
        case FieldKind::Tabulated: return "tabulated";
    }
    return "?";
}

double PlanarField::phase_rate() const {
    if (kind_ == FieldKind::Scheme1) return (1.0 + 2.0 * q2_) * kPi / L_;
    return (1.0 + 4.0 * q2_) * kPi / (2.0 * L_);
}

double PlanarField::phase(double y) const { return phase_rate() * y; }

FieldSample PlanarField::b(double y) const {
    if (y <= 0.0) return {std::sin(theta_L_), std::cos(theta_L_)};
    if (y >= L_) return {std::sin(theta_R_), std::cos(theta_R_)};
    switch (kind_) {
        case FieldKind::Scheme1: {
            const double p = phase(y), s = std::sin(p), c = std::cos(p);
            const double n = 1.0 + 2.0 * q1_;
            return {s * std::pow(std::abs(s), n), sgn(c) * std::pow(std::abs(c), n)};
        }
        case FieldKind::Scheme2: {
            const double p = phase(y), s = std::sin(p), c = std::cos(p);
            const double n = 2.0 + 2.0 * q1_;
            return {sgn(s) * std::pow(std::abs(s), n), sgn(c) * std::pow(std::abs(c), n)};
        }
        case FieldKind::MagneticWall: return {0.0, 0.0};
        case FieldKind::Uniform: return {std::sin(theta_L_), std::cos(theta_L_)};
        case FieldKind::Tabulated: {
            FieldSample v, dv;
            table_->eval(y, v, dv);
            return v;
        }
    }
    return {};
}

FieldSample PlanarField::db(double y) const {
    if (y <= 0.0 || y >= L_) return {0.0, 0.0};
    switch (kind_) {
        case FieldKind::Scheme1: {
            const double w = phase_rate(), p = phase(y), s = std::sin(p), c = std::cos(p);
            const double n = 1.0 + 2.0 * q1_;
            return {w * (n + 1.0) * std::pow(std::abs(s), n) * c,
                    -w * n * std::pow(std::abs(c), n - 1.0) * s};
        }
        case FieldKind::Scheme2: {
            const double w = phase_rate(), p = phase(y), s = std::sin(p), c = std::cos(p);
            const double n = 2.0 + 2.0 * q1_;
            return {w * n * std::pow(std::abs(s), n - 1.0) * c,
                    -w * n * std::pow(std::abs(c), n - 1.0) * s};
        }
        case FieldKind::MagneticWall:
        case FieldKind::Uniform: return {0.0, 0.0};
        case FieldKind::Tabulated: {
            FieldSample v, dv;
            table_->eval(y, v, dv);
            return dv;
        }
    }
    return {};
}

double PlanarField::magnitude(double y) const {
    const FieldSample v = b(y);
    return std::hypot(v.b1, v.b3);
}

bool PlanarField::zero_field(double y) const {
    return kind_ == FieldKind::MagneticWall && y > 0.0 && y < L_;
}

double PlanarField::theta(double y) const {
    if (y <= 0.0) return theta_L_;
    if (y >= L_) return theta_R_;
    switch (kind_) {
        case FieldKind::Scheme1:
        case FieldKind::Scheme2: {
            const FieldSample v = b(y);
            return lift(std::atan2(v.b1, v.b3), phase(y));
        }
        case FieldKind::MagneticWall:
            throw DirectionError("field direction undefined inside the zero-field wall");
        case FieldKind::Uniform: return theta_L_;
        case FieldKind::Tabulated: {
            const FieldSample v = b(y);
            if (std::hypot(v.b1, v.b3) == 0.0) throw DirectionError("zero field in tabulated profile");
            return lift(std::atan2(v.b1, v.b3), table_->reference_theta(y));
        }
    }
    return 0.0;
}

double PlanarField::theta_prime(double y) const {
    if (zero_field(y)) throw DirectionError("field direction undefined inside the zero-field wall");
    const FieldSample v = b(y);
    const FieldSample d = db(y);
    const double m2 = v.b1 * v.b1 + v.b3 * v.b3;
    if (m2 == 0.0) throw DirectionError("zero field: Berry connection undefined");
    return (v.b3 * d.b1 - v.b1 * d.b3) / m2;
}

OmegaDiag PlanarField::omega(double y) const {
    const double m = magnitude(y);
    return {-m, m};
}

const std::vector<TabulatedSample>& PlanarField::samples() const {
    static const std::vector<TabulatedSample> empty;
    return table_ ? table_->raw : empty;
}

PlanarField scheme1_field(int q1, int q2, double L) {
    if (!(L > 0.0)) throw ProfileError("scheme1 needs L > 0");
    if (q1 < 0 || q2 < 0) throw ProfileError("scheme1 needs non-negative q1, q2");
    PlanarField f;
    f.kind_ = FieldKind::Scheme1;
    f.L_ = L;
    f.q1_ = q1;
    f.q2_ = q2;
    f.theta_L_ = 0.0;
    f.theta_R_ = (1.0 + 2.0 * q2) * kPi;
    return f;
}

PlanarField scheme2_field(int q1, int q2, double L) {
    if (!(L > 0.0)) throw ProfileError("scheme2 needs L > 0");
    if (q1 < 0 || q2 < 0) throw ProfileError("scheme2 needs non-negative q1, q2");
    PlanarField f;
    f.kind_ = FieldKind::Scheme2;
    f.L_ = L;
    f.q1_ = q1;
    f.q2_ = q2;
    f.theta_L_ = 0.0;
    f.theta_R_ = (1.0 + 4.0 * q2) * kPi / 2.0;
    return f;
}

PlanarField magnetic_wall_field(double theta_L, double theta_R, double L) {
    if (!(L >= 0.0)) throw ProfileError("wall needs L >= 0");
    PlanarField f;
    f.kind_ = FieldKind::MagneticWall;
    f.L_ = L;
    f.theta_L_ = theta_L;
    f.theta_R_ = theta_R;
    return f;
}

PlanarField uniform_field(double theta, double L) {
    if (!(L >= 0.0)) throw ProfileError("uniform field needs L >= 0");
    PlanarField f;
    f.kind_ = FieldKind::Uniform;
    f.L_ = L;
    f.theta_L_ = theta;
    f.theta_R_ = theta;
    return f;
}

PlanarField tabulated_field(std::vector<TabulatedSample> samples) {
    if (samples.size() < 2) throw ProfileError("tabulated profile needs at least two rows");
    for (const auto& s : samples)
        if (!std::isfinite(s.y) || !std::isfinite(s.b1) || !std::isfinite(s.b3))
            throw ProfileError("tabulated profile has non-finite entries");
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (!(samples[i].y > samples[i - 1].y))
            throw ProfileError("tabulated y must be strictly increasing (row " + std::to_string(i + 1) + ")");
    for (std::size_t i : {std::size_t{0}, samples.size() - 1}) {
        const double m = std::hypot(samples[i].b1, samples[i].b3);
        if (std::abs(m - 1.0) > 1e-6)
            throw ProfileError("tabulated end rows must have |B| = 1 (lead field)");
    }
    for (std::size_t i = 1; i + 1 < samples.size(); ++i)
        if (std::hypot(samples[i].b1, samples[i].b3) == 0.0)
            throw ProfileError("tabulated profile has |B| = 0 at row " + std::to_string(i + 1));

    auto t = std::make_shared<TabulatedProfile>();
    const double y0 = samples.front().y;
    for (auto& s : samples) s.y -= y0;
    t->raw = samples;
    const std::size_t n = samples.size();
    for (const auto& s : samples) {
        t->y.push_back(s.y);
        t->b1.push_back(s.b1);
        t->b3.push_back(s.b3);
    }
    t->m1.assign(n, 0.0);
    t->m3.assign(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double span = t->y[i + 1] - t->y[i - 1];
        t->m1[i] = (t->b1[i + 1] - t->b1[i - 1]) / span;
        t->m3[i] = (t->b3[i + 1] - t->b3[i - 1]) / span;
    }

    double prev = std::atan2(t->b1[0], t->b3[0]);
    const double theta_L = prev;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (int k = 0; k < kDenseSub; ++k) {
            const double yy = t->y[i] + (t->y[i + 1] - t->y[i]) * k / kDenseSub;
            FieldSample v, dv;
            t->eval(yy, v, dv);
            if (std::hypot(v.b1, v.b3) < 1e-9)
                throw ProfileError("interpolated tabulated field vanishes near y = " + std::to_string(yy + y0));
            const double th = lift(std::atan2(v.b1, v.b3), prev);
            t->dense_y.push_back(yy);
            t->dense_theta.push_back(th);
            prev = th;
        }
    }
    t->dense_y.push_back(t->y.back());
    t->dense_theta.push_back(lift(std::atan2(t->b1.back(), t->b3.back()), prev));

    PlanarField f;
    f.kind_ = FieldKind::Tabulated;
    f.L_ = t->y.back();
    f.theta_L_ = theta_L;
    f.theta_R_ = t->dense_theta.back();
    f.table_ = std::move(t);
    return f;
}

std::vector<TabulatedSample> read_tabulated(std::istream& in) {
    std::vector<TabulatedSample> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        std::string tok[3], extra;
        if (!(ss >> tok[0] >> tok[1] >> tok[2]) || (ss >> extra))
            throw ProfileError("line " + std::to_string(lineno) + ": expected three columns y b1 b3");
        double v[3];
        for (int k = 0; k < 3; ++k) {
            const char* b = tok[k].data();
            const char* e = b + tok[k].size();
            auto [p, ec] = std::from_chars(b, e, v[k]);
            if (ec != std::errc() || p != e)
                throw ProfileError("line " + std::to_string(lineno) + ": bad number '" + tok[k] + "'");
        }
        rows.push_back({v[0], v[1], v[2]});
    }
    return rows;
}

PlanarField load_tabulated(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ProfileError("cannot open tabulated profile '" + path + "'");
    return tabulated_field(read_tabulated(in));
}

void write_tabulated(std::ostream& out, const std::vector<TabulatedSample>& samples) {
    out << "# y b1 b3\n";
    char buf[64];
    for (const auto& s : samples) {
        const double cols[3] = {s.y, s.b1, s.b3};
        for (int k = 0; k < 3; ++k) {
            auto [p, ec] = std::to_chars(buf, buf + sizeof buf, cols[k]);
            out.write(buf, p - buf);
            out << (k < 2 ? ' ' : '\n');
        }
    }
}

double theta_of(const PlanarField& field, double y) { return field.theta(y); }

OmegaDiag omega_of(const PlanarField& field, double y) { return field.omega(y); }

}  // namespace zwire
