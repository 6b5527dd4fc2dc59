#include "zwire/berry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zwire/errors.hpp"

namespace zwire {

namespace {

constexpr double kAntipodalTol = 1e-12;

Direction normalized(const Direction& n) {
    const double m = std::sqrt(n.n1 * n.n1 + n.n2 * n.n2 + n.n3 * n.n3);
    if (!(m > 0.0)) throw DirectionError("zero direction vector");
    return {n.n1 / m, n.n2 / m, n.n3 / m};
}

bool antipodal(const Direction& a, const Direction& b) {
    return std::abs(a.n1 + b.n1) + std::abs(a.n2 + b.n2) + std::abs(a.n3 + b.n3) < kAntipodalTol;
}

CMat2 overlap(const Direction& from, const Direction& to) {
    CMat2 u;
    for (int lp = 0; lp < 2; ++lp) {
        const auto bra = direction_spinor(lp, to);
        for (int l = 0; l < 2; ++l) {
            const auto ket = direction_spinor(l, from);
            u(lp, l) = std::conj(bra[0]) * ket[0] + std::conj(bra[1]) * ket[1];
        }
    }
    return u;
}

}  // namespace

std::array<cplx, 2> planar_spinor(int channel, double theta) {
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    if (channel == 0) return {cplx(-s), cplx(c)};
    return {cplx(c), cplx(s)};
}

std::array<cplx, 2> direction_spinor(int channel, const Direction& raw) {
    const Direction n = normalized(raw);
    if (n.n2 == 0.0) {
        double alpha = std::atan2(n.n1, n.n3);
        if (alpha < 0.0) alpha += 2.0 * std::numbers::pi;
        return planar_spinor(channel, alpha);
    }
    const double polar = std::acos(std::clamp(n.n3, -1.0, 1.0));
    const double azimuth = std::atan2(n.n2, n.n1);
    const double c = std::cos(0.5 * polar), s = std::sin(0.5 * polar);
    if (channel == 1) return {cplx(c), std::polar(s, azimuth)};
    return {-std::polar(s, -azimuth), cplx(c)};
}

BerryConnection berry_connection_planar(const PlanarField& field, double y) {
    const double tp = field.theta_prime(y);
    return {y, CMat2::from(0.0, 0.5 * tp, -0.5 * tp, 0.0)};
}

BerryOperator berry_operator_planar(const PlanarField& field, double y1, double y2) {
    if (y1 == y2) return {y1, y2, CMat2::identity()};
    // The later point of a zero-length region sits in the right lead.
    auto angle = [&](double y, bool later) {
        if (later && y >= field.y_right()) return field.theta_right();
        if (!later && y <= field.y_left()) return field.theta_left();
        return field.theta(y);
    };
    const double delta = angle(y2, y2 > y1) - angle(y1, y1 > y2);
    return {y1, y2, half_angle_rotation(delta)};
}

BerryOperator berry_operator_segmented(const std::vector<Direction>& directions) {
    if (directions.size() < 2) throw DirectionError("segmented Berry operator needs at least two directions");
    CMat2 u = CMat2::identity();
    for (std::size_t j = 0; j + 1 < directions.size(); ++j) {
        const Direction a = normalized(directions[j]);
        const Direction b = normalized(directions[j + 1]);
        if (antipodal(a, b)) throw AntipodalError("antipodal step in segmented Berry operator");
        u = overlap(a, b) * u;
    }
    return {0.0, 1.0, u};
}

BerryOperator berry_operator_overlap(const Direction& nL, const Direction& nR) {
    const Direction a = normalized(nL);
    const Direction b = normalized(nR);
    if (antipodal(a, b)) throw AntipodalError("antipodal lead directions: overlap route is singular");
    return {0.0, 1.0, overlap(a, b)};
}

double sign_alignment(const CMat2& a, const CMat2& b) {
    return hs_norm(a - b) <= hs_norm(a + b) ? 1.0 : -1.0;
}

}  // namespace zwire
