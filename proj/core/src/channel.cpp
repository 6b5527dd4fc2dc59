#include "zwire/channel.hpp"

#include "zwire/errors.hpp"

namespace zwire {

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::TwoChannel: return "two";
        case Regime::SingleChannel: return "single";
        case Regime::Closed: return "closed";
    }
    return "?";
}

cplx branch_sqrt(double x) {
    // +0.0 imaginary part keeps std::sqrt on the upper branch for x < 0.
    return std::sqrt(cplx(x, 0.0));
}

ChannelData wave_vectors(double E) {
    ChannelData c;
    c.E = E;
    c.k0 = branch_sqrt(E - kBandBottom0);
    c.k1 = branch_sqrt(E - kBandBottom1);
    if (E > kBandBottom1)
        c.regime = Regime::TwoChannel;
    else if (E > kBandBottom0)
        c.regime = Regime::SingleChannel;
    else
        c.regime = Regime::Closed;
    return c;
}

double momentum_transfer(double E) {
    if (!(E > kBandBottom1)) throw RegimeError("momentum transfer needs two open channels (E > 1)");
    return std::sqrt(E - kBandBottom1) - std::sqrt(E - kBandBottom0);
}

double hs_distance(const CMat2& a, const CMat2& b) { return hs_norm(a - b); }

bool is_threshold(double E) { return E == kBandBottom0 || E == kBandBottom1; }

double nudge_off_threshold(double E) { return is_threshold(E) ? E + 1e-9 : E; }

}  // namespace zwire
