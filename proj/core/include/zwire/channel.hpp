#pragma once

#include "zwire/linalg.hpp"

namespace zwire {

// Code units: energies in E_Z, lengths in L_Z = sqrt(hbar^2 / (2 m E_Z)),
// so hbar^2 / 2m = 1 and the lead band bottoms sit at -1 and +1.
inline constexpr double kBandBottom0 = -1.0;
inline constexpr double kBandBottom1 = 1.0;

enum class Regime { TwoChannel, SingleChannel, Closed };

const char* regime_name(Regime r);

struct ChannelData {
    double E = 0.0;
    cplx k0{};
    cplx k1{};
    Regime regime = Regime::Closed;
};

// sqrt(x) on the branch with Im >= 0.
cplx branch_sqrt(double x);

ChannelData wave_vectors(double E);

// k1 - k0 for E > 1; throws RegimeError otherwise.
double momentum_transfer(double E);

double hs_distance(const CMat2& a, const CMat2& b);

bool is_threshold(double E);

// Moves an energy sitting exactly on a band bottom up by 1e-9.
double nudge_off_threshold(double E);

}  // namespace zwire
