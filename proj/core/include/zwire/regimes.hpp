#pragma once

#include "zwire/field.hpp"
#include "zwire/linalg.hpp"
#include "zwire/scattering.hpp"

namespace zwire {

// Zero-field segment of length L between uniform leads at thetaL, thetaR.
struct WallConfig {
    double thetaL = 0.0;
    double thetaR = 0.0;
    double L = 0.0;
    double E = 0.0;
};

// Large-energy limit of t: the full-interval Berry operator.
CMat2 high_energy_t(const PlanarField& field);

// Leading reflection correction
//   r1 = (e^{2ikL}/2)(1 - k1^2/k^2)[(sz~(L) + sz) - k * int_0^L sz~(y) dy],
// sz~(y) = U^dagger(0->y) sz U(0->y), k = sqrt(E), k1 = sqrt(E - 1),
// midpoint quadrature on N cells. Needs E >= 4.
CMat2 first_order_reflection(const PlanarField& field, double E, int N = kDefaultSegments);

// L -> 0 limit of an abrupt lead rotation:
//   r = (M - I)(M + I)^{-1},  t = 2 W^{-1} U W (M + I)^{-1},  M = W U^dagger W^{-2} U W.
// Antipodal leads use the planar rotation by pi.
ScatterResult delta_wall_scattering(const Direction& nL, const Direction& nR, double E);

// Direct matching of the spinor wavefunction and its derivative at y = 0
// and y = L (8x8 system). Interior waves at k = sqrt(E) in both spin states.
ScatterResult magnetic_wall_scattering(const WallConfig& cfg);

}  // namespace zwire
