#pragma once

#include <array>
#include <vector>

#include "zwire/field.hpp"
#include "zwire/linalg.hpp"

namespace zwire {

// K(y) = <phi_l | d/dy phi_l'>, skew-Hermitian.
struct BerryConnection {
    double y = 0.0;
    CMat2 value;
};

// Path-ordered transport between two points; later points multiply on the left.
struct BerryOperator {
    double y1 = 0.0;
    double y2 = 0.0;
    CMat2 value = CMat2::identity();
};

// Spin-space eigenvectors (up, down components) of the Zeeman term at
// planar angle theta: index 0 has eigenvalue -1, index 1 has +1.
std::array<cplx, 2> planar_spinor(int channel, double theta);

// Eigenvectors for an arbitrary direction. In-plane directions use
// planar_spinor at atan2(n1, n3) wrapped into [0, 2 pi); off-plane ones use
// spin-coherent states with real non-negative up component for channel 1.
std::array<cplx, 2> direction_spinor(int channel, const Direction& n);

BerryConnection berry_connection_planar(const PlanarField& field, double y);

// Closed form: rotation by the unwrapped angle difference theta(y2) - theta(y1).
BerryOperator berry_operator_planar(const PlanarField& field, double y1, double y2);

// Ordered product of consecutive overlap matrices <phi_l'(n_{j+1}) | phi_l(n_j)>.
// Throws AntipodalError if a step connects opposite directions.
BerryOperator berry_operator_segmented(const std::vector<Direction>& directions);

// Single overlap matrix between the two endpoint eigenbases.
BerryOperator berry_operator_overlap(const Direction& nL, const Direction& nR);

// Global sign (+1 or -1) that best aligns a with b.
double sign_alignment(const CMat2& a, const CMat2& b);

}  // namespace zwire
