#pragma once

#include <vector>

#include "zwire/field.hpp"
#include "zwire/linalg.hpp"

namespace zwire {

inline constexpr int kDefaultSegments = 4096;
// Largest accumulated evanescent exponent sum(kappa * h) the engine accepts.
inline constexpr double kMaxGrowthExponent = 60.0;

// Gamma maps (channel amplitudes, derivatives) across the region;
// Gamma = diag(U, U) * Gamma~ with U the full-interval Berry operator.
struct TransferMatrix4 {
    CMat4 gamma;
    CMat4 gamma_tilde;
    CMat2 X00, X01, X10, X11;
    CMat2 berry;
    double E = 0.0;
    int N = 0;
};

// Where the eigenbasis of a zero-field stretch is borrowed from.
enum class ZeroFieldBasis { Left, Right };

// Equal segments with midpoint Zeeman splittings and the basis rotation
// angles between consecutive segments. jump_angle has N + 1 entries:
// lead -> first midpoint, midpoint -> midpoint, last midpoint -> lead.
struct SegmentPlan {
    int N = 0;
    double h = 0.0;
    double E = 0.0;
    double y_start = 0.0;
    double y_end = 0.0;
    double theta_start = 0.0;
    double theta_end = 0.0;
    std::vector<OmegaDiag> omega;
    std::vector<double> jump_angle;

    CMat2 jump(int j) const { return half_angle_rotation(jump_angle[j]); }
    CMat2 berry() const { return half_angle_rotation(theta_end - theta_start); }
};

// exp(L * [[0, I], [-Q, 0]]) for Hermitian Q via its 2x2 eigendecomposition:
// [[cos(sqrt(Q) L), sin(sqrt(Q) L)/sqrt(Q)], [-sqrt(Q) sin(sqrt(Q) L), cos(sqrt(Q) L)]]
// with hyperbolic functions on the negative part of the spectrum.
CMat4 dblock(const CMat2& Q, double L);

SegmentPlan segment_plan(const PlanarField& field, double E, int N,
                         ZeroFieldBasis basis = ZeroFieldBasis::Left);

// Plan over the sub-interval [y1, y2]; needs a defined direction at both ends.
SegmentPlan segment_plan(const PlanarField& field, double y1, double y2, double E, int N,
                         ZeroFieldBasis basis = ZeroFieldBasis::Left);

TransferMatrix4 gamma_from_plan(const SegmentPlan& plan, double E);

TransferMatrix4 gamma_piecewise(const PlanarField& field, double E, int N,
                                ZeroFieldBasis basis = ZeroFieldBasis::Left);

// ||Gamma~^dagger J Gamma~ - J||_HS
double flow_defect(const TransferMatrix4& tm);

// Geometry of a plan is energy independent; reuse it across a sweep.
class TransferEngine {
public:
    TransferEngine(const PlanarField& field, int N, ZeroFieldBasis basis = ZeroFieldBasis::Left);
    TransferMatrix4 build(double E) const { return gamma_from_plan(plan_, E); }
    const SegmentPlan& plan() const { return plan_; }

private:
    SegmentPlan plan_;
};

}  // namespace zwire
