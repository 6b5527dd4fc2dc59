#pragma once

#include <array>
#include <string>
#include <vector>

#include "zwire/channel.hpp"
#include "zwire/field.hpp"
#include "zwire/linalg.hpp"
#include "zwire/transfer.hpp"

namespace zwire {

// W = diag(1, sqrt(k1/k0)), V = diag(k0, k1), FL = I, FR = diag(e^{i k0 L}, e^{i k1 L}).
struct BoundaryMatrices {
    CMat2 W, V, FL, FR;
};

// Amplitudes use the gauge with plane waves e^{i k y}, y measured from the
// left interface, and flux normalization t_ll' = T_l sqrt(k_l / k_l').
struct ScatterResult {
    CMat2 t;
    CMat2 r;
    ChannelData channel;
    std::array<double, 4> probabilities{};  // |t00|^2, |t01|^2, |t10|^2, |t11|^2
    double unitarity_defect = 0.0;
    double conductance = 0.0;
    double flow_defect = 0.0;  // structural residual of the transfer matrix, 0 if unused
    int N_used = 0;
};

BoundaryMatrices boundary_matrices(const ChannelData& channel, double L);

// Throws RegimeError (closed), ThresholdError (E = +-1), SingularError.
ScatterResult solve_scattering(const PlanarField& field, double E, int N = kDefaultSegments);
ScatterResult solve_scattering(const TransferMatrix4& tm, double L);

// Fills probabilities, unitarity defect and conductance from t and r.
void finalize_observables(ScatterResult& res);

double conductance(const ScatterResult& res);

enum class LabelStyle { Spin, Mixed };

struct LabeledProbability {
    std::string label;
    double value = 0.0;
    bool physical = true;
};

// Spin labels: P(dn->up) = |t00|^2, P(up->dn) = |t11|^2, P(dn->dn) = |t10|^2,
// P(up->up) = |t01|^2. Mixed labels replace the outgoing spin by -/+.
// In the single-channel regime only the 00 entry is physical; others read 0.
std::vector<LabeledProbability> probabilities(const ScatterResult& res, LabelStyle style);

struct ReciprocityReport {
    double amplitude_gap_raw = 0.0;  // |t01 - t10| in the solver gauge
    double amplitude_gap = 0.0;      // |t01 - t10| in the reciprocal gauge
    double modulus_gap = 0.0;        // ||t01|^2 - |t10|^2|
};

// Reciprocal gauge: each lead's plane waves referenced to its own interface
// and the channel-1 eigenvector multiplied by i in both leads.
CMat2 reciprocal_gauge(const ScatterResult& res, double L);

ReciprocityReport reciprocity_check(const PlanarField& field, double E, int N = kDefaultSegments);

struct EnergyGrid {
    double E_min = 0.0;
    double E_max = 0.0;
    int points = 0;

    double at(int i) const;
};

struct LandauerResult {
    double current = 0.0;
    int coarse_pairs = 0;  // adjacent samples whose G differs by more than 10%
    std::vector<double> energies;
    std::vector<double> conductance;
};

double fermi(double E, double mu, double temperature);

// I = (1/2pi) * integral G(E) (fL - fR) dE, trapezoid on the grid.
LandauerResult landauer_current(const PlanarField& field, double muL, double muR,
                                double temperature, const EnergyGrid& grid,
                                int N = kDefaultSegments);

// Same quadrature on precomputed conductance samples.
LandauerResult landauer_current(const std::vector<double>& energies,
                                const std::vector<double>& conductance, double muL, double muR,
                                double temperature);

}  // namespace zwire
