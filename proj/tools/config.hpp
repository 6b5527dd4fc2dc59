#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zwire/field.hpp"

namespace zwire::cli {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SweepConfig {
    std::string scheme;  // scheme1 | scheme2 | wall | uniform | tabulated
    std::string tabulated_path;
    int q1 = 0;
    int q2 = 0;
    double L = 3.0;
    double theta = 0.0;
    double theta_left = 0.0;
    double theta_right = 3.141592653589793;
    double E_min = 1.01;
    double E_max = 10.0;
    int points = 200;
    int segments = 4096;
    bool out_probabilities = true;
    bool out_distances = true;
    bool out_conductance = true;
    int threads = 0;  // 0: hardware concurrency
    int lattice_divisions = 8192;
    std::vector<double> validate_energies{2.0, 5.0};
    double tolerance = 1e-8;
};

// Flat "key = value" lines, '#' starts a comment. Unknown keys are errors.
// Relative tabulated paths resolve against base_dir.
SweepConfig parse_config(std::istream& in, const std::string& base_dir);
SweepConfig load_config(const std::string& path);

// Applies one key; line > 0 is used in error messages.
void apply_key(SweepConfig& cfg, const std::string& key, const std::string& value, int line,
               const std::string& base_dir);

// Accepts plain numbers and multiples of pi such as "pi/2", "-3pi/4", "2*pi".
double parse_real(const std::string& text);

PlanarField build_field(const SweepConfig& cfg);

}  // namespace zwire::cli
