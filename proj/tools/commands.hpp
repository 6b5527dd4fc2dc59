#pragma once

#include <ostream>
#include <string>

#include "config.hpp"

namespace zwire::cli {

enum ExitCode { kOk = 0, kUsage = 1, kValidationFail = 2, kNumericFailure = 3 };

// Shortest-form double with at most 12 significant digits, '.' decimal
// point regardless of locale, and -0 printed as 0.
std::string format_double(double x);

std::string csv_header(const SweepConfig& cfg);

// Columns: E, P00, P01, P10, P11, R00sq (probabilities), hs_t_minus_U, hs_r
// (distances), unitarity_defect, conductance, regime, defect_flag.
int run_sweep(const SweepConfig& cfg, std::ostream& out, std::ostream& diag);

// against: oracle | wall | delta | berry | convergence
int run_validate(const SweepConfig& cfg, const std::string& against, std::ostream& out,
                 std::ostream& diag);

// Rows "y b1 b3 theta |B|" on `points` evenly spaced positions of [0, L].
int run_dump_profile(const SweepConfig& cfg, std::ostream& out, std::ostream& diag);

int run_current(const SweepConfig& cfg, double muL, double muR, double temperature,
                std::ostream& out, std::ostream& diag);

extern const char* kColumnHelp;

}  // namespace zwire::cli
