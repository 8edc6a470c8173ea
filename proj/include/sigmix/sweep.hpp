#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sigmix/model.hpp"
#include "sigmix/solver.hpp"

namespace sigmix {

enum class SweepMode {
  kEnergyLinear,  // e_i = factor * q_i, times from the base
  kTimeInverse,   // t_i = factor / q_i, energies from the base
};

SweepMode parse_sweep_mode(std::string_view text);
std::string_view to_string(SweepMode mode);

struct SweepSpec {
  ProblemInstance base;
  SweepMode mode = SweepMode::kEnergyLinear;
  std::vector<double> factors;
};

struct SweepCase {
  double factor = 0.0;
  ProblemInstance instance;
  Solution solution;
};

struct SweepReport {
  SweepMode mode = SweepMode::kEnergyLinear;
  std::vector<SweepCase> cases;
};

/// The instance for one factor. Throws ResolutionError naming the factor if a
/// derived value is not representable at the base resolutions.
ProblemInstance derive_instance(const ProblemInstance& base, SweepMode mode, double factor);

/// Solves one derived instance per factor; cases keep the factor order.
SweepReport run_sweep(const SweepSpec& spec, SolverKind solver);

/// factor,n_1..n_k,quality,energy_used,time_used
std::string sweep_to_csv(const SweepReport& report);

/// Rows per type plus a Quality row; one column per case.
std::string sweep_to_table(const SweepReport& report);

std::string sweep_to_json(const SweepReport& report);

}  // namespace sigmix
