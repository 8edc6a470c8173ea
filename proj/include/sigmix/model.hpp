#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sigmix/errors.hpp"

namespace sigmix {

/// One class of signal: per-signal quality, energy and compute time (us).
struct SignalType {
  int id = 0;
  double quality = 0.0;
  double energy = 0.0;
  double time = 0.0;

  bool operator==(const SignalType&) const = default;
};

inline constexpr double kDefaultEnergyResolution = 1.0;
inline constexpr double kDefaultTimeResolution = 0.1;

/// A complete problem: signal types, energy/time budgets and optional
/// per-type count caps. Construct through make_instance() or load_scenario()
/// so that the invariants are checked.
struct ProblemInstance {
  std::vector<SignalType> types;
  double energy_budget = 0.0;
  double time_budget = 0.0;
  std::optional<std::int64_t> per_type_cap;
  std::optional<std::vector<std::int64_t>> per_type_caps_override;
  double energy_resolution = kDefaultEnergyResolution;
  double time_resolution = kDefaultTimeResolution;

  std::size_t size() const noexcept { return types.size(); }

  /// Count cap from S_c or the override for type position i; nullopt means
  /// unbounded by count.
  std::optional<std::int64_t> count_cap(std::size_t i) const;

  bool operator==(const ProblemInstance&) const = default;
};

/// Checks every ProblemInstance invariant; throws ValidationError naming the
/// offending field.
void validate(const ProblemInstance& instance);

/// Validates and returns the instance.
ProblemInstance make_instance(ProblemInstance instance);

/// Counts n_i, one per type position.
struct Mix {
  std::vector<std::int64_t> counts;

  std::int64_t total_signals() const noexcept;
  bool operator==(const Mix&) const = default;
};

/// Q, E, T of a mix. energy_units and time_units are the exact totals in
/// resolution units; energy and time are the same totals in natural units.
struct MixTotals {
  double quality = 0.0;
  double energy = 0.0;
  double time = 0.0;
  std::int64_t energy_units = 0;
  std::int64_t time_units = 0;
  bool feasible = true;

  bool operator==(const MixTotals&) const = default;
};

enum class SolveStatus { kProvenOptimal, kHeuristic, kEnumeratedOptimal };

std::string_view to_string(SolveStatus status);
SolveStatus parse_status(std::string_view text);

struct Solution {
  Mix mix;
  MixTotals totals;
  SolveStatus status = SolveStatus::kHeuristic;
  std::string solver_name;
  std::uint64_t nodes_explored = 0;
  double wall_time = 0.0;
};

/// Instance with energies, times and budgets converted to exact integers.
/// Quality values stay real. effective_caps[i] is the largest count of type
/// i that is feasible on its own: min(count cap, E_c / e_i, T_c / t_i).
struct ScaledInstance {
  ProblemInstance source;
  std::vector<std::int64_t> energy;
  std::vector<std::int64_t> time;
  std::int64_t energy_budget = 0;
  std::int64_t time_budget = 0;
  std::vector<std::int64_t> effective_caps;

  std::size_t size() const noexcept { return energy.size(); }
  double quality(std::size_t i) const { return source.types[i].quality; }
};

/// Converts a quantity to resolution units. Throws ResolutionError (naming
/// `what`) when value/resolution is not integral within relative 1e-9.
std::int64_t to_units(double value, double resolution, const std::string& what);

ScaledInstance scale_to_integers(const ProblemInstance& instance);

/// Parses and validates a scenario document (JSON). Throws ParseError or
/// ValidationError.
ProblemInstance load_scenario(std::string_view text);
ProblemInstance load_scenario_file(const std::string& path);

/// Renders a scenario document that load_scenario reads back identically.
std::string render_scenario(const ProblemInstance& instance);

MixTotals evaluate_mix(const ScaledInstance& instance, const Mix& mix);
MixTotals evaluate_mix(const ProblemInstance& instance, const Mix& mix);

/// Relative-1e-9 equality used for objective values.
bool quality_equal(double a, double b) noexcept;

/// Canonical ordering among candidate mixes: higher quality first; among
/// equal quality (quality_equal) lower energy, then lower time, then the
/// lexicographically smaller count vector. Returns true if `a` should
/// replace incumbent `b`.
bool canonical_better(double a_quality, std::int64_t a_energy_units,
                      std::int64_t a_time_units,
                      std::span<const std::int64_t> a_counts, double b_quality,
                      std::int64_t b_energy_units, std::int64_t b_time_units,
                      std::span<const std::int64_t> b_counts);

}  // namespace sigmix
