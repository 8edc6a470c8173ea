#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sigmix/model.hpp"
#include "sigmix/solver.hpp"

namespace sigmix {

struct BenchEntry {
  std::string solver;
  int trial = 0;  // 1-based
  double wall_time = 0.0;
  double quality = 0.0;

  bool operator==(const BenchEntry&) const = default;
};

struct SolverSummary {
  std::string solver;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  double stddev = 0.0;  // population

  bool operator==(const SolverSummary&) const = default;
};

struct BenchReport {
  std::string instance_label;
  int trials = 0;
  std::vector<BenchEntry> entries;
  std::vector<SolverSummary> summary;
  bool agreed_quality = true;
};

/// Runs every solver `trials` times, one run at a time, timing only the
/// solve call on a monotonic clock.
BenchReport run_benchmark(const ProblemInstance& instance, const std::vector<SolverKind>& solvers,
                          int trials, std::string instance_label = "instance");

/// Rebuilds summary and agreed_quality from entries. Throws ValidationError
/// if solvers do not all have the same trial count.
BenchReport summarize(std::string instance_label, std::vector<BenchEntry> entries);

/// instance_label,solver,trial,wall_time_s,quality for every report.
std::string bench_to_csv(const std::vector<BenchReport>& reports);

/// Parses bench_to_csv output back into reports (one per instance label, in
/// order of first appearance).
std::vector<BenchReport> bench_from_csv(std::string_view text);

/// Entries and per-solver summaries as a JSON array, one object per report.
std::string bench_to_json(const std::vector<BenchReport>& reports);

/// Trials as rows plus Avg/Min/Max/Std rows; one column per (instance, solver).
std::string bench_to_table(const std::vector<BenchReport>& reports);

}  // namespace sigmix
