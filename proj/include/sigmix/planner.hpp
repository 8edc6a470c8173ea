#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sigmix/model.hpp"
#include "sigmix/solution_io.hpp"
#include "sigmix/solver.hpp"

namespace sigmix {

struct Epoch {
  std::string label;
  ProblemInstance instance;
};

/// Ordered epochs, each re-optimized independently. At least one epoch,
/// labels unique.
struct EpochSchedule {
  std::vector<Epoch> epochs;
};

void validate(const EpochSchedule& schedule);

/// Reads a JSON array of {"label": ..., "scenario": {...}} objects.
EpochSchedule load_schedule(std::string_view text);
EpochSchedule load_schedule_file(const std::string& path);

using EpochResult = std::pair<std::string, Solution>;

/// One solution per epoch, in schedule order. Errors are rethrown with the
/// epoch label in the message; solver failures stay SolverError.
std::vector<EpochResult> plan_epochs(const EpochSchedule& schedule, SolverKind solver);

std::string plan_to_json(const EpochSchedule& schedule, const std::vector<EpochResult>& plan,
                         SolutionFormat format = {});
std::string plan_to_csv(const EpochSchedule& schedule, const std::vector<EpochResult>& plan);
std::string plan_to_table(const EpochSchedule& schedule, const std::vector<EpochResult>& plan);

}  // namespace sigmix
