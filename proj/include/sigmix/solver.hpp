#pragma once

#include <string_view>

#include "sigmix/model.hpp"

namespace sigmix {

enum class SolverKind { kExact, kGreedy, kOracle };

/// Throws UnknownSolverError for anything but exact, greedy or oracle.
SolverKind parse_solver(std::string_view name);
std::string_view to_string(SolverKind kind);

Solution solve(const ProblemInstance& instance, SolverKind kind);

}  // namespace sigmix
