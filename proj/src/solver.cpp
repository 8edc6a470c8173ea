#include "sigmix/solver.hpp"

#include <string>

#include "sigmix/exact.hpp"
#include "sigmix/greedy.hpp"
#include "sigmix/oracle.hpp"

namespace sigmix {

SolverKind parse_solver(std::string_view name) {
  if (name == "exact") return SolverKind::kExact;
  if (name == "greedy") return SolverKind::kGreedy;
  if (name == "oracle") return SolverKind::kOracle;
  throw UnknownSolverError(std::string(name));
}

std::string_view to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::kExact: return "exact";
    case SolverKind::kGreedy: return "greedy";
    case SolverKind::kOracle: return "oracle";
  }
  return "unknown";
}

Solution solve(const ProblemInstance& instance, SolverKind kind) {
  switch (kind) {
    case SolverKind::kExact: return solve_exact(instance);
    case SolverKind::kGreedy: return solve_greedy(instance);
    case SolverKind::kOracle: return solve_brute(instance);
  }
  throw UnknownSolverError("?");
}

}  // namespace sigmix
