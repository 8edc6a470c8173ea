#pragma once

#include <cstdint>
#include <vector>

#include "sigmix/model.hpp"

namespace sigmix {

/// Partial assignment in the branch-and-bound tree. Types are visited in
/// score_order(); `depth` is the position in that order of the next type to
/// assign. fixed_counts is indexed by type position and holds zeros for
/// types not yet assigned.
struct SearchNode {
  std::size_t depth = 0;
  std::vector<std::int64_t> fixed_counts;
  std::int64_t remaining_energy = 0;
  std::int64_t remaining_time = 0;
  double partial_quality = 0.0;
};

/// Root node: nothing assigned, full budgets.
SearchNode root_node(const ScaledInstance& instance);

/// Admissible bound on the best total quality reachable from `node`:
/// partial_quality + min(energy relaxation, time relaxation), where each
/// relaxation is the fractional bounded knapsack over the unassigned types
/// against one remaining budget.
double upper_bound(const SearchNode& node, const ScaledInstance& instance);

struct ExactOptions {
  std::uint64_t node_limit = 50'000'000;
};

/// Depth-first branch-and-bound, seeded with the greedy solution. Returns
/// the canonical optimum (see canonical_better). Throws
/// SearchBudgetExhausted when more than options.node_limit nodes are needed.
Solution solve_exact(const ScaledInstance& instance, const ExactOptions& options = {});
Solution solve_exact(const ProblemInstance& instance, const ExactOptions& options = {});

}  // namespace sigmix
