#pragma once

#include <vector>

#include "sigmix/model.hpp"

namespace sigmix {

/// Greedy ordering key q / (e * t), on unscaled values.
double type_score(const SignalType& type) noexcept;

/// Type positions sorted by descending type_score, ties by lower id.
std::vector<std::size_t> score_order(const ProblemInstance& instance);

/// Single pass over score_order: each type is filled to the largest count
/// that still fits the remaining budgets and its cap. No backtracking.
Solution solve_greedy(const ScaledInstance& instance);
Solution solve_greedy(const ProblemInstance& instance);

}  // namespace sigmix
