#pragma once

#include "sigmix/model.hpp"

namespace sigmix {

inline constexpr double kOracleMixLimit = 1e7;

/// Product over types of (effective cap + 1): the number of count vectors
/// solve_brute would enumerate.
double enumeration_size(const ScaledInstance& instance);

/// Enumerates every count vector within the effective caps and keeps the
/// canonical best feasible one. Throws SearchSpaceTooLarge when
/// enumeration_size exceeds `limit`.
Solution solve_brute(const ScaledInstance& instance, double limit = kOracleMixLimit);
Solution solve_brute(const ProblemInstance& instance, double limit = kOracleMixLimit);

}  // namespace sigmix
