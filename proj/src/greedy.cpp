#include "sigmix/greedy.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace sigmix {

double type_score(const SignalType& type) noexcept {
  return type.quality / (type.energy * type.time);
}

std::vector<std::size_t> score_order(const ProblemInstance& instance) {
  std::vector<std::size_t> order(instance.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double sa = type_score(instance.types[a]);
    const double sb = type_score(instance.types[b]);
    if (sa != sb) return sa > sb;
    return instance.types[a].id < instance.types[b].id;
  });
  return order;
}

Solution solve_greedy(const ScaledInstance& instance) {
  const auto start = std::chrono::steady_clock::now();
  Mix mix{std::vector<std::int64_t>(instance.size(), 0)};
  std::int64_t energy_left = instance.energy_budget;
  std::int64_t time_left = instance.time_budget;
  for (std::size_t i : score_order(instance.source)) {
    const std::int64_t n = std::min({instance.effective_caps[i], energy_left / instance.energy[i],
                                     time_left / instance.time[i]});
    mix.counts[i] = n;
    energy_left -= n * instance.energy[i];
    time_left -= n * instance.time[i];
  }
  Solution solution;
  solution.totals = evaluate_mix(instance, mix);
  solution.mix = std::move(mix);
  solution.status = SolveStatus::kHeuristic;
  solution.solver_name = "greedy";
  solution.nodes_explored = 0;
  solution.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return solution;
}

Solution solve_greedy(const ProblemInstance& instance) {
  return solve_greedy(scale_to_integers(instance));
}

}  // namespace sigmix
