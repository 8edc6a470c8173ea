#include "sigmix/oracle.hpp"

#include <chrono>

namespace sigmix {

double enumeration_size(const ScaledInstance& instance) {
  double product = 1.0;
  for (auto cap : instance.effective_caps) product *= static_cast<double>(cap) + 1.0;
  return product;
}

Solution solve_brute(const ScaledInstance& instance, double limit) {
  const auto start = std::chrono::steady_clock::now();
  const double size = enumeration_size(instance);
  if (size > limit) throw SearchSpaceTooLarge(size, limit);

  const std::size_t n = instance.size();
  std::vector<std::int64_t> counts(n, 0);
  std::vector<std::int64_t> best(n, 0);
  double best_quality = 0.0;
  std::int64_t best_energy = 0;
  std::int64_t best_time = 0;
  std::uint64_t visited = 0;

  // Odometer over counts; the first type is the fastest digit.
  while (true) {
    ++visited;
    double quality = 0.0;
    std::int64_t energy = 0;
    std::int64_t time = 0;
    for (std::size_t i = 0; i < n; ++i) {
      quality += static_cast<double>(counts[i]) * instance.quality(i);
      energy += counts[i] * instance.energy[i];
      time += counts[i] * instance.time[i];
    }
    if (energy <= instance.energy_budget && time <= instance.time_budget &&
        canonical_better(quality, energy, time, counts, best_quality, best_energy, best_time,
                         best)) {
      best = counts;
      best_quality = quality;
      best_energy = energy;
      best_time = time;
    }
    std::size_t digit = 0;
    while (digit < n && counts[digit] == instance.effective_caps[digit]) counts[digit++] = 0;
    if (digit == n) break;
    ++counts[digit];
  }

  Solution solution;
  solution.mix = Mix{std::move(best)};
  solution.totals = evaluate_mix(instance, solution.mix);
  solution.status = SolveStatus::kEnumeratedOptimal;
  solution.solver_name = "oracle";
  solution.nodes_explored = visited;
  solution.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return solution;
}

Solution solve_brute(const ProblemInstance& instance, double limit) {
  return solve_brute(scale_to_integers(instance), limit);
}

}  // namespace sigmix
