#pragma once

// Shared instances and test-only oracles. Nothing here calls the solvers.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "sigmix/model.hpp"

namespace sigmix::testing {

inline ProblemInstance three_types(std::vector<double> q, std::vector<double> e,
                                   std::vector<double> t, double energy_budget,
                                   double time_budget,
                                   std::optional<std::int64_t> cap = std::nullopt) {
  ProblemInstance inst;
  for (std::size_t i = 0; i < q.size(); ++i)
    inst.types.push_back({static_cast<int>(i + 1), q[i], e[i], t[i]});
  inst.energy_budget = energy_budget;
  inst.time_budget = time_budget;
  inst.per_type_cap = cap;
  return make_instance(std::move(inst));
}

inline ProblemInstance basic_case() {
  return three_types({2, 5, 10}, {100, 200, 300}, {3, 2.5, 2}, 1000, 25);
}

inline ProblemInstance energy_case(double factor) {
  return three_types({2, 5, 10}, {2 * factor, 5 * factor, 10 * factor}, {3, 2.5, 2}, 1000, 25);
}

inline ProblemInstance cap_study(std::optional<std::int64_t> cap) {
  return three_types({2, 5, 10}, {100, 200, 300}, {5, 2, 1}, 10000, 1000, cap);
}

inline ProblemInstance table5(std::size_t n_types) {
  const std::vector<double> q{5, 2, 10, 7, 12, 6, 1};
  const std::vector<double> e{200, 100, 300, 250, 350, 225, 50};
  const std::vector<double> t{2.5, 3, 2, 2.3, 1.5, 2.4, 3.5};
  return three_types({q.begin(), q.begin() + n_types}, {e.begin(), e.begin() + n_types},
                     {t.begin(), t.begin() + n_types}, 10000, 250, 20);
}

/// Random instance from the property corpus: 2-5 types, q in [1,20] on a 0.5
/// grid (integer half the time, to create ties), e integer in [10,500], t in
/// [0.5,5] on a 0.1 grid, budgets resampled until at most `max_mixes` count
/// vectors are enumerable.
inline ProblemInstance random_instance(std::mt19937_64& rng, double max_mixes = 1e5) {
  std::uniform_int_distribution<int> n_dist(2, 5);
  std::uniform_int_distribution<int> e_dist(10, 500);
  std::uniform_int_distribution<int> t_dist(5, 50);
  std::uniform_int_distribution<int> q_int(1, 20);
  std::uniform_int_distribution<int> q_half(2, 40);
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution capped(0.3);
  std::uniform_int_distribution<int> cap_dist(0, 8);
  while (true) {
    ProblemInstance inst;
    const int n = n_dist(rng);
    const bool integer_q = coin(rng);
    for (int i = 0; i < n; ++i) {
      const double q = integer_q ? q_int(rng) : q_half(rng) * 0.5;
      inst.types.push_back({i + 1, q, static_cast<double>(e_dist(rng)), t_dist(rng) / 10.0});
    }
    std::uniform_int_distribution<int> eb(20, 4000);
    std::uniform_int_distribution<int> tb(5, 400);
    inst.energy_budget = eb(rng);
    inst.time_budget = tb(rng) / 10.0;
    if (capped(rng)) inst.per_type_cap = cap_dist(rng);
    validate(inst);
    const auto scaled = scale_to_integers(inst);
    double product = 1;
    for (auto c : scaled.effective_caps) product *= static_cast<double>(c + 1);
    if (product <= max_mixes) return inst;
  }
}

/// Two-dimensional bounded-knapsack DP over (energy, time) in units reduced
/// by their gcds. Returns the optimal quality. Independent of the B&B and
/// the enumerator; used where enumeration is too large.
inline double dp_optimum(const ProblemInstance& inst) {
  const auto s = scale_to_integers(inst);
  // Every reachable total is a multiple of the cost gcd, so flooring the
  // budget by it loses nothing.
  std::int64_t ge = 0, gt = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    ge = std::gcd(ge, s.energy[i]);
    gt = std::gcd(gt, s.time[i]);
  }
  const std::int64_t E = s.energy_budget / ge;
  const std::int64_t T = s.time_budget / gt;
  const std::size_t width = static_cast<std::size_t>(T + 1);
  std::vector<double> best(static_cast<std::size_t>((E + 1) * (T + 1)), 0.0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::int64_t e = s.energy[i] / ge, t = s.time[i] / gt;
    std::int64_t cap = std::min(E / e, T / t);
    if (auto c = inst.count_cap(i)) cap = std::min(cap, *c);
    std::vector<double> next = best;
    for (std::int64_t k = 1; k <= cap; ++k)
      for (std::int64_t a = k * e; a <= E; ++a)
        for (std::int64_t b = k * t; b <= T; ++b) {
          const double v = best[static_cast<std::size_t>(a - k * e) * width +
                                static_cast<std::size_t>(b - k * t)] +
                           static_cast<double>(k) * inst.types[i].quality;
          auto& slot = next[static_cast<std::size_t>(a) * width + static_cast<std::size_t>(b)];
          slot = std::max(slot, v);
        }
    best = std::move(next);
  }
  return *std::max_element(best.begin(), best.end());
}

}  // namespace sigmix::testing
