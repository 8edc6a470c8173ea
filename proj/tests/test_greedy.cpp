#include <algorithm>
#include <random>

#include "doctest.h"
#include "sigmix/exact.hpp"
#include "sigmix/greedy.hpp"
#include "support/fixtures.hpp"

using namespace sigmix;
namespace fx = sigmix::testing;

TEST_CASE("type_score") {
  const auto t5 = fx::table5(7);
  CHECK(type_score(t5.types[2]) == doctest::Approx(10.0 / 600.0).epsilon(1e-12));
  CHECK(type_score(SignalType{1, 1, 1, 1}) == 1.0);
  CHECK(type_score(t5.types[4]) == doctest::Approx(12.0 / 525.0).epsilon(1e-12));
  for (const auto& t : t5.types) CHECK(type_score(t) <= type_score(t5.types[4]));
  CHECK(score_order(t5) == std::vector<std::size_t>{4, 2, 3, 5, 0, 1, 6});
}

TEST_CASE("score ties go to the lower id") {
  auto inst = fx::three_types({2, 2, 4}, {10, 10, 10}, {1, 1, 2}, 100, 10);
  CHECK(score_order(inst) == std::vector<std::size_t>{0, 1, 2});
  std::swap(inst.types[0], inst.types[1]);
  CHECK(score_order(inst) == std::vector<std::size_t>{1, 0, 2});
}

TEST_CASE("solve_greedy reference cases") {
  SUBCASE("basic case") {
    const auto s = solve_greedy(fx::basic_case());
    CHECK(s.mix.counts == std::vector<std::int64_t>{1, 0, 3});
    CHECK(s.totals.quality == 32);
    CHECK(s.status == SolveStatus::kHeuristic);
    CHECK(s.nodes_explored == 0);
    CHECK(s.solver_name == "greedy");
  }
  SUBCASE("single type") {
    const auto s = solve_greedy(fx::three_types({10}, {300}, {2}, 1000, 25));
    CHECK(s.mix.counts == std::vector<std::int64_t>{3});
    CHECK(s.totals.quality == 30);
  }
  SUBCASE("cap 30") {
    const auto s = solve_greedy(fx::cap_study(30));
    CHECK(s.mix.counts == std::vector<std::int64_t>{0, 5, 30});
    CHECK(s.totals.quality == 325);
  }
  SUBCASE("seven types") {
    const auto s = solve_greedy(fx::table5(7));
    CHECK(s.mix.counts == std::vector<std::int64_t>{0, 0, 10, 0, 20, 0, 0});
    CHECK(s.totals.quality == 340);
  }
  SUBCASE("continues past a blocked type") {
    // Type 3 (best score) uses the energy down to 100; type 2 is blocked,
    // type 1 still fits.
    const auto s = solve_greedy(fx::basic_case());
    CHECK(s.mix.counts[1] == 0);
    CHECK(s.mix.counts[0] == 1);
  }
}

TEST_CASE("greedy can be strictly worse than exact") {
  // Type 1 scores higher but a single copy wastes most of the energy.
  const auto inst = fx::three_types({6, 5}, {51, 50}, {1, 1}, 100, 100);
  const auto g = solve_greedy(inst);
  const auto e = solve_exact(inst);
  CHECK(g.mix.counts == std::vector<std::int64_t>{1, 0});
  CHECK(g.totals.quality == 6);
  CHECK(e.totals.quality == 10);
}

TEST_CASE("greedy properties on random instances") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 300; ++k) {
    const auto inst = fx::random_instance(rng);
    const auto g = solve_greedy(inst);
    CHECK(g.totals.feasible);
    CHECK(g.totals == evaluate_mix(inst, g.mix));
    CHECK(g.totals.quality <= solve_exact(inst).totals.quality * (1 + 1e-9));
    CHECK(solve_greedy(inst).mix == g.mix);

    auto permuted = inst;
    std::shuffle(permuted.types.begin(), permuted.types.end(), rng);
    if (inst.per_type_caps_override) permuted.per_type_caps_override.reset();
    CHECK(solve_greedy(permuted).totals.quality == doctest::Approx(g.totals.quality));

    ProblemInstance single = inst;
    single.types.resize(1);
    single.per_type_caps_override.reset();
    CHECK(solve_greedy(single).totals.quality ==
          doctest::Approx(solve_exact(single).totals.quality));
  }
}
