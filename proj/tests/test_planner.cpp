#include "doctest.h"
#include "sigmix/planner.hpp"
#include "support/fixtures.hpp"

using namespace sigmix;
namespace fx = sigmix::testing;

TEST_CASE("plan_epochs over the energy-linear cases") {
  EpochSchedule schedule;
  for (double f : {5, 10, 20, 30, 40})
    schedule.epochs.push_back({"f" + std::to_string(static_cast<int>(f)), fx::energy_case(f)});
  const auto plan = plan_epochs(schedule, SolverKind::kExact);
  REQUIRE(plan.size() == 5);
  const std::vector<double> expected{120, 100, 50, 33, 25};
  for (std::size_t k = 0; k < plan.size(); ++k) {
    CHECK(plan[k].first == schedule.epochs[k].label);
    CHECK(plan[k].second.totals.quality == expected[k]);
    CHECK(plan[k].second.mix == solve(schedule.epochs[k].instance, SolverKind::kExact).mix);
  }
}

TEST_CASE("plan_epochs edge cases") {
  const auto one = plan_epochs({{{"now", fx::basic_case()}}}, SolverKind::kExact);
  REQUIRE(one.size() == 1);
  CHECK(one[0].second.totals.quality == 32);

  const auto twins =
      plan_epochs({{{"a", fx::basic_case()}, {"b", fx::basic_case()}}}, SolverKind::kGreedy);
  CHECK(twins[0].second.mix == twins[1].second.mix);
  CHECK(twins[0].second.totals == twins[1].second.totals);

  CHECK_THROWS_AS(plan_epochs({}, SolverKind::kExact), ValidationError);
  CHECK_THROWS_AS(plan_epochs({{{"a", fx::basic_case()}, {"a", fx::basic_case()}}},
                              SolverKind::kExact),
                  ValidationError);
  try {
    plan_epochs({{{"big", fx::table5(7)}}}, SolverKind::kOracle);
    FAIL("expected SolverError");
  } catch (const SolverError& e) {
    CHECK(std::string(e.what()).find("epoch 'big'") != std::string::npos);
  }
}

TEST_CASE("load_schedule") {
  const auto schedule = load_schedule(R"([
    {"label": "dawn", "scenario": {"types": [{"id": 1, "quality": 10, "energy": 300, "time": 2}],
                                   "energy_budget": 1000, "time_budget": 25}},
    {"label": "dusk", "scenario": {"types": [{"id": 1, "quality": 10, "energy": 300, "time": 2}],
                                   "energy_budget": 600, "time_budget": 25}}])");
  REQUIRE(schedule.epochs.size() == 2);
  CHECK(schedule.epochs[1].label == "dusk");
  const auto plan = plan_epochs(schedule, SolverKind::kExact);
  CHECK(plan[0].second.totals.quality == 30);
  CHECK(plan[1].second.totals.quality == 20);

  CHECK_THROWS_AS(load_schedule("{}"), ParseError);
  CHECK_THROWS_AS(load_schedule("[]"), ValidationError);
  CHECK_THROWS_AS(load_schedule(R"([{"label": "x"}])"), ValidationError);
  CHECK_THROWS_AS(load_schedule(R"([{"label": "x", "scenario": {"types": []}, "extra": 1}])"),
                  ValidationError);
}
