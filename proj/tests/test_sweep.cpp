#include "doctest.h"
#include "sigmix/oracle.hpp"
#include "sigmix/sweep.hpp"
#include "support/fixtures.hpp"

using namespace sigmix;
namespace fx = sigmix::testing;

TEST_CASE("energy-linear sweep") {
  const SweepSpec spec{fx::energy_case(5), SweepMode::kEnergyLinear, {5, 10, 20, 30, 40}};
  const auto report = run_sweep(spec, SolverKind::kExact);
  REQUIRE(report.cases.size() == 5);
  const std::vector<double> expected{120, 100, 50, 33, 25};
  const std::vector<double> energy{600, 1000, 1000, 990, 1000};
  const std::vector<double> time{24, 20, 10, 18.5, 6.5};
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(report.cases[k].solution.totals.quality == expected[k]);
    CHECK(report.cases[k].solution.totals.energy == energy[k]);
    if (k != 2) CHECK(report.cases[k].solution.totals.time == doctest::Approx(time[k]));
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(report.cases[k].instance.types[i].energy ==
            spec.factors[k] * spec.base.types[i].quality);
    if (k > 0)
      CHECK(report.cases[k].solution.totals.quality <= report.cases[k - 1].solution.totals.quality);
  }
  // Derived energies match the printed table columns.
  CHECK(report.cases[4].instance.types[0].energy == 80);
  CHECK(report.cases[4].instance.types[1].energy == 200);
  CHECK(report.cases[4].instance.types[2].energy == 400);
  CHECK(report.cases[0].solution.mix.counts == std::vector<std::int64_t>{0, 0, 12});
  CHECK(report.cases[3].solution.mix.counts == std::vector<std::int64_t>{4, 1, 2});
}

TEST_CASE("time-inverse sweep") {
  const SweepSpec spec{fx::basic_case(), SweepMode::kTimeInverse, {25, 50, 100, 150, 200}};
  const auto report = run_sweep(spec, SolverKind::kExact);
  const std::vector<double> expected{32, 30, 20, 10, 10};
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(report.cases[k].solution.totals.quality == expected[k]);
    CHECK(report.cases[k].instance.types[0].energy == 100);
  }
  CHECK(report.cases[0].instance.types[0].time == 12.5);
  CHECK(report.cases[0].solution.mix.counts == std::vector<std::int64_t>{1, 0, 3});

  const auto single = run_sweep({fx::basic_case(), SweepMode::kTimeInverse, {25}},
                                SolverKind::kGreedy);
  CHECK(single.cases.at(0).solution.totals.quality == 32);
}

TEST_CASE("sweep errors") {
  CHECK_THROWS_AS(run_sweep({fx::basic_case(), SweepMode::kTimeInverse, {}}, SolverKind::kExact),
                  ValidationError);
  try {
    run_sweep({fx::basic_case(), SweepMode::kTimeInverse, {1.1}}, SolverKind::kExact);
    FAIL("expected ResolutionError");
  } catch (const ResolutionError& e) {
    CHECK(std::string(e.what()).find("factor 1.1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_sweep_mode("sideways"), ValidationError);
}

TEST_CASE("sweep output formats") {
  const auto report = run_sweep({fx::energy_case(5), SweepMode::kEnergyLinear, {5, 40}},
                                SolverKind::kExact);
  CHECK(sweep_to_csv(report) ==
        "factor,n_1,n_2,n_3,quality,energy_used,time_used\n"
        "5,0,0,12,120,600,24\n"
        "40,0,1,2,25,1000,6.5\n");
  const auto table = sweep_to_table(report);
  CHECK(table.find("Quality") != std::string::npos);
  CHECK(table.find("120") != std::string::npos);
}
