#include "sigmix/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sigmix/bench.hpp"
#include "sigmix/planner.hpp"
#include "sigmix/solution_io.hpp"
#include "sigmix/solver.hpp"
#include "sigmix/sweep.hpp"

namespace sigmix {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ','))
    if (!item.empty()) items.push_back(item);
  return items;
}

std::vector<double> parse_factors(const std::string& text) {
  std::vector<double> factors;
  for (const auto& item : split_list(text)) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw ValidationError("factors", "bad number '" + item + "'");
    factors.push_back(value);
  }
  if (factors.empty()) throw ValidationError("factors", "at least one factor required");
  return factors;
}

std::string label_for(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signal-mix optimizer: choose how many signals of each type maximize quality "
               "under energy, time and per-type budgets."};
  app.name("sigmix");
  app.require_subcommand(1);

  std::string format = "table";
  std::string solver_name = "exact";
  bool emit_timing = false;
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
  };

  std::string scenario_path;
  auto* optimize = app.add_subcommand("optimize", "Solve one scenario");
  optimize->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  optimize->add_option("--solver", solver_name, "exact | greedy | oracle");
  optimize->add_flag("--emit-timing", emit_timing, "Include solve wall time");
  add_format(optimize);

  std::string mode = "energy-linear";
  std::string factors_text;
  auto* sweep = app.add_subcommand("sweep", "Solve a family of derived scenarios");
  sweep->add_option("scenario", scenario_path, "Base scenario JSON file")->required();
  sweep->add_option("--mode", mode, "energy-linear | time-inverse");
  sweep->add_option("--factors", factors_text, "Comma-separated factors")->required();
  sweep->add_option("--solver", solver_name, "exact | greedy | oracle");
  add_format(sweep);

  std::vector<std::string> bench_paths;
  std::string bench_solvers = "exact,greedy";
  int trials = 20;
  auto* bench = app.add_subcommand("bench", "Time solvers over repeated trials");
  bench->add_option("scenarios", bench_paths, "Scenario JSON files")->required();
  bench->add_option("--solver", bench_solvers, "Comma-separated solvers");
  bench->add_option("--trials", trials, "Trials per solver");
  add_format(bench);

  std::string schedule_path;
  auto* plan = app.add_subcommand("plan", "Re-optimize each epoch of a schedule");
  plan->add_option("schedule", schedule_path, "Schedule JSON file")->required();
  plan->add_option("--solver", solver_name, "exact | greedy | oracle");
  plan->add_flag("--emit-timing", emit_timing, "Include solve wall time (json only)");
  add_format(plan);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  try {
    if (optimize->parsed()) {
      const auto instance = load_scenario_file(scenario_path);
      const auto solution = solve(instance, parse_solver(solver_name));
      const SolutionFormat fmt{emit_timing};
      if (format == "json")
        out << solution_to_json(instance, solution, fmt);
      else if (format == "csv")
        out << solution_to_csv(instance, solution, fmt);
      else
        out << solution_to_table(instance, solution, fmt);
    } else if (sweep->parsed()) {
      SweepSpec spec{load_scenario_file(scenario_path), parse_sweep_mode(mode),
                     parse_factors(factors_text)};
      const auto report = run_sweep(spec, parse_solver(solver_name));
      if (format == "json")
        out << sweep_to_json(report);
      else if (format == "csv")
        out << sweep_to_csv(report);
      else
        out << sweep_to_table(report);
    } else if (bench->parsed()) {
      std::vector<SolverKind> kinds;
      for (const auto& name : split_list(bench_solvers)) kinds.push_back(parse_solver(name));
      std::vector<BenchReport> reports;
      for (const auto& path : bench_paths)
        reports.push_back(run_benchmark(load_scenario_file(path), kinds, trials, label_for(path)));
      if (format == "json")
        out << bench_to_json(reports);
      else if (format == "csv")
        out << bench_to_csv(reports);
      else
        out << bench_to_table(reports);
    } else if (plan->parsed()) {
      const auto schedule = load_schedule_file(schedule_path);
      const auto results = plan_epochs(schedule, parse_solver(solver_name));
      if (format == "json")
        out << plan_to_json(schedule, results, SolutionFormat{emit_timing});
      else if (format == "csv")
        out << plan_to_csv(schedule, results);
      else
        out << plan_to_table(schedule, results);
    }
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << '\n';
    return kExitSolverError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace sigmix
