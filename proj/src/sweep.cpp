#include "sigmix/sweep.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "sigmix/solution_io.hpp"

namespace sigmix {

SweepMode parse_sweep_mode(std::string_view text) {
  if (text == "energy-linear") return SweepMode::kEnergyLinear;
  if (text == "time-inverse") return SweepMode::kTimeInverse;
  throw ValidationError("mode", "expected energy-linear or time-inverse, got '" +
                                    std::string(text) + "'");
}

std::string_view to_string(SweepMode mode) {
  return mode == SweepMode::kEnergyLinear ? "energy-linear" : "time-inverse";
}

ProblemInstance derive_instance(const ProblemInstance& base, SweepMode mode, double factor) {
  if (!std::isfinite(factor) || factor <= 0.0)
    throw ValidationError("factors", "factor " + format_number(factor) + " must be > 0");
  ProblemInstance derived = base;
  for (auto& type : derived.types) {
    if (mode == SweepMode::kEnergyLinear)
      type.energy = factor * type.quality;
    else
      type.time = factor / type.quality;
  }
  try {
    scale_to_integers(derived);
  } catch (const ResolutionError& e) {
    throw ResolutionError("factor " + format_number(factor) + ": " + e.what());
  }
  return derived;
}

SweepReport run_sweep(const SweepSpec& spec, SolverKind solver) {
  if (spec.factors.empty()) throw ValidationError("factors", "at least one factor required");
  validate(spec.base);
  SweepReport report;
  report.mode = spec.mode;
  report.cases.reserve(spec.factors.size());
  for (double factor : spec.factors) {
    SweepCase c;
    c.factor = factor;
    c.instance = derive_instance(spec.base, spec.mode, factor);
    try {
      c.solution = solve(c.instance, solver);
    } catch (const SolverError& e) {
      throw SolverError("factor " + format_number(factor) + ": " + e.what());
    }
    report.cases.push_back(std::move(c));
  }
  return report;
}

std::string sweep_to_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "factor";
  if (!report.cases.empty())
    for (const auto& t : report.cases.front().instance.types) out << ",n_" << t.id;
  out << ",quality,energy_used,time_used\n";
  for (const auto& c : report.cases) {
    out << format_number(c.factor);
    for (auto n : c.solution.mix.counts) out << ',' << n;
    out << ',' << format_number(c.solution.totals.quality) << ','
        << format_number(c.solution.totals.energy) << ','
        << format_number(c.solution.totals.time) << '\n';
  }
  return out.str();
}

std::string sweep_to_table(const SweepReport& report) {
  constexpr int kLabel = 12;
  constexpr int kColumn = 10;
  std::ostringstream out;
  out << std::left << std::setw(kLabel) << "Type/case" << std::right;
  for (std::size_t j = 0; j < report.cases.size(); ++j) out << std::setw(kColumn) << j + 1;
  out << '\n' << std::left << std::setw(kLabel) << "factor" << std::right;
  for (const auto& c : report.cases) out << std::setw(kColumn) << format_number(c.factor);
  out << '\n';
  if (!report.cases.empty()) {
    const auto& types = report.cases.front().instance.types;
    for (std::size_t i = 0; i < types.size(); ++i) {
      out << std::left << std::setw(kLabel) << types[i].id << std::right;
      for (const auto& c : report.cases) out << std::setw(kColumn) << c.solution.mix.counts[i];
      out << '\n';
    }
  }
  const auto row = [&](const char* label, auto field) {
    out << std::left << std::setw(kLabel) << label << std::right;
    for (const auto& c : report.cases) out << std::setw(kColumn) << format_number(field(c));
    out << '\n';
  };
  row("Quality", [](const SweepCase& c) { return c.solution.totals.quality; });
  row("Energy", [](const SweepCase& c) { return c.solution.totals.energy; });
  row("Time", [](const SweepCase& c) { return c.solution.totals.time; });
  return out.str();
}

std::string sweep_to_json(const SweepReport& report) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : report.cases)
    cases.push_back({{"factor", c.factor},
                     {"solver", c.solution.solver_name},
                     {"status", std::string(to_string(c.solution.status))},
                     {"counts", c.solution.mix.counts},
                     {"quality", c.solution.totals.quality},
                     {"energy_used", c.solution.totals.energy},
                     {"time_used", c.solution.totals.time}});
  nlohmann::json doc = {{"mode", std::string(to_string(report.mode))},
                        {"cases", std::move(cases)}};
  return doc.dump(2) + "\n";
}

}  // namespace sigmix
