#include "sigmix/planner.hpp"

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sigmix/solution_io.hpp"

namespace sigmix {

using nlohmann::json;

void validate(const EpochSchedule& schedule) {
  if (schedule.epochs.empty()) throw ValidationError("epochs", "at least one epoch required");
  std::set<std::string> labels;
  for (const auto& epoch : schedule.epochs) {
    if (!labels.insert(epoch.label).second)
      throw ValidationError("label", "duplicate epoch label '" + epoch.label + "'");
    try {
      validate(epoch.instance);
    } catch (const ValidationError& e) {
      throw ValidationError(epoch.label + "." + e.field(), e.what());
    }
  }
}

EpochSchedule load_schedule(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed schedule document: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("schedule document must be a JSON array");
  EpochSchedule schedule;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& node = doc[i];
    const std::string where = "epochs[" + std::to_string(i) + "]";
    if (!node.is_object()) throw ValidationError(where, "expected an object");
    for (const auto& [key, _] : node.items())
      if (key != "label" && key != "scenario") throw ValidationError(where + "." + key, "unknown key");
    if (!node.contains("label") || !node["label"].is_string())
      throw ValidationError(where + ".label", "expected a string");
    if (!node.contains("scenario")) throw ValidationError(where + ".scenario", "missing");
    Epoch epoch;
    epoch.label = node["label"].get<std::string>();
    try {
      epoch.instance = load_scenario(node["scenario"].dump());
    } catch (const ValidationError& e) {
      throw ValidationError(where + ".scenario." + e.field(), e.what());
    }
    schedule.epochs.push_back(std::move(epoch));
  }
  validate(schedule);
  return schedule;
}

EpochSchedule load_schedule_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open schedule file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_schedule(buffer.str());
}

std::vector<EpochResult> plan_epochs(const EpochSchedule& schedule, SolverKind solver) {
  validate(schedule);
  std::vector<EpochResult> plan;
  plan.reserve(schedule.epochs.size());
  for (const auto& epoch : schedule.epochs) {
    try {
      plan.emplace_back(epoch.label, solve(epoch.instance, solver));
    } catch (const SolverError& e) {
      throw SolverError("epoch '" + epoch.label + "': " + e.what());
    } catch (const ResolutionError& e) {
      throw ResolutionError("epoch '" + epoch.label + "': " + e.what());
    }
  }
  return plan;
}

std::string plan_to_json(const EpochSchedule& schedule, const std::vector<EpochResult>& plan,
                         SolutionFormat format) {
  json doc = json::array();
  for (std::size_t k = 0; k < plan.size(); ++k) {
    const auto& [label, solution] = plan[k];
    json entry = json::parse(solution_to_json(schedule.epochs[k].instance, solution, format));
    doc.push_back({{"label", label}, {"solution", std::move(entry)}});
  }
  return doc.dump(2) + "\n";
}

std::string plan_to_csv(const EpochSchedule& schedule, const std::vector<EpochResult>& plan) {
  std::ostringstream out;
  out << "label,solver,status,counts,quality,energy,time\n";
  for (std::size_t k = 0; k < plan.size(); ++k) {
    const auto& [label, solution] = plan[k];
    out << label << ',' << solution.solver_name << ',' << to_string(solution.status) << ',';
    for (std::size_t i = 0; i < solution.mix.counts.size(); ++i)
      out << (i ? ";" : "") << schedule.epochs[k].instance.types[i].id << ':'
          << solution.mix.counts[i];
    out << ',' << format_number(solution.totals.quality) << ','
        << format_number(solution.totals.energy) << ',' << format_number(solution.totals.time)
        << '\n';
  }
  return out.str();
}

std::string plan_to_table(const EpochSchedule&, const std::vector<EpochResult>& plan) {
  std::size_t width = 5;
  for (const auto& [label, _] : plan) width = std::max(width, label.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width) + 2) << "epoch" << std::right
      << std::setw(10) << "quality" << std::setw(10) << "energy" << std::setw(10) << "time"
      << "  mix\n";
  for (std::size_t k = 0; k < plan.size(); ++k) {
    const auto& [label, solution] = plan[k];
    out << std::left << std::setw(static_cast<int>(width) + 2) << label << std::right
        << std::setw(10) << format_number(solution.totals.quality) << std::setw(10)
        << format_number(solution.totals.energy) << std::setw(10)
        << format_number(solution.totals.time) << "  (";
    for (std::size_t i = 0; i < solution.mix.counts.size(); ++i)
      out << (i ? "," : "") << solution.mix.counts[i];
    out << ")\n";
  }
  return out.str();
}

}  // namespace sigmix
