#include "sigmix/solution_io.hpp"

#include <array>
#include <charconv>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace sigmix {

using nlohmann::json;

std::string format_number(double value) {
  std::array<char, 64> buffer{};
  auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc{}) return std::to_string(value);
  return std::string(buffer.data(), end);
}

std::string solution_to_json(const ProblemInstance& instance, const Solution& solution,
                             SolutionFormat format) {
  json ids = json::array();
  for (const auto& t : instance.types) ids.push_back(t.id);
  json doc = {
      {"solver", solution.solver_name},
      {"status", std::string(to_string(solution.status))},
      {"ids", std::move(ids)},
      {"counts", solution.mix.counts},
      {"total_signals", solution.mix.total_signals()},
      {"quality", solution.totals.quality},
      {"energy", solution.totals.energy},
      {"time", solution.totals.time},
      {"energy_units", solution.totals.energy_units},
      {"time_units", solution.totals.time_units},
      {"feasible", solution.totals.feasible},
      {"nodes_explored", solution.nodes_explored},
  };
  if (format.emit_timing) doc["wall_time_s"] = solution.wall_time;
  return doc.dump(2) + "\n";
}

Solution solution_from_json(const ProblemInstance& instance, std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed solution document: ") + e.what());
  }
  try {
    Solution solution;
    solution.solver_name = doc.at("solver").get<std::string>();
    solution.status = parse_status(doc.at("status").get<std::string>());
    solution.mix.counts = doc.at("counts").get<std::vector<std::int64_t>>();
    solution.nodes_explored = doc.at("nodes_explored").get<std::uint64_t>();
    if (doc.contains("wall_time_s")) solution.wall_time = doc["wall_time_s"].get<double>();
    solution.totals = evaluate_mix(instance, solution.mix);
    return solution;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid solution document: ") + e.what());
  }
}

std::string solution_to_table(const ProblemInstance& instance, const Solution& solution,
                              SolutionFormat format) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "type" << std::right << std::setw(10) << "quality"
      << std::setw(10) << "energy" << std::setw(10) << "time" << std::setw(8) << "count"
      << '\n';
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const auto& t = instance.types[i];
    out << std::left << std::setw(6) << t.id << std::right << std::setw(10)
        << format_number(t.quality) << std::setw(10) << format_number(t.energy)
        << std::setw(10) << format_number(t.time) << std::setw(8) << solution.mix.counts[i]
        << '\n';
  }
  out << '\n'
      << "quality   " << format_number(solution.totals.quality) << '\n'
      << "energy    " << format_number(solution.totals.energy) << " / "
      << format_number(instance.energy_budget) << '\n'
      << "time      " << format_number(solution.totals.time) << " / "
      << format_number(instance.time_budget) << '\n'
      << "signals   " << solution.mix.total_signals() << '\n'
      << "solver    " << solution.solver_name << " (" << to_string(solution.status) << ")\n"
      << "nodes     " << solution.nodes_explored << '\n';
  if (format.emit_timing) out << "wall time " << format_number(solution.wall_time) << " s\n";
  return out.str();
}

std::string solution_to_csv(const ProblemInstance& instance, const Solution& solution,
                            SolutionFormat format) {
  std::ostringstream out;
  out << "solver,status";
  for (const auto& t : instance.types) out << ",n_" << t.id;
  out << ",quality,energy,time,nodes_explored";
  if (format.emit_timing) out << ",wall_time_s";
  out << '\n' << solution.solver_name << ',' << to_string(solution.status);
  for (auto c : solution.mix.counts) out << ',' << c;
  out << ',' << format_number(solution.totals.quality) << ','
      << format_number(solution.totals.energy) << ',' << format_number(solution.totals.time)
      << ',' << solution.nodes_explored;
  if (format.emit_timing) out << ',' << format_number(solution.wall_time);
  out << '\n';
  return out.str();
}

}  // namespace sigmix
