#include "sigmix/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "json.hpp"
#include "sigmix/solution_io.hpp"

namespace sigmix {

namespace {

double parse_double(std::string_view field, const std::string& what) {
  double value = 0.0;
  auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || end != field.data() + field.size())
    throw ParseError("bad " + what + " '" + std::string(field) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(sep, start);
    parts.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

BenchReport summarize(std::string instance_label, std::vector<BenchEntry> entries) {
  BenchReport report;
  report.instance_label = std::move(instance_label);
  std::vector<std::string> order;
  std::map<std::string, std::vector<const BenchEntry*>> by_solver;
  for (const auto& e : entries) {
    if (!by_solver.count(e.solver)) order.push_back(e.solver);
    by_solver[e.solver].push_back(&e);
  }
  for (const auto& name : order) {
    const auto& runs = by_solver[name];
    const int count = static_cast<int>(runs.size());
    if (report.summary.empty())
      report.trials = count;
    else if (count != report.trials)
      throw ValidationError("trials", "solver '" + name + "' has " + std::to_string(count) +
                                          " trials, expected " + std::to_string(report.trials));
    SolverSummary s;
    s.solver = name;
    s.min = runs.front()->wall_time;
    s.max = runs.front()->wall_time;
    for (const auto* r : runs) {
      s.mean += r->wall_time;
      s.min = std::min(s.min, r->wall_time);
      s.max = std::max(s.max, r->wall_time);
    }
    s.mean /= count;
    for (const auto* r : runs) s.stddev += (r->wall_time - s.mean) * (r->wall_time - s.mean);
    s.stddev = std::sqrt(s.stddev / count);
    report.summary.push_back(std::move(s));
  }
  report.agreed_quality = true;
  for (const auto& e : entries)
    if (!quality_equal(e.quality, entries.front().quality)) report.agreed_quality = false;
  report.entries = std::move(entries);
  return report;
}

BenchReport run_benchmark(const ProblemInstance& instance, const std::vector<SolverKind>& solvers,
                          int trials, std::string instance_label) {
  if (trials < 1) throw ValidationError("trials", "must be at least 1");
  if (solvers.empty()) throw ValidationError("solvers", "at least one solver required");
  validate(instance);
  std::vector<BenchEntry> entries;
  entries.reserve(solvers.size() * static_cast<std::size_t>(trials));
  for (SolverKind kind : solvers) {
    for (int trial = 1; trial <= trials; ++trial) {
      const auto start = std::chrono::steady_clock::now();
      const Solution solution = solve(instance, kind);
      const auto stop = std::chrono::steady_clock::now();
      entries.push_back({std::string(to_string(kind)), trial,
                         std::chrono::duration<double>(stop - start).count(),
                         solution.totals.quality});
    }
  }
  return summarize(std::move(instance_label), std::move(entries));
}

std::string bench_to_csv(const std::vector<BenchReport>& reports) {
  std::ostringstream out;
  out << "instance_label,solver,trial,wall_time_s,quality\n";
  for (const auto& report : reports)
    for (const auto& e : report.entries)
      out << report.instance_label << ',' << e.solver << ',' << e.trial << ','
          << format_number(e.wall_time) << ',' << format_number(e.quality) << '\n';
  return out.str();
}

std::vector<BenchReport> bench_from_csv(std::string_view text) {
  std::vector<std::string> labels;
  std::map<std::string, std::vector<BenchEntry>> grouped;
  bool header = true;
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (line.empty()) continue;
    if (header) {
      if (line != "instance_label,solver,trial,wall_time_s,quality")
        throw ParseError("unexpected bench CSV header");
      header = false;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 5)
      throw ParseError("bench CSV line " + std::to_string(line_no) + ": expected 5 columns");
    const std::string label(fields[0]);
    if (!grouped.count(label)) labels.push_back(label);
    BenchEntry e;
    e.solver = std::string(fields[1]);
    e.trial = static_cast<int>(parse_double(fields[2], "trial"));
    e.wall_time = parse_double(fields[3], "wall_time_s");
    e.quality = parse_double(fields[4], "quality");
    grouped[label].push_back(std::move(e));
  }
  std::vector<BenchReport> reports;
  for (const auto& label : labels) reports.push_back(summarize(label, std::move(grouped[label])));
  return reports;
}

std::string bench_to_json(const std::vector<BenchReport>& reports) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& report : reports) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : report.entries)
      entries.push_back({{"solver", e.solver},
                         {"trial", e.trial},
                         {"wall_time_s", e.wall_time},
                         {"quality", e.quality}});
    nlohmann::json summary = nlohmann::json::array();
    for (const auto& s : report.summary)
      summary.push_back({{"solver", s.solver},
                         {"mean", s.mean},
                         {"min", s.min},
                         {"max", s.max},
                         {"stddev", s.stddev}});
    doc.push_back({{"instance_label", report.instance_label},
                   {"trials", report.trials},
                   {"agreed_quality", report.agreed_quality},
                   {"entries", std::move(entries)},
                   {"summary", std::move(summary)}});
  }
  return doc.dump(2) + "\n";
}

std::string bench_to_table(const std::vector<BenchReport>& reports) {
  struct Column {
    std::string title;
    std::vector<double> times;
    const SolverSummary* summary;
  };
  std::vector<Column> columns;
  int rows = 0;
  for (const auto& report : reports) {
    rows = std::max(rows, report.trials);
    for (const auto& s : report.summary) {
      Column col{s.solver + " " + report.instance_label, {}, &s};
      for (const auto& e : report.entries)
        if (e.solver == s.solver) col.times.push_back(e.wall_time);
      columns.push_back(std::move(col));
    }
  }
  std::size_t width = 14;
  for (const auto& c : columns) width = std::max(width, c.title.size() + 2);
  const int w = static_cast<int>(width);

  std::ostringstream out;
  out << std::fixed << std::setprecision(9);
  out << std::left << std::setw(7) << "Trial" << std::right;
  for (const auto& c : columns) out << std::setw(w) << c.title;
  out << '\n';
  for (int r = 0; r < rows; ++r) {
    out << std::left << std::setw(7) << r + 1 << std::right;
    for (const auto& c : columns) {
      if (r < static_cast<int>(c.times.size()))
        out << std::setw(w) << c.times[r];
      else
        out << std::setw(w) << "";
    }
    out << '\n';
  }
  const auto stat_row = [&](const char* label, double SolverSummary::*field) {
    out << std::left << std::setw(7) << label << std::right;
    for (const auto& c : columns) out << std::setw(w) << c.summary->*field;
    out << '\n';
  };
  stat_row("Avg", &SolverSummary::mean);
  stat_row("Min", &SolverSummary::min);
  stat_row("Max", &SolverSummary::max);
  stat_row("Std", &SolverSummary::stddev);
  for (const auto& report : reports)
    out << report.instance_label << ": qualities "
        << (report.agreed_quality ? "agree" : "DISAGREE") << '\n';
  return out.str();
}

}  // namespace sigmix
