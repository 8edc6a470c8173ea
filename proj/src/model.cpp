#include "sigmix/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

namespace sigmix {

namespace {

using nlohmann::json;

constexpr double kResolutionTolerance = 1e-9;
// Keeps every unit total well inside int64 even when multiplied by counts.
constexpr double kMaxUnits = 1e15;

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

double require_number(const json& node, const std::string& field) {
  if (!node.is_number()) throw ValidationError(field, "expected a number");
  return node.get<double>();
}

std::int64_t require_count(const json& node, const std::string& field) {
  if (!node.is_number_integer())
    throw ValidationError(field, "expected a non-negative integer");
  if (node.is_number_unsigned()) {
    auto v = node.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      throw ValidationError(field, "value out of range");
    return static_cast<std::int64_t>(v);
  }
  auto v = node.get<std::int64_t>();
  if (v < 0) throw ValidationError(field, "must be non-negative");
  return v;
}

void reject_unknown_keys(const json& object, std::initializer_list<const char*> known,
                         const std::string& where) {
  for (const auto& [key, _] : object.items()) {
    if (std::none_of(known.begin(), known.end(),
                     [&](const char* k) { return key == k; }))
      throw ValidationError(where + key, "unknown key");
  }
}

}  // namespace

std::optional<std::int64_t> ProblemInstance::count_cap(std::size_t i) const {
  if (per_type_caps_override) return (*per_type_caps_override)[i];
  return per_type_cap;
}

void validate(const ProblemInstance& instance) {
  if (instance.types.empty()) throw ValidationError("types", "at least one type required");
  std::set<int> ids;
  for (std::size_t i = 0; i < instance.types.size(); ++i) {
    const auto& t = instance.types[i];
    const std::string prefix = "types[" + std::to_string(i) + "].";
    if (!positive_finite(t.quality)) throw ValidationError(prefix + "quality", "must be > 0");
    if (!positive_finite(t.energy)) throw ValidationError(prefix + "energy", "must be > 0");
    if (!positive_finite(t.time)) throw ValidationError(prefix + "time", "must be > 0");
    if (!ids.insert(t.id).second) throw ValidationError(prefix + "id", "duplicate id");
  }
  const int n = static_cast<int>(instance.types.size());
  if (*ids.begin() != 1 || *ids.rbegin() != n)
    throw ValidationError("types.id", "ids must be contiguous from 1");
  if (!positive_finite(instance.energy_budget))
    throw ValidationError("energy_budget", "must be > 0");
  if (!positive_finite(instance.time_budget))
    throw ValidationError("time_budget", "must be > 0");
  if (instance.per_type_cap && *instance.per_type_cap < 0)
    throw ValidationError("per_type_cap", "must be non-negative");
  if (instance.per_type_caps_override) {
    const auto& caps = *instance.per_type_caps_override;
    if (caps.size() != instance.types.size())
      throw ValidationError("per_type_caps", "length " + std::to_string(caps.size()) +
                                                 " does not match " +
                                                 std::to_string(n) + " types");
    if (std::any_of(caps.begin(), caps.end(), [](auto c) { return c < 0; }))
      throw ValidationError("per_type_caps", "entries must be non-negative");
  }
  if (!positive_finite(instance.energy_resolution))
    throw ValidationError("energy_resolution", "must be > 0");
  if (!positive_finite(instance.time_resolution))
    throw ValidationError("time_resolution", "must be > 0");
}

ProblemInstance make_instance(ProblemInstance instance) {
  validate(instance);
  return instance;
}

std::int64_t Mix::total_signals() const noexcept {
  std::int64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kProvenOptimal: return "proven-optimal";
    case SolveStatus::kHeuristic: return "heuristic";
    case SolveStatus::kEnumeratedOptimal: return "enumerated-optimal";
  }
  return "unknown";
}

SolveStatus parse_status(std::string_view text) {
  if (text == "proven-optimal") return SolveStatus::kProvenOptimal;
  if (text == "heuristic") return SolveStatus::kHeuristic;
  if (text == "enumerated-optimal") return SolveStatus::kEnumeratedOptimal;
  throw ParseError("unknown solution status '" + std::string(text) + "'");
}

std::int64_t to_units(double value, double resolution, const std::string& what) {
  const double ratio = value / resolution;
  if (!std::isfinite(ratio) || std::abs(ratio) > kMaxUnits)
    throw ResolutionError(what + " is out of range for resolution " +
                          std::to_string(resolution));
  const double rounded = std::nearbyint(ratio);
  if (std::abs(ratio - rounded) > kResolutionTolerance * std::max(1.0, std::abs(rounded)))
    throw ResolutionError(what, value, resolution);
  return static_cast<std::int64_t>(rounded);
}

ScaledInstance scale_to_integers(const ProblemInstance& instance) {
  validate(instance);
  ScaledInstance scaled;
  scaled.source = instance;
  const std::size_t n = instance.size();
  scaled.energy.reserve(n);
  scaled.time.reserve(n);
  scaled.effective_caps.reserve(n);
  scaled.energy_budget =
      to_units(instance.energy_budget, instance.energy_resolution, "energy_budget");
  scaled.time_budget = to_units(instance.time_budget, instance.time_resolution, "time_budget");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = instance.types[i];
    const std::string prefix = "types[" + std::to_string(i) + "].";
    const auto e = to_units(t.energy, instance.energy_resolution, prefix + "energy");
    const auto tt = to_units(t.time, instance.time_resolution, prefix + "time");
    // A positive value rounding to zero units cannot be represented.
    if (e <= 0) throw ResolutionError(prefix + "energy", t.energy, instance.energy_resolution);
    if (tt <= 0) throw ResolutionError(prefix + "time", t.time, instance.time_resolution);
    scaled.energy.push_back(e);
    scaled.time.push_back(tt);
    std::int64_t cap = std::min(scaled.energy_budget / e, scaled.time_budget / tt);
    if (auto c = instance.count_cap(i)) cap = std::min(cap, *c);
    scaled.effective_caps.push_back(cap);
  }
  return scaled;
}

ProblemInstance load_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed scenario document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("scenario document must be a JSON object");
  reject_unknown_keys(doc,
                      {"types", "energy_budget", "time_budget", "per_type_cap",
                       "per_type_caps", "energy_resolution", "time_resolution"},
                      "");

  ProblemInstance instance;
  if (!doc.contains("types") || !doc["types"].is_array())
    throw ValidationError("types", "expected an array of signal types");
  std::size_t index = 0;
  for (const auto& node : doc["types"]) {
    const std::string prefix = "types[" + std::to_string(index++) + "].";
    if (!node.is_object()) throw ValidationError(prefix.substr(0, prefix.size() - 1),
                                                 "expected an object");
    reject_unknown_keys(node, {"id", "quality", "energy", "time"}, prefix);
    for (const char* key : {"id", "quality", "energy", "time"})
      if (!node.contains(key)) throw ValidationError(prefix + key, "missing");
    SignalType type;
    const auto id = require_count(node["id"], prefix + "id");
    if (id < 1 || id > std::numeric_limits<int>::max())
      throw ValidationError(prefix + "id", "must be a positive integer");
    type.id = static_cast<int>(id);
    type.quality = require_number(node["quality"], prefix + "quality");
    type.energy = require_number(node["energy"], prefix + "energy");
    type.time = require_number(node["time"], prefix + "time");
    instance.types.push_back(type);
  }
  for (const char* key : {"energy_budget", "time_budget"})
    if (!doc.contains(key)) throw ValidationError(key, "missing");
  instance.energy_budget = require_number(doc["energy_budget"], "energy_budget");
  instance.time_budget = require_number(doc["time_budget"], "time_budget");
  if (doc.contains("per_type_cap"))
    instance.per_type_cap = require_count(doc["per_type_cap"], "per_type_cap");
  if (doc.contains("per_type_caps")) {
    const auto& caps = doc["per_type_caps"];
    if (!caps.is_array()) throw ValidationError("per_type_caps", "expected an array");
    std::vector<std::int64_t> values;
    for (std::size_t i = 0; i < caps.size(); ++i)
      values.push_back(require_count(caps[i], "per_type_caps[" + std::to_string(i) + "]"));
    instance.per_type_caps_override = std::move(values);
  }
  if (doc.contains("energy_resolution"))
    instance.energy_resolution = require_number(doc["energy_resolution"], "energy_resolution");
  if (doc.contains("time_resolution"))
    instance.time_resolution = require_number(doc["time_resolution"], "time_resolution");

  validate(instance);
  return instance;
}

ProblemInstance load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_scenario(buffer.str());
}

std::string render_scenario(const ProblemInstance& instance) {
  json doc = json::object();
  json types = json::array();
  for (const auto& t : instance.types)
    types.push_back({{"id", t.id}, {"quality", t.quality}, {"energy", t.energy},
                     {"time", t.time}});
  doc["types"] = std::move(types);
  doc["energy_budget"] = instance.energy_budget;
  doc["time_budget"] = instance.time_budget;
  if (instance.per_type_cap) doc["per_type_cap"] = *instance.per_type_cap;
  if (instance.per_type_caps_override) doc["per_type_caps"] = *instance.per_type_caps_override;
  doc["energy_resolution"] = instance.energy_resolution;
  doc["time_resolution"] = instance.time_resolution;
  return doc.dump(2) + "\n";
}

MixTotals evaluate_mix(const ScaledInstance& instance, const Mix& mix) {
  const std::size_t n = instance.size();
  if (mix.counts.size() != n)
    throw DimensionError("mix has " + std::to_string(mix.counts.size()) +
                         " counts but instance has " + std::to_string(n) + " types");
  MixTotals totals;
  bool within_caps = true;
  for (std::size_t i = 0; i < n; ++i) {
    const auto count = mix.counts[i];
    if (count < 0) throw DimensionError("mix counts must be non-negative");
    const auto& type = instance.source.types[i];
    totals.quality += static_cast<double>(count) * type.quality;
    totals.energy += static_cast<double>(count) * type.energy;
    totals.time += static_cast<double>(count) * type.time;
    totals.energy_units += count * instance.energy[i];
    totals.time_units += count * instance.time[i];
    if (auto cap = instance.source.count_cap(i); cap && count > *cap) within_caps = false;
  }
  totals.feasible = within_caps && totals.energy_units <= instance.energy_budget &&
                    totals.time_units <= instance.time_budget;
  return totals;
}

MixTotals evaluate_mix(const ProblemInstance& instance, const Mix& mix) {
  return evaluate_mix(scale_to_integers(instance), mix);
}

bool quality_equal(double a, double b) noexcept {
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

bool canonical_better(double a_quality, std::int64_t a_energy_units,
                      std::int64_t a_time_units, std::span<const std::int64_t> a_counts,
                      double b_quality, std::int64_t b_energy_units,
                      std::int64_t b_time_units, std::span<const std::int64_t> b_counts) {
  if (!quality_equal(a_quality, b_quality)) return a_quality > b_quality;
  if (a_energy_units != b_energy_units) return a_energy_units < b_energy_units;
  if (a_time_units != b_time_units) return a_time_units < b_time_units;
  return std::lexicographical_compare(a_counts.begin(), a_counts.end(), b_counts.begin(),
                                      b_counts.end());
}

}  // namespace sigmix
