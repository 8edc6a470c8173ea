#pragma once

#include <string>
#include <string_view>

#include "sigmix/model.hpp"

namespace sigmix {

struct SolutionFormat {
  bool emit_timing = false;
};

/// JSON document for a solution. wall_time_s is written only when
/// format.emit_timing is set, so repeated runs produce identical bytes.
std::string solution_to_json(const ProblemInstance& instance, const Solution& solution,
                             SolutionFormat format = {});

/// Reads a document written by solution_to_json and recomputes the totals
/// against `instance`.
Solution solution_from_json(const ProblemInstance& instance, std::string_view text);

/// Aligned text table: one row per type, then totals and solver metadata.
std::string solution_to_table(const ProblemInstance& instance, const Solution& solution,
                              SolutionFormat format = {});

/// Header row plus one data row: solver,status,n_1..n_k,quality,energy,time,nodes.
std::string solution_to_csv(const ProblemInstance& instance, const Solution& solution,
                            SolutionFormat format = {});

/// Shortest decimal text that reads back to the same double.
std::string format_number(double value);

}  // namespace sigmix
