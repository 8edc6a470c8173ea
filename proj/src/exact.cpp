#include "sigmix/exact.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "sigmix/greedy.hpp"

namespace sigmix {

namespace {

// Fractional single-constraint relaxations over the types that sit at or
// after a given depth of the branch order.
class RelaxationBound {
 public:
  RelaxationBound(const ScaledInstance& instance, const std::vector<std::size_t>& branch_order)
      : instance_(instance), branch_pos_(instance.size()) {
    for (std::size_t pos = 0; pos < branch_order.size(); ++pos) branch_pos_[branch_order[pos]] = pos;
    energy_order_ = ratio_order(instance.energy);
    time_order_ = ratio_order(instance.time);
  }

  double operator()(std::size_t depth, std::int64_t energy_left, std::int64_t time_left) const {
    return std::min(fill(energy_order_, instance_.energy, depth, energy_left),
                    fill(time_order_, instance_.time, depth, time_left));
  }

 private:
  std::vector<std::size_t> ratio_order(const std::vector<std::int64_t>& cost) const {
    std::vector<std::size_t> order(instance_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      // q_a / c_a > q_b / c_b without division.
      const double lhs = instance_.quality(a) * static_cast<double>(cost[b]);
      const double rhs = instance_.quality(b) * static_cast<double>(cost[a]);
      if (lhs != rhs) return lhs > rhs;
      return instance_.source.types[a].id < instance_.source.types[b].id;
    });
    return order;
  }

  double fill(const std::vector<std::size_t>& order, const std::vector<std::int64_t>& cost,
              std::size_t depth, std::int64_t capacity) const {
    double value = 0.0;
    double left = static_cast<double>(capacity);
    for (std::size_t i : order) {
      if (left <= 0.0) break;
      if (branch_pos_[i] < depth) continue;
      const double c = static_cast<double>(cost[i]);
      const double take = std::min(static_cast<double>(instance_.effective_caps[i]), left / c);
      value += take * instance_.quality(i);
      left -= take * c;
    }
    return value;
  }

  const ScaledInstance& instance_;
  std::vector<std::size_t> branch_pos_;
  std::vector<std::size_t> energy_order_;
  std::vector<std::size_t> time_order_;
};

class BranchAndBound {
 public:
  BranchAndBound(const ScaledInstance& instance, const ExactOptions& options,
                 const Solution& seed)
      : instance_(instance),
        options_(options),
        order_(score_order(instance.source)),
        bound_(instance, order_),
        counts_(instance.size(), 0),
        best_counts_(seed.mix.counts),
        best_quality_(seed.totals.quality),
        best_energy_(seed.totals.energy_units),
        best_time_(seed.totals.time_units) {}

  void run() { visit(0, instance_.energy_budget, instance_.time_budget, 0.0, 0, 0); }

  const std::vector<std::int64_t>& best_counts() const { return best_counts_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void visit(std::size_t depth, std::int64_t energy_left, std::int64_t time_left,
             double quality, std::int64_t energy_used, std::int64_t time_used) {
    if (++nodes_ > options_.node_limit) throw SearchBudgetExhausted(options_.node_limit);
    if (depth == order_.size()) {
      if (canonical_better(quality, energy_used, time_used, counts_, best_quality_,
                           best_energy_, best_time_, best_counts_)) {
        best_counts_ = counts_;
        best_quality_ = quality;
        best_energy_ = energy_used;
        best_time_ = time_used;
      }
      return;
    }
    // Subtrees that could still tie the incumbent stay open so the
    // canonical tie-break sees every co-optimal mix.
    const double slack = 1e-9 * std::max(1.0, std::abs(best_quality_));
    if (quality + bound_(depth, energy_left, time_left) < best_quality_ - slack) return;

    const std::size_t type = order_[depth];
    const std::int64_t e = instance_.energy[type];
    const std::int64_t t = instance_.time[type];
    const double q = instance_.quality(type);
    const std::int64_t most =
        std::min({instance_.effective_caps[type], energy_left / e, time_left / t});
    for (std::int64_t k = most; k >= 0; --k) {
      counts_[type] = k;
      visit(depth + 1, energy_left - k * e, time_left - k * t,
            quality + static_cast<double>(k) * q, energy_used + k * e, time_used + k * t);
    }
    counts_[type] = 0;
  }

  const ScaledInstance& instance_;
  const ExactOptions& options_;
  std::vector<std::size_t> order_;
  RelaxationBound bound_;
  std::vector<std::int64_t> counts_;
  std::vector<std::int64_t> best_counts_;
  double best_quality_;
  std::int64_t best_energy_;
  std::int64_t best_time_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SearchNode root_node(const ScaledInstance& instance) {
  SearchNode node;
  node.fixed_counts.assign(instance.size(), 0);
  node.remaining_energy = instance.energy_budget;
  node.remaining_time = instance.time_budget;
  return node;
}

double upper_bound(const SearchNode& node, const ScaledInstance& instance) {
  const RelaxationBound bound(instance, score_order(instance.source));
  return node.partial_quality + bound(node.depth, node.remaining_energy, node.remaining_time);
}

Solution solve_exact(const ScaledInstance& instance, const ExactOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Solution seed = solve_greedy(instance);
  BranchAndBound search(instance, options, seed);
  search.run();

  Solution solution;
  solution.mix = Mix{search.best_counts()};
  solution.totals = evaluate_mix(instance, solution.mix);
  solution.status = SolveStatus::kProvenOptimal;
  solution.solver_name = "exact";
  solution.nodes_explored = search.nodes();
  solution.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return solution;
}

Solution solve_exact(const ProblemInstance& instance, const ExactOptions& options) {
  return solve_exact(scale_to_integers(instance), options);
}

}  // namespace sigmix
