#include "deskfair/branch_and_bound.hpp"

#include <cmath>
#include <numeric>

#include "deskfair/error.hpp"
#include "deskfair/lp.hpp"

namespace deskfair {

namespace mp = boost::multiprecision;

bool satisfies(const BinaryProgram& program, const std::vector<bool>& r) {
  for (std::size_t i = 0; i < program.rows.size(); ++i) {
    std::int64_t activity = 0;
    for (std::size_t j = 0; j < program.num_vars; ++j) {
      if (r[j]) activity += program.rows[i][j];
    }
    if (activity > program.rhs[i]) return false;
  }
  return true;
}

Rational objective_value(const BinaryProgram& program, const std::vector<bool>& r) {
  Rational total = 0;
  for (std::size_t j = 0; j < program.num_vars; ++j) {
    if (r[j]) total += program.objective[j];
  }
  return total;
}

namespace {

constexpr std::int64_t kMaxGridDenominator = 1'000'000;

// Binary points have objective values on the grid (1/L)Z, L = lcm of the
// coefficient denominators. A node can only beat the incumbent by a full grid
// step; when L is too large the step is dropped and only ties are pruned.
Rational improvement_step(const BinaryProgram& program) {
  BigInt lcm = 1;
  for (const auto& c : program.objective) {
    const BigInt den = mp::denominator(c);
    lcm = lcm / mp::gcd(lcm, den) * den;
    if (lcm > kMaxGridDenominator) return Rational(0);
  }
  return Rational(BigInt(1), lcm);
}

struct OpenNode {
  BranchNode node;
  std::vector<double> values;
};

class Search {
 public:
  Search(const BinaryProgram& program, const BnbOptions& options)
      : program_(program), options_(options), step_(improvement_step(program)) {
    lp_.num_vars = program.num_vars;
    for (const auto& c : program.objective) lp_.objective.push_back(to_double(c));
    for (const auto& row : program.rows) lp_.rows.emplace_back(row.begin(), row.end());
    for (auto b : program.rhs) lp_.rhs.push_back(static_cast<double>(b));
    lp_.lower.assign(program.num_vars, 0.0);
    lp_.upper.assign(program.num_vars, 1.0);
  }

  BnbResult run();

 private:
  std::optional<OpenNode> bound(BranchNode node);
  bool prunable(double lp_bound) const;
  // Returns true when the search should stop.
  bool offer(const std::vector<bool>& candidate);

  const BinaryProgram& program_;
  const BnbOptions& options_;
  Rational step_;
  LinearProgram lp_;
  BnbResult result_;
};

std::optional<OpenNode> Search::bound(BranchNode node) {
  if (result_.node_count >= options_.node_limit) {
    throw Error(ErrorCode::NodeLimitExceeded,
                "branch-and-bound exceeded " + std::to_string(options_.node_limit) + " nodes");
  }
  ++result_.node_count;
  LinearProgram lp = lp_;
  for (auto j : node.fixed_zero) lp.upper[j] = 0.0;
  for (auto j : node.fixed_one) lp.lower[j] = 1.0;
  ++result_.lp_calls;
  LpSolution sol = solve_lp(lp);
  result_.lp_iterations += sol.iteration_count;
  if (sol.status != LpStatus::Optimal) return std::nullopt;
  node.lp_bound = sol.objective_value;
  return OpenNode{std::move(node), std::move(sol.values)};
}

bool Search::prunable(double lp_bound) const {
  if (!result_.best) return false;
  const double margin = kFeasibilityTol * std::max(1.0, std::abs(lp_bound));
  const double safe_bound = lp_bound + margin;
  if (step_ > 0) return safe_bound < to_double(result_.best_objective + step_);
  return safe_bound <= to_double(result_.best_objective);
}

bool Search::offer(const std::vector<bool>& candidate) {
  if (!satisfies(program_, candidate)) return false;
  Rational value = objective_value(program_, candidate);
  if (!result_.best || value > result_.best_objective) {
    result_.best = candidate;
    result_.best_objective = value;
    result_.incumbent_trace.push_back(value);
  }
  return options_.stop_at_first_feasible;
}

BnbResult Search::run() {
  auto root = bound(BranchNode{});
  if (!root) return result_;
  result_.root_feasible = true;
  result_.root_bound = root->node.lp_bound;
  result_.root_integral = std::all_of(root->values.begin(), root->values.end(), [](double v) {
    return std::abs(v) <= kIntegralityTol || std::abs(v - 1.0) <= kIntegralityTol;
  });

  std::vector<OpenNode> stack;
  stack.push_back(std::move(*root));
  while (!stack.empty()) {
    OpenNode open = std::move(stack.back());
    stack.pop_back();
    if (prunable(open.node.lp_bound)) continue;

    std::ptrdiff_t branch_var = -1;
    double best_frac = kIntegralityTol;
    std::vector<bool> rounded(program_.num_vars);
    for (std::size_t j = 0; j < program_.num_vars; ++j) {
      const double v = open.values[j];
      const double frac = std::min(v, 1.0 - v);
      if (frac > best_frac) {
        best_frac = frac;
        branch_var = static_cast<std::ptrdiff_t>(j);
      }
      rounded[j] = v >= 1.0 - kIntegralityTol;
    }

    if (branch_var < 0) {
      // Integral LP point: certify it exactly. Snapping can only fail through
      // roundoff, in which case branch on the least integral entry.
      std::vector<bool> snapped(program_.num_vars);
      for (std::size_t j = 0; j < program_.num_vars; ++j) snapped[j] = open.values[j] >= 0.5;
      if (satisfies(program_, snapped)) {
        if (offer(snapped)) return result_;
        continue;
      }
      double worst = 0.0;
      for (std::size_t j = 0; j < program_.num_vars; ++j) {
        const double frac = std::min(open.values[j], 1.0 - open.values[j]);
        if (frac > worst) {
          worst = frac;
          branch_var = static_cast<std::ptrdiff_t>(j);
        }
      }
      if (branch_var < 0) {
        throw Error(ErrorCode::NumericalBreakdown, "integral LP point fails exact feasibility");
      }
    } else if (offer(rounded)) {
      // rounded-down LP point, kept only if it certifies
      return result_;
    }

    const auto j = static_cast<std::size_t>(branch_var);
    BranchNode down = open.node;
    down.fixed_zero.push_back(j);
    down.depth += 1;
    BranchNode up = open.node;
    up.fixed_one.push_back(j);
    up.depth += 1;
    auto up_child = bound(std::move(up));
    auto down_child = bound(std::move(down));
    if (up_child && prunable(up_child->node.lp_bound)) up_child.reset();
    if (down_child && prunable(down_child->node.lp_bound)) down_child.reset();
    // the child popped first goes on the stack last
    if (up_child && down_child && down_child->node.lp_bound > up_child->node.lp_bound) {
      stack.push_back(std::move(*up_child));
      stack.push_back(std::move(*down_child));
    } else {
      if (down_child) stack.push_back(std::move(*down_child));
      if (up_child) stack.push_back(std::move(*up_child));
    }
  }
  return result_;
}

}  // namespace

BnbResult solve_binary_program(const BinaryProgram& program, const BnbOptions& options) {
  if (program.objective.size() != program.num_vars || program.rows.size() != program.rhs.size()) {
    throw Error(ErrorCode::DimensionMismatch, "binary program dimensions disagree");
  }
  for (const auto& row : program.rows) {
    if (row.size() != program.num_vars) throw Error(ErrorCode::DimensionMismatch, "binary program row length");
  }
  Search search(program, options);
  return search.run();
}

}  // namespace deskfair
