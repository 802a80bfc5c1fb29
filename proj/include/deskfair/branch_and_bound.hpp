#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "deskfair/rational.hpp"

namespace deskfair {

// maximize objective . r  s.t.  rows . r <= rhs,  r in {0,1}^n.
// Integer data so candidate points are certified without rounding.
struct BinaryProgram {
  std::size_t num_vars = 0;
  std::vector<Rational> objective;
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::int64_t> rhs;
};

struct BranchNode {
  std::vector<std::size_t> fixed_zero;
  std::vector<std::size_t> fixed_one;
  double lp_bound = 0.0;
  std::size_t depth = 0;
};

struct BnbOptions {
  std::size_t node_limit = 1'000'000;
  // Return the first certified feasible point (pure feasibility problems).
  bool stop_at_first_feasible = false;
};

struct BnbResult {
  std::optional<std::vector<bool>> best;
  Rational best_objective;
  std::size_t node_count = 0;
  std::size_t lp_calls = 0;
  std::size_t lp_iterations = 0;
  bool root_feasible = false;
  bool root_integral = false;
  double root_bound = 0.0;
  // Incumbent objective after every improvement, in discovery order.
  std::vector<Rational> incumbent_trace;
};

bool satisfies(const BinaryProgram& program, const std::vector<bool>& r);
Rational objective_value(const BinaryProgram& program, const std::vector<bool>& r);

// LP-based depth-first branch-and-bound. Branches on the most fractional
// variable (lowest index on ties); both children are bounded immediately and
// the one with the better bound is explored first, the r_j = 1 child on equal
// bounds. Throws NodeLimitExceeded once node_limit LP nodes have been created.
BnbResult solve_binary_program(const BinaryProgram& program, const BnbOptions& options = {});

}  // namespace deskfair
