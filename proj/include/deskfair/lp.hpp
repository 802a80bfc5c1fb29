#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <utility>
#include <vector>

#include "deskfair/instance.hpp"
#include "deskfair/rational.hpp"

namespace deskfair {

inline constexpr double kFeasibilityTol = 1e-9;
inline constexpr double kIntegralityTol = 1e-6;
inline constexpr double kPivotTol = 1e-12;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// maximize objective . r  s.t.  rows . r <= rhs,  lower <= r <= upper.
// Every lower bound must be finite.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  std::vector<double> lower;
  std::vector<double> upper;

  // Throws DimensionMismatch / BadParameter.
  void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> values;
  double objective_value = 0.0;
  std::size_t iteration_count = 0;
  bool is_integral = false;
  // (entering column, leaving column or -1 for a bound flip), in order.
  std::vector<std::pair<std::ptrdiff_t, std::ptrdiff_t>> pivots;
};

// Exact objective coefficients of the group relaxation: c_j = sum over the
// authors of paper j of 1 / |P_i|.
std::vector<Rational> group_objective(const Instance& inst);

// max sum_j c_j r_j  s.t.  W r <= x 1,  0 <= r <= 1.
LinearProgram build_group_relaxation(const Instance& inst);

// Two-phase bounded-variable primal simplex on a dense tableau. Entering and
// leaving choices follow Bland's rule, so the pivot sequence is a pure
// function of the input. Throws SolverStalled past 50 * (rows + vars)
// iterations and NumericalBreakdown when the final point fails verification.
LpSolution solve_lp(const LinearProgram& lp);

// Every entry within kIntegralityTol of 0 or 1. Throws NotOptimal.
bool integrality_check(const LpSolution& sol);

// Free-format MPS with an OBJSENSE MAX section.
void write_mps(const LinearProgram& lp, std::ostream& out);

}  // namespace deskfair
