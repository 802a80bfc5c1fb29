#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "deskfair/branch_and_bound.hpp"
#include "deskfair/instance.hpp"
#include "deskfair/metrics.hpp"

namespace deskfair {

struct SolverDiagnostics {
  std::string method;
  std::size_t node_count = 0;
  std::size_t lp_calls = 0;
  std::size_t lp_iterations = 0;
  std::optional<double> root_lp_objective;
  std::optional<bool> root_lp_integral;
  bool fallback = false;  // group-lp fell back to branch-and-bound
  std::vector<Rational> incumbent_trace;
  double wall_time_ms = 0.0;
};

struct SolveResult {
  std::string policy;
  KeepVector keep;
  FairnessReport report;
  SolverDiagnostics diagnostics;
};

struct ExactOptions {
  std::size_t node_limit = 1'000'000;
};

// Keep set maximizing sum_i kept_i / |P_i| under the cap (equivalently
// minimizing zeta_group). Solves the LP relaxation first and branches only
// when its optimum is fractional.
SolveResult solve_group_exact(const Instance& inst, const ExactOptions& options = {});

// Keep set minimizing zeta_ind. Binary search over the finite set of
// attainable thresholds {k / |P_i|}, each probe a binary feasibility problem.
// Worst case exponential: the problem is NP-hard.
SolveResult solve_individual_exact(const Instance& inst, const ExactOptions& options = {});

// Keep set where every author keeps exactly min(x, |P_i|) papers, if any.
std::optional<KeepVector> solve_ideal_feasibility(const Instance& inst, const ExactOptions& options = {});

struct IntegralityAudit {
  double lp_objective = 0.0;
  Rational ilp_objective;
  double gap = 0.0;
  bool lp_integral = false;
  bool counterexample = false;  // gap > kIntegralityTol
  std::vector<double> lp_solution;
};

IntegralityAudit integrality_audit(const Instance& inst, const ExactOptions& options = {});

// Set-cover decision instance over the universe {1..universe_size}.
struct SetCoverInstance {
  std::size_t universe_size = 0;
  std::vector<std::vector<std::size_t>> sets;
  std::size_t budget = 0;

  // Throws BadParameter: empty set, element outside the universe, duplicate
  // element, zero budget or empty universe.
  void validate() const;
};

// A submission-limit instance together with the cardinality budget on kept
// papers that only the set-cover decision problem carries.
struct BudgetedInstance {
  Instance instance;
  std::size_t budget;
};

// Elements become authors, sets become papers, x = number of sets. Throws
// BadParameter when some element lies in no set (that author would have no
// papers).
BudgetedInstance reduce_set_cover(const SetCoverInstance& sc);

struct SetCoverDecision {
  bool coverable = false;
  std::vector<std::size_t> witness;  // 0-based set indices
  std::size_t node_count = 0;
};

// Is there r in {0,1}^m with min_i (W r)_i >= 1 and |r|_1 <= budget?
SetCoverDecision decide_set_cover(const SetCoverInstance& sc, const ExactOptions& options = {});

// The two conditions compared by the set-cover equivalence:
//   max_i (1 - (W r)_i / |P_i|) <= 1 - 1 / min_i |P_i|   (threshold on zeta_ind)
//   min_i (W r)_i >= 1                                     (every row covered)
bool cost_within_min_threshold(const IncidenceMatrix& w, const KeepVector& r);
bool every_row_covered(const IncidenceMatrix& w, const KeepVector& r);
// Same threshold with max_i |P_i| in place of min_i |P_i|.
bool cost_within_max_threshold(const IncidenceMatrix& w, const KeepVector& r);

}  // namespace deskfair
