#include "deskfair/exact.hpp"

#include <algorithm>
#include <chrono>

#include "deskfair/error.hpp"
#include "deskfair/lp.hpp"

namespace deskfair {

namespace mp = boost::multiprecision;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// W r <= x 1
BinaryProgram capped_program(const Instance& inst, const IncidenceMatrix& w) {
  BinaryProgram program;
  program.num_vars = inst.num_papers();
  program.objective.assign(program.num_vars, Rational(0));
  for (std::size_t i = 0; i < w.rows(); ++i) {
    const auto row = w.row(i);
    program.rows.emplace_back(row.begin(), row.end());
    program.rhs.push_back(inst.cap());
  }
  return program;
}

// -W_i r <= -at_least
void add_lower_row(BinaryProgram& program, const IncidenceMatrix& w, std::size_t author,
                   std::int64_t at_least) {
  std::vector<std::int64_t> row(w.cols());
  const auto source = w.row(author);
  for (std::size_t j = 0; j < w.cols(); ++j) row[j] = -static_cast<std::int64_t>(source[j]);
  program.rows.push_back(std::move(row));
  program.rhs.push_back(-at_least);
}

void absorb(SolverDiagnostics& diag, const BnbResult& res) {
  diag.node_count += res.node_count;
  diag.lp_calls += res.lp_calls;
  diag.lp_iterations += res.lp_iterations;
}

SolveResult package(const Instance& inst, std::string policy, const std::vector<bool>& kept,
                    SolverDiagnostics diag) {
  auto keep = KeepVector::binary(kept);
  auto report = evaluate(inst, keep);
  return SolveResult{std::move(policy), std::move(keep), std::move(report), std::move(diag)};
}

}  // namespace

SolveResult solve_group_exact(const Instance& inst, const ExactOptions& options) {
  const auto start = Clock::now();
  const auto w = build_incidence(inst);
  BinaryProgram program = capped_program(inst, w);
  program.objective = group_objective(inst);

  const BnbResult res = solve_binary_program(program, BnbOptions{options.node_limit, false});
  if (!res.best) {
    // r = 0 is always feasible, so this is a solver fault
    throw Error(ErrorCode::NumericalBreakdown, "group relaxation reported no feasible keep set");
  }
  SolverDiagnostics diag;
  diag.method = res.node_count == 1 ? "lp-integral" : "branch-and-bound";
  absorb(diag, res);
  diag.root_lp_objective = res.root_bound;
  diag.root_lp_integral = res.root_integral;
  diag.incumbent_trace = res.incumbent_trace;
  diag.wall_time_ms = elapsed_ms(start);
  return package(inst, "group-exact", *res.best, std::move(diag));
}

SolveResult solve_individual_exact(const Instance& inst, const ExactOptions& options) {
  const auto start = Clock::now();
  const auto w = build_incidence(inst);

  std::vector<Rational> thresholds;
  for (std::size_t i = 0; i < inst.num_authors(); ++i) {
    const auto total = static_cast<std::int64_t>(inst.paper_count(i));
    for (std::int64_t k = 0; k <= total; ++k) thresholds.emplace_back(k, total);
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  SolverDiagnostics diag;
  diag.method = "threshold-search";

  // Every author's cost <= t  <=>  kept_i >= ceil(|P_i| (1 - t)).
  const auto threshold_program = [&](const Rational& t) -> std::optional<BinaryProgram> {
    BinaryProgram program = capped_program(inst, w);
    const BigInt p = mp::numerator(t);
    const BigInt q = mp::denominator(t);
    for (std::size_t i = 0; i < inst.num_authors(); ++i) {
      const auto total = static_cast<std::int64_t>(inst.paper_count(i));
      const BigInt need_num = BigInt(total) * (q - p);
      const auto need = static_cast<std::int64_t>((need_num + q - 1) / q);
      if (need > std::min<std::int64_t>(total, inst.cap())) return std::nullopt;
      if (need > 0) add_lower_row(program, w, i, need);
    }
    return program;
  };
  const auto feasible = [&](const Rational& t) {
    const auto program = threshold_program(t);
    if (!program) return false;
    const BnbResult res = solve_binary_program(*program, BnbOptions{options.node_limit, true});
    absorb(diag, res);
    return res.best.has_value();
  };

  // threshold 1 is met by keeping nothing
  std::size_t lo = 0;
  std::size_t hi = thresholds.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (feasible(thresholds[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }

  // Among keep sets at the optimal threshold, report one with the best group objective.
  BinaryProgram final_program = *threshold_program(thresholds[lo]);
  final_program.objective = group_objective(inst);
  const BnbResult res = solve_binary_program(final_program, BnbOptions{options.node_limit, false});
  absorb(diag, res);
  if (!res.best) throw Error(ErrorCode::NumericalBreakdown, "optimal fairness threshold lost its witness");
  const std::vector<bool> best = *res.best;
  diag.wall_time_ms = elapsed_ms(start);
  return package(inst, "individual-exact", best, std::move(diag));
}

std::optional<KeepVector> solve_ideal_feasibility(const Instance& inst, const ExactOptions& options) {
  const auto w = build_incidence(inst);
  BinaryProgram program;
  program.num_vars = inst.num_papers();
  program.objective.assign(program.num_vars, Rational(0));
  for (std::size_t i = 0; i < inst.num_authors(); ++i) {
    const auto target =
        std::min<std::int64_t>(inst.cap(), static_cast<std::int64_t>(inst.paper_count(i)));
    const auto row = w.row(i);
    program.rows.emplace_back(row.begin(), row.end());
    program.rhs.push_back(target);
    add_lower_row(program, w, i, target);
  }
  const BnbResult res = solve_binary_program(program, BnbOptions{options.node_limit, true});
  if (!res.best) return std::nullopt;
  return KeepVector::binary(*res.best);
}

IntegralityAudit integrality_audit(const Instance& inst, const ExactOptions& options) {
  IntegralityAudit audit;
  const LpSolution sol = solve_lp(build_group_relaxation(inst));
  audit.lp_objective = sol.objective_value;
  audit.lp_integral = integrality_check(sol);
  audit.lp_solution = sol.values;
  const SolveResult exact = solve_group_exact(inst, options);
  audit.ilp_objective = 0;
  for (std::size_t i = 0; i < inst.num_authors(); ++i) {
    audit.ilp_objective += Rational(exact.report.kept_counts[i], static_cast<std::int64_t>(inst.paper_count(i)));
  }
  audit.gap = audit.lp_objective - to_double(audit.ilp_objective);
  audit.counterexample = audit.gap > kIntegralityTol;
  return audit;
}

void SetCoverInstance::validate() const {
  if (universe_size == 0) throw Error(ErrorCode::BadParameter, "set cover universe is empty");
  if (budget == 0) throw Error(ErrorCode::BadParameter, "set cover budget must be positive");
  for (std::size_t s = 0; s < sets.size(); ++s) {
    if (sets[s].empty()) throw Error(ErrorCode::BadParameter, "set " + std::to_string(s + 1) + " is empty");
    std::vector<std::size_t> sorted = sets[s];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::BadParameter, "set " + std::to_string(s + 1) + " repeats an element");
    }
    if (sorted.front() < 1 || sorted.back() > universe_size) {
      throw Error(ErrorCode::BadParameter, "set " + std::to_string(s + 1) + " leaves the universe");
    }
  }
}

namespace {

bool every_element_in_some_set(const SetCoverInstance& sc) {
  std::vector<bool> seen(sc.universe_size + 1, false);
  for (const auto& set : sc.sets) {
    for (auto e : set) seen[e] = true;
  }
  return std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
}

}  // namespace

BudgetedInstance reduce_set_cover(const SetCoverInstance& sc) {
  sc.validate();
  if (!every_element_in_some_set(sc)) {
    throw Error(ErrorCode::BadParameter, "some universe element lies in no set");
  }
  RawInstance raw;
  raw.x = static_cast<std::int64_t>(sc.sets.size());
  for (std::size_t e = 1; e <= sc.universe_size; ++e) raw.authors.push_back("e" + std::to_string(e));
  for (std::size_t s = 0; s < sc.sets.size(); ++s) {
    RawPaper paper{"S" + std::to_string(s + 1), {}};
    std::vector<std::size_t> elements = sc.sets[s];
    std::sort(elements.begin(), elements.end());
    for (auto e : elements) paper.authors.push_back("e" + std::to_string(e));
    raw.papers.push_back(std::move(paper));
  }
  return BudgetedInstance{validate_instance(raw), sc.budget};
}

SetCoverDecision decide_set_cover(const SetCoverInstance& sc, const ExactOptions& options) {
  sc.validate();
  SetCoverDecision decision;
  if (!every_element_in_some_set(sc)) return decision;

  const BudgetedInstance reduced = reduce_set_cover(sc);
  const auto w = build_incidence(reduced.instance);
  BinaryProgram program;
  program.num_vars = w.cols();
  program.objective.assign(program.num_vars, Rational(0));
  for (std::size_t i = 0; i < w.rows(); ++i) add_lower_row(program, w, i, 1);
  program.rows.emplace_back(program.num_vars, 1);
  program.rhs.push_back(static_cast<std::int64_t>(reduced.budget));

  const BnbResult res = solve_binary_program(program, BnbOptions{options.node_limit, true});
  decision.node_count = res.node_count;
  if (res.best) {
    decision.coverable = true;
    for (std::size_t j = 0; j < res.best->size(); ++j) {
      if ((*res.best)[j]) decision.witness.push_back(j);
    }
  }
  return decision;
}

namespace {

std::vector<std::int64_t> binary_row_products(const IncidenceMatrix& w, const KeepVector& r) {
  if (r.size() != w.cols()) throw Error(ErrorCode::DimensionMismatch, "keep vector length != columns");
  if (!r.is_binary()) throw Error(ErrorCode::NonBinaryKeepVector, "condition needs a binary keep vector");
  std::vector<std::int64_t> products(w.rows(), 0);
  for (std::size_t i = 0; i < w.rows(); ++i) {
    if (w.row_sums()[i] == 0) throw Error(ErrorCode::BadParameter, "row " + std::to_string(i) + " is empty");
    const auto row = w.row(i);
    for (std::size_t j = 0; j < w.cols(); ++j) {
      if (row[j] && r.kept(j)) ++products[i];
    }
  }
  return products;
}

bool max_cost_at_most(const IncidenceMatrix& w, const std::vector<std::int64_t>& products,
                      const Rational& threshold) {
  for (std::size_t i = 0; i < w.rows(); ++i) {
    const auto total = static_cast<std::int64_t>(w.row_sums()[i]);
    if (Rational(total - products[i], total) > threshold) return false;
  }
  return true;
}

}  // namespace

bool cost_within_min_threshold(const IncidenceMatrix& w, const KeepVector& r) {
  const auto products = binary_row_products(w, r);
  const auto smallest = *std::min_element(w.row_sums().begin(), w.row_sums().end());
  return max_cost_at_most(w, products, 1 - Rational(1, static_cast<std::int64_t>(smallest)));
}

bool cost_within_max_threshold(const IncidenceMatrix& w, const KeepVector& r) {
  const auto products = binary_row_products(w, r);
  const auto largest = *std::max_element(w.row_sums().begin(), w.row_sums().end());
  return max_cost_at_most(w, products, 1 - Rational(1, static_cast<std::int64_t>(largest)));
}

bool every_row_covered(const IncidenceMatrix& w, const KeepVector& r) {
  const auto products = binary_row_products(w, r);
  return std::all_of(products.begin(), products.end(), [](auto p) { return p >= 1; });
}

}  // namespace deskfair
