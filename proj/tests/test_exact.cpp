#include "doctest.h"

#include <algorithm>

#include "deskfair/branch_and_bound.hpp"
#include "deskfair/error.hpp"
#include "deskfair/exact.hpp"
#include "deskfair/generators.hpp"
#include "deskfair/metrics.hpp"
#include "deskfair/oracle.hpp"
#include "support.hpp"

using namespace deskfair;
using deskfair::testing::make;
using deskfair::testing::paper;

namespace {

std::vector<std::string> rejected_ids(const Instance& inst, const KeepVector& keep) {
  std::vector<std::string> out;
  for (auto j : keep.rejected_indices()) out.push_back(inst.paper(j).id);
  return out;
}

// Exhaustive subfamily search: smallest cover size, or none.
std::optional<std::size_t> smallest_cover(const SetCoverInstance& sc) {
  std::optional<std::size_t> best;
  const std::size_t m = sc.sets.size();
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    std::vector<bool> covered(sc.universe_size + 1, false);
    for (std::size_t s = 0; s < m; ++s)
      if (mask >> s & 1U)
        for (auto e : sc.sets[s]) covered[e] = true;
    bool all = true;
    for (std::size_t e = 1; e <= sc.universe_size; ++e) all = all && covered[e];
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (all && (!best || size < *best)) best = size;
  }
  return best;
}

IncidenceMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  IncidenceMatrix w(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    bool any = false;
    for (std::size_t j = 0; j < cols; ++j) {
      if (uniform_unit(rng) < 0.4) {
        w.set(i, j);
        any = true;
      }
    }
    if (!any) w.set(i, uniform_index(rng, cols));
  }
  return w;
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("group-exact on cvpr26") {
  const Instance inst = gen_case_study("cvpr26");
  const SolveResult res = solve_group_exact(inst);
  CHECK(res.policy == "group-exact");
  CHECK(res.report.zeta_group == Rational(1, 52));
  CHECK(res.report.zeta_ind == Rational(1, 26));
  CHECK(res.report.ideal);
  REQUIRE(res.keep.rejected_indices().size() == 1);
  CHECK(res.keep.rejected_indices().front() < 25);
  CHECK(res.diagnostics.method == "lp-integral");
  CHECK(res.diagnostics.node_count == 1);
}

TEST_CASE("group-exact on the triangle") {
  const Instance tri = gen_triangle();
  const SolveResult res = solve_group_exact(tri);
  CHECK(res.keep.kept_indices().size() == 1);
  CHECK(res.report.zeta_group == Rational(2, 3));
  CHECK(res.diagnostics.method == "branch-and-bound");
  CHECK(res.diagnostics.root_lp_integral == false);
}

TEST_CASE("group-exact on appc1 and appc2") {
  const Instance one = gen_case_study("appc1");
  const SolveResult a = solve_group_exact(one);
  CHECK(rejected_ids(one, a.keep) == std::vector<std::string>{"p1", "p2"});
  CHECK(a.report.zeta_ind == Rational(1, 2));
  CHECK(a.report.zeta_group == Rational(1, 6));

  const Instance two = gen_case_study("appc2");
  const SolveResult b = solve_group_exact(two);
  CHECK(rejected_ids(two, b.keep) == std::vector<std::string>{"p1", "p2"});
  CHECK(b.report.zeta_group == Rational(3, 10));
}

TEST_CASE("individual-exact on the case studies") {
  CHECK(solve_individual_exact(gen_case_study("cvpr26")).report.zeta_ind == Rational(1, 26));

  const Instance two = gen_case_study("appc2");
  const SolveResult res = solve_individual_exact(two);
  CHECK(res.policy == "individual-exact");
  CHECK(res.diagnostics.method == "threshold-search");
  CHECK(res.report.zeta_ind == Rational(1, 2));
  CHECK(res.keep.kept(0) != res.keep.kept(1));
  CHECK(res.keep.kept(2) != res.keep.kept(3));
  CHECK(res.keep.rejected_indices() != solve_group_exact(two).keep.rejected_indices());
}

TEST_CASE("nothing to reject") {
  const Instance inst = make(3, {"a1", "a2"}, {paper("p1", {"a1", "a2"}), paper("p2", {"a2"})});
  CHECK(solve_individual_exact(inst).keep == KeepVector::all(2));
  CHECK(solve_individual_exact(inst).report.zeta_ind == 0);
  CHECK(solve_group_exact(inst).keep == KeepVector::all(2));
}

TEST_CASE("exact solvers match the enumeration oracle") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = deskfair::testing::random_instance(seed, 6, 12);
    const OracleResult oracle = enumerate_optimal(inst);
    const SolveResult group = solve_group_exact(inst);
    const SolveResult ind = solve_individual_exact(inst);
    CHECK(group.report.feasible);
    CHECK(ind.report.feasible);
    CHECK(group.report.zeta_group == oracle.best_group.value);
    CHECK(ind.report.zeta_ind == oracle.best_individual.value);
    CHECK(ind.report.zeta_ind >= group.report.zeta_group);
    CHECK(solve_ideal_feasibility(inst).has_value() == oracle.ideal_exists);
  }
}

TEST_CASE("ideal feasibility") {
  CHECK_FALSE(solve_ideal_feasibility(gen_triangle()).has_value());
  for (std::size_t n = 3; n <= 8; ++n) CHECK_FALSE(solve_ideal_feasibility(gen_leave_one_out(n)).has_value());
  const auto witness = solve_ideal_feasibility(gen_case_study("cvpr26"));
  REQUIRE(witness);
  CHECK(is_ideal(gen_case_study("cvpr26"), *witness));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = deskfair::testing::random_instance(seed, 2, 12);
    const auto keep = solve_ideal_feasibility(inst);
    REQUIRE(keep);
    CHECK(is_ideal(inst, *keep));
  }
}

TEST_CASE("node limit") {
  CHECK_THROWS_AS(solve_group_exact(gen_leave_one_out(7), ExactOptions{1}), Error);
}

TEST_CASE("incumbents only improve") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const SolveResult res = solve_group_exact(deskfair::testing::random_instance(seed));
    const auto& trace = res.diagnostics.incumbent_trace;
    CHECK(std::is_sorted(trace.begin(), trace.end()));
  }
}

TEST_CASE("branch and bound on a small knapsack") {
  BinaryProgram program;
  program.num_vars = 4;
  program.objective = {Rational(5), Rational(4), Rational(3), Rational(1, 2)};
  program.rows = {{4, 3, 2, 1}};
  program.rhs = {6};
  const BnbResult res = solve_binary_program(program);
  REQUIRE(res.best);
  // {p1, p3} = 8 and {p2, p3, p4} = 7.5; {p1, p4} = 5.5
  CHECK(res.best_objective == 8);
  CHECK(satisfies(program, *res.best));
  CHECK(objective_value(program, *res.best) == 8);
  program.rhs = {-1};
  CHECK_FALSE(solve_binary_program(program).best.has_value());
  program.rows = {{1, 1}};
  CHECK_THROWS_AS(solve_binary_program(program), Error);
}

TEST_CASE("integrality audit") {
  const IntegralityAudit tri = integrality_audit(gen_triangle());
  CHECK(tri.lp_objective == doctest::Approx(1.5).epsilon(1e-9));
  CHECK(tri.ilp_objective == 1);
  CHECK(tri.gap == doctest::Approx(0.5).epsilon(1e-9));
  CHECK_FALSE(tri.lp_integral);
  CHECK(tri.counterexample);

  const IntegralityAudit cvpr = integrality_audit(gen_case_study("cvpr26"));
  CHECK(cvpr.ilp_objective == 1 + Rational(25, 26));
  CHECK(cvpr.gap == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
  CHECK(cvpr.lp_integral);
  CHECK_FALSE(cvpr.counterexample);

  const IntegralityAudit loose = integrality_audit(gen_triangle().with_cap(5));
  CHECK(loose.ilp_objective == 3);
  CHECK_FALSE(loose.counterexample);
}

TEST_CASE("set cover reduction by hand") {
  const SetCoverInstance sc{3, {{1, 2}, {2, 3}, {3}}, 2};
  const BudgetedInstance red = reduce_set_cover(sc);
  CHECK(red.budget == 2);
  CHECK(red.instance.num_authors() == 3);
  CHECK(red.instance.num_papers() == 3);
  CHECK(red.instance.cap() == 3);
  const auto w = build_incidence(red.instance);
  const std::vector<std::vector<int>> expected{{1, 0, 0}, {1, 1, 0}, {0, 1, 1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(w.at(i, j) == expected[i][j]);

  CHECK(reduce_set_cover({2, {{1, 2}}, 1}).instance.num_papers() == 1);
  const auto diag = build_incidence(reduce_set_cover({2, {{1}, {2}}, 2}).instance);
  CHECK((diag.at(0, 0) == 1 && diag.at(1, 1) == 1 && diag.at(0, 1) == 0 && diag.at(1, 0) == 0));

  CHECK_THROWS_AS(reduce_set_cover({3, {{1, 2}}, 1}), Error);
  CHECK_THROWS_AS(reduce_set_cover({2, {{1, 5}}, 1}), Error);
}

TEST_CASE("set cover decisions") {
  const SetCoverInstance sc{3, {{1, 2}, {2, 3}, {3}}, 2};
  const SetCoverDecision yes = decide_set_cover(sc);
  CHECK(yes.coverable);
  // {S1, S2} and {S1, S3} both cover
  REQUIRE(yes.witness.size() == 2);
  CHECK(yes.witness.front() == 0);
  CHECK_FALSE(decide_set_cover({3, {{1, 2}, {2, 3}, {3}}, 1}).coverable);
}

TEST_CASE("set cover decisions match subfamily enumeration") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const std::size_t universe = 1 + uniform_index(rng, 8);
    const std::size_t sets = 1 + uniform_index(rng, 8);
    const std::size_t budget = 1 + uniform_index(rng, sets);
    const SetCoverInstance sc = gen_random_set_cover(universe, sets, 0.3, budget, seed);
    const auto best = smallest_cover(sc);
    const SetCoverDecision d = decide_set_cover(sc);
    CHECK(d.coverable == (best && *best <= budget));
    if (d.coverable) {
      CHECK(d.witness.size() <= budget);
      std::vector<bool> covered(universe + 1, false);
      for (auto s : d.witness)
        for (auto e : sc.sets[s]) covered[e] = true;
      for (std::size_t e = 1; e <= universe; ++e) CHECK(covered[e]);
    }
  }
}

TEST_CASE("cost threshold conditions") {
  // author 1 has one paper, author 2 has three; keep only the shared one
  IncidenceMatrix w(2, 3);
  w.set(0, 0);
  w.set(1, 0);
  w.set(1, 1);
  w.set(1, 2);
  const auto r = KeepVector::binary({true, false, false});
  CHECK(every_row_covered(w, r));
  CHECK(cost_within_max_threshold(w, r));
  CHECK_FALSE(cost_within_min_threshold(w, r));
}

TEST_CASE("coverage matches the max-count cost threshold") {
  Rng rng(404);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto w = random_matrix(rng, 1 + uniform_index(rng, 6), 1 + uniform_index(rng, 8));
    const auto r = deskfair::testing::random_keep(w.cols(), rng);
    CHECK(every_row_covered(w, r) == cost_within_max_threshold(w, r));
  }
}

}  // TEST_SUITE
