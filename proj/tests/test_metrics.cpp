#include "doctest.h"

#include "deskfair/error.hpp"
#include "deskfair/generators.hpp"
#include "deskfair/metrics.hpp"
#include "support.hpp"

using namespace deskfair;
using deskfair::testing::make;
using deskfair::testing::paper;

namespace {

KeepVector reject(std::size_t m, std::initializer_list<std::size_t> rejected) {
  std::vector<bool> bits(m, true);
  for (auto j : rejected) bits[j] = false;
  return KeepVector::binary(bits);
}

// Independent recount: rejected share per author, straight from the paper lists.
Rational recount_cost(const Instance& inst, const KeepVector& keep, std::size_t author) {
  std::int64_t total = 0;
  std::int64_t dropped = 0;
  for (std::size_t j = 0; j < inst.num_papers(); ++j) {
    for (auto a : inst.paper(j).authors) {
      if (a != author) continue;
      ++total;
      if (!keep.kept(j)) ++dropped;
    }
  }
  return Rational(dropped, total);
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("cvpr26 costs") {
  const Instance inst = gen_case_study("cvpr26");
  CHECK(cost(inst, reject(26, {25}), 1) == 1);
  CHECK(cost(inst, reject(26, {0}), 0) == Rational(1, 26));
  CHECK(cost(inst, KeepVector::all(26), 0) == 0);
  CHECK(cost(inst, KeepVector::all(26), 1) == 0);
}

TEST_CASE("cvpr26 fairness values") {
  const Instance inst = gen_case_study("cvpr26");
  CHECK(zeta_ind(inst, reject(26, {25})) == 1);
  CHECK(zeta_group(inst, reject(26, {25})) == Rational(27, 52));
  CHECK(zeta_ind(inst, reject(26, {0})) == Rational(1, 26));
  CHECK(zeta_group(inst, reject(26, {0})) == Rational(1, 52));
  CHECK(is_ideal(inst, reject(26, {0})));
  CHECK_FALSE(is_ideal(inst, reject(26, {25})));
}

TEST_CASE("appc1 fairness values") {
  const Instance inst = gen_case_study("appc1");
  const auto keep = reject(6, {0, 1});
  CHECK(zeta_ind(inst, keep) == Rational(1, 2));
  CHECK(zeta_group(inst, keep) == Rational(1, 6));
}

TEST_CASE("feasibility on the triangle") {
  const Instance tri = gen_triangle();
  CHECK_FALSE(is_feasible(tri, KeepVector::all(3)));
  CHECK(is_feasible(tri, KeepVector::binary({true, false, false})));
  CHECK(is_feasible(tri, KeepVector::none(3)));
  for (unsigned mask = 0; mask < 8; ++mask) {
    const auto keep = KeepVector::binary({(mask & 1U) != 0, (mask & 2U) != 0, (mask & 4U) != 0});
    CHECK_FALSE(is_ideal(tri, keep));
  }
}

TEST_CASE("everything within the cap") {
  const Instance inst = make(3, {"a1", "a2"}, {paper("p1", {"a1", "a2"}), paper("p2", {"a1"})});
  CHECK(is_ideal(inst, KeepVector::all(2)));
  CHECK(zeta_ind(inst, KeepVector::all(2)) == 0);
}

TEST_CASE("evaluate bundles consistent fields") {
  const Instance inst = gen_case_study("cvpr26");
  const auto report = evaluate(inst, reject(26, {25}));
  CHECK(report.kept_counts == std::vector<std::int64_t>{25, 0});
  CHECK(report.zeta_ind == 1);
  CHECK(report.zeta_group == Rational(27, 52));
  CHECK(report.feasible);
  CHECK_FALSE(report.ideal);
}

TEST_CASE("fractional keep vectors are rejected") {
  const Instance tri = gen_triangle();
  CHECK_THROWS_AS(zeta_ind(tri, KeepVector::fractional({0.5, 0.5, 0.5})), Error);
  CHECK_THROWS_AS(zeta_group(tri, KeepVector::all(4)), Error);
}

TEST_CASE("random pairs: bounds, order, ideal implies feasible") {
  Rng rng(2024);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Instance inst = deskfair::testing::random_instance(seed);
    const auto keep = deskfair::testing::random_keep(inst.num_papers(), rng);
    const auto report = evaluate(inst, keep);
    Rational sum = 0;
    Rational worst = 0;
    for (std::size_t i = 0; i < inst.num_authors(); ++i) {
      const Rational c = recount_cost(inst, keep, i);
      CHECK(report.per_author_cost[i] == c);
      CHECK(c >= 0);
      CHECK(c <= 1);
      sum += c;
      worst = std::max(worst, c);
    }
    CHECK(report.zeta_ind == worst);
    CHECK(report.zeta_group == sum / static_cast<long>(inst.num_authors()));
    CHECK(report.zeta_group <= report.zeta_ind);
    if (report.ideal) CHECK(report.feasible);
  }
}

TEST_CASE("cost never increases when a paper is added back") {
  Rng rng(77);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Instance inst = deskfair::testing::random_instance(seed);
    auto bits = deskfair::testing::bits_of(deskfair::testing::random_keep(inst.num_papers(), rng));
    const auto before = KeepVector::binary(bits);
    std::vector<std::size_t> rejected = before.rejected_indices();
    if (rejected.empty()) continue;
    bits[rejected[uniform_index(rng, rejected.size())]] = true;
    const auto after = KeepVector::binary(bits);
    for (std::size_t i = 0; i < inst.num_authors(); ++i) CHECK(cost(inst, after, i) <= cost(inst, before, i));
  }
}

TEST_CASE("reported rationals are in lowest terms") {
  const Instance inst = gen_case_study("appc2");
  const auto report = evaluate(inst, reject(4, {0, 1}));
  CHECK(to_fraction_string(report.zeta_group) == "3/10");
  CHECK(to_fraction_string(report.zeta_ind) == "1/1");
}

}  // TEST_SUITE
