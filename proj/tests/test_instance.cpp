#include "doctest.h"

#include "deskfair/error.hpp"
#include "deskfair/generators.hpp"
#include "deskfair/instance.hpp"
#include "deskfair/io.hpp"
#include "support.hpp"

using namespace deskfair;
using deskfair::testing::make;
using deskfair::testing::paper;

namespace {

ErrorCode code_of(const RawInstance& raw) {
  try {
    validate_instance(raw);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("validation accepted a broken instance");
  return ErrorCode::ParseError;
}

RawInstance triangle_raw() {
  return RawInstance{1,
                     {"a1", "a2", "a3"},
                     {paper("p1", {"a1", "a2"}), paper("p2", {"a1", "a3"}), paper("p3", {"a2", "a3"})}};
}

}  // namespace

TEST_SUITE("instance") {

TEST_CASE("triangle validates") {
  const Instance inst = validate_instance(triangle_raw());
  CHECK(inst.num_authors() == 3);
  CHECK(inst.num_papers() == 3);
  CHECK(inst.cap() == 1);
  CHECK(inst.paper_index("p2") == 1);
  CHECK(inst.author_index("a3") == 2);
  CHECK_FALSE(inst.author_index("a9").has_value());
  for (std::size_t i = 0; i < 3; ++i) CHECK(inst.paper_count(i) == 2);
}

TEST_CASE("validation errors") {
  auto raw = triangle_raw();
  raw.papers[0].authors.push_back("a9");
  CHECK(code_of(raw) == ErrorCode::UnknownAuthorOnPaper);

  raw = triangle_raw();
  raw.x = 0;
  CHECK(code_of(raw) == ErrorCode::NonPositiveCap);
  raw.x = -3;
  CHECK(code_of(raw) == ErrorCode::NonPositiveCap);

  raw = triangle_raw();
  raw.papers[1].id = "p1";
  CHECK(code_of(raw) == ErrorCode::DuplicateId);

  raw = triangle_raw();
  raw.authors.push_back("a1");
  CHECK(code_of(raw) == ErrorCode::DuplicateId);

  raw = triangle_raw();
  raw.papers[2].authors.clear();
  CHECK(code_of(raw) == ErrorCode::EmptyAuthorList);

  raw = triangle_raw();
  raw.authors.push_back("a4");
  CHECK(code_of(raw) == ErrorCode::AuthorWithNoPapers);

  raw = triangle_raw();
  raw.papers[0].authors = {"a1", "a1"};
  CHECK(code_of(raw) == ErrorCode::DuplicateId);
}

TEST_CASE("with_cap keeps structure") {
  const Instance inst = gen_triangle();
  const Instance wider = inst.with_cap(2);
  CHECK(wider.cap() == 2);
  CHECK(build_incidence(wider) == build_incidence(inst));
  CHECK_THROWS_AS(inst.with_cap(0), Error);
}

TEST_CASE("incidence of the triangle") {
  const auto w = build_incidence(gen_triangle());
  const std::vector<std::vector<int>> expected{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(w.at(i, j) == expected[i][j]);
  CHECK(w.row_sums() == std::vector<std::size_t>{2, 2, 2});
  CHECK(w.column_sums() == std::vector<std::size_t>{2, 2, 2});
}

TEST_CASE("incidence of a single paper") {
  const auto w = build_incidence(make(1, {"a1"}, {paper("p1", {"a1"})}));
  CHECK(w.rows() == 1);
  CHECK(w.cols() == 1);
  CHECK(w.at(0, 0) == 1);
}

TEST_CASE("incidence of cvpr26") {
  const auto w = build_incidence(gen_case_study("cvpr26"));
  CHECK(w.row_sums() == std::vector<std::size_t>{26, 1});
  CHECK(w.at(1, 25) == 1);
  CHECK(w.at(1, 0) == 0);
}

TEST_CASE("incidence matches membership on random instances") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = deskfair::testing::random_instance(seed);
    const auto w = build_incidence(inst);
    for (std::size_t j = 0; j < inst.num_papers(); ++j) {
      std::size_t ones = 0;
      for (std::size_t i = 0; i < inst.num_authors(); ++i) {
        const auto& authors = inst.paper(j).authors;
        const bool member = std::find(authors.begin(), authors.end(), i) != authors.end();
        CHECK((w.at(i, j) == 1) == member);
        ones += w.at(i, j);
      }
      CHECK(ones == inst.paper(j).authors.size());
    }
    for (std::size_t i = 0; i < inst.num_authors(); ++i) CHECK(w.row_sums()[i] == inst.paper_count(i));
  }
}

TEST_CASE("serialize, parse, rebuild gives the same matrix") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = deskfair::testing::random_instance(seed);
    const Instance back = parse_instance(instance_to_json(inst).dump());
    CHECK(build_incidence(back) == build_incidence(inst));
    CHECK(back.cap() == inst.cap());
    CHECK(back.author_ids() == inst.author_ids());
  }
}

TEST_CASE("coauthors") {
  CHECK(coauthors(gen_triangle(), 0) == std::vector<std::size_t>{1, 2});
  CHECK(coauthors(make(1, {"a1"}, {paper("p1", {"a1"})}), 0).empty());
  CHECK(coauthors(gen_case_study("cvpr26"), 1) == std::vector<std::size_t>{0});
}

TEST_CASE("kept_count") {
  const auto w = build_incidence(gen_triangle());
  const auto one = KeepVector::binary({true, false, false});
  CHECK(kept_count(w, one, 0) == 1);
  for (std::size_t i = 0; i < 3; ++i) CHECK(kept_count(w, KeepVector::all(3), i) == 2);
  CHECK(kept_count(w, KeepVector::fractional({0.5, 0.5, 0.5}), 0) == 1);
  CHECK_THROWS_AS(kept_count(w, KeepVector::all(2), 0), Error);
  CHECK_THROWS_AS(kept_count(w, one, 3), Error);
  CHECK_THROWS_AS(KeepVector::fractional({1.5}), Error);
}

TEST_CASE("author categories") {
  const Instance cvpr = gen_case_study("cvpr26");
  CHECK(classify_author(cvpr, 0) == AuthorCategory::NonCompliant);
  CHECK(classify_author(cvpr, 1) == AuthorCategory::Vulnerable);
  const Instance tri = gen_triangle();
  for (std::size_t i = 0; i < 3; ++i) CHECK(classify_author(tri, i) == AuthorCategory::NonCompliant);
  const Instance solo = make(1, {"a1", "a2"}, {paper("p1", {"a1"}), paper("p2", {"a2"})});
  CHECK(classify_author(solo, 0) == AuthorCategory::Safe);
  CHECK(classify_author(solo, 1) == AuthorCategory::Safe);
  CHECK(to_string(AuthorCategory::Vulnerable) == "vulnerable");
}

TEST_CASE("categories partition authors by definition") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = deskfair::testing::random_instance(seed);
    for (std::size_t i = 0; i < inst.num_authors(); ++i) {
      const bool over = static_cast<std::int64_t>(inst.paper_count(i)) > inst.cap();
      bool exposed = false;
      for (auto k : coauthors(inst, i))
        exposed = exposed || static_cast<std::int64_t>(inst.paper_count(k)) > inst.cap();
      const auto expected = over ? AuthorCategory::NonCompliant
                                 : (exposed ? AuthorCategory::Vulnerable : AuthorCategory::Safe);
      CHECK(classify_author(inst, i) == expected);
    }
  }
}

}  // TEST_SUITE
