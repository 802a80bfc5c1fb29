#include "deskfair/generators.hpp"

#include "deskfair/error.hpp"
#include "deskfair/random.hpp"

namespace deskfair {

namespace {

std::string author_name(std::size_t i) { return "a" + std::to_string(i + 1); }
std::string paper_name(std::size_t j) { return "p" + std::to_string(j + 1); }

RawInstance skeleton(std::size_t n, std::size_t m, std::int64_t x) {
  RawInstance raw;
  raw.x = x;
  for (std::size_t i = 0; i < n; ++i) raw.authors.push_back(author_name(i));
  for (std::size_t j = 0; j < m; ++j) raw.papers.push_back({paper_name(j), {}});
  return raw;
}

// 1-based author numbers for readability of the fixed examples
void add(RawInstance& raw, std::size_t paper, std::initializer_list<std::size_t> authors) {
  for (auto a : authors) raw.papers[paper - 1].authors.push_back(author_name(a - 1));
}

void check_density(double density) {
  if (!(density > 0.0 && density <= 1.0)) {
    throw Error(ErrorCode::BadParameter, "density must lie in (0, 1]");
  }
}

}  // namespace

Instance gen_triangle() {
  RawInstance raw = skeleton(3, 3, 1);
  add(raw, 1, {1, 2});
  add(raw, 2, {1, 3});
  add(raw, 3, {2, 3});
  return validate_instance(raw);
}

Instance gen_leave_one_out(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::BadParameter, "leave-one-out family needs n >= 3");
  RawInstance raw = skeleton(n, n, static_cast<std::int64_t>(n) - 2);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j) raw.papers[j].authors.push_back(author_name(i));
    }
  }
  return validate_instance(raw);
}

Instance gen_case_study(std::string_view name) {
  if (name == "cvpr26") {
    // a1 on every paper, a2 only on the last one
    RawInstance raw = skeleton(2, 26, 25);
    for (std::size_t j = 1; j <= 25; ++j) add(raw, j, {1});
    add(raw, 26, {1, 2});
    return validate_instance(raw);
  }
  if (name == "appc1") {
    RawInstance raw = skeleton(3, 6, 2);
    add(raw, 1, {1});
    add(raw, 2, {1});
    add(raw, 3, {1, 2});
    add(raw, 4, {1, 3});
    add(raw, 5, {2});
    add(raw, 6, {3});
    return validate_instance(raw);
  }
  if (name == "appc2") {
    RawInstance raw = skeleton(5, 4, 2);
    add(raw, 1, {1, 2});
    add(raw, 2, {1, 2});
    add(raw, 3, {1, 3, 4, 5});
    add(raw, 4, {1, 3, 4, 5});
    return validate_instance(raw);
  }
  if (name == "ex52") {
    RawInstance raw = skeleton(2, 11, 10);
    for (std::size_t j = 1; j <= 10; ++j) add(raw, j, {1});
    add(raw, 11, {1, 2});
    return validate_instance(raw);
  }
  throw Error(ErrorCode::UnknownCase, "unknown case study '" + std::string(name) + "'");
}

Instance gen_random(std::size_t n, std::size_t m, std::int64_t x, double density, std::uint64_t seed) {
  if (n < 1 || m < 1) throw Error(ErrorCode::BadParameter, "random instance needs n, m >= 1");
  check_density(density);
  if (x < 1) throw Error(ErrorCode::BadParameter, "random instance needs x >= 1");
  Rng rng(seed);
  std::vector<std::vector<bool>> link(n, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) link[i][j] = uniform_unit(rng) < density;
  }
  for (std::size_t j = 0; j < m; ++j) {
    bool any = false;
    for (std::size_t i = 0; i < n && !any; ++i) any = link[i][j];
    if (!any) link[0][j] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool any = false;
    for (std::size_t j = 0; j < m && !any; ++j) any = link[i][j];
    if (!any) link[i][0] = true;
  }
  RawInstance raw = skeleton(n, m, x);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (link[i][j]) raw.papers[j].authors.push_back(author_name(i));
    }
  }
  return validate_instance(raw);
}

SetCoverInstance gen_random_set_cover(std::size_t universe_size, std::size_t num_sets, double density,
                                      std::size_t budget, std::uint64_t seed) {
  if (universe_size < 1 || num_sets < 1) {
    throw Error(ErrorCode::BadParameter, "set cover generator needs a non-empty universe and family");
  }
  check_density(density);
  Rng rng(seed);
  SetCoverInstance sc;
  sc.universe_size = universe_size;
  sc.budget = budget;
  for (std::size_t s = 0; s < num_sets; ++s) {
    std::vector<std::size_t> set;
    for (std::size_t e = 1; e <= universe_size; ++e) {
      if (uniform_unit(rng) < density) set.push_back(e);
    }
    if (set.empty()) set.push_back(1 + uniform_index(rng, universe_size));
    sc.sets.push_back(std::move(set));
  }
  sc.validate();
  return sc;
}

Family parse_family(std::string_view name) {
  if (name == "triangle") return Family::Triangle;
  if (name == "leave_one_out") return Family::LeaveOneOut;
  if (name == "case_study") return Family::CaseStudy;
  if (name == "random") return Family::Random;
  if (name == "from_set_cover") return Family::FromSetCover;
  throw Error(ErrorCode::BadParameter, "unknown family '" + std::string(name) + "'");
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Triangle: return "triangle";
    case Family::LeaveOneOut: return "leave_one_out";
    case Family::CaseStudy: return "case_study";
    case Family::Random: return "random";
    case Family::FromSetCover: return "from_set_cover";
  }
  return "unknown";
}

void GenSpec::validate() const {
  switch (family) {
    case Family::Triangle:
    case Family::CaseStudy:
      return;
    case Family::LeaveOneOut:
      if (n < 3) throw Error(ErrorCode::BadParameter, "leave_one_out requires n >= 3");
      return;
    case Family::Random:
      if (n < 1 || m < 1 || x < 1) throw Error(ErrorCode::BadParameter, "random requires n, m, x >= 1");
      check_density(density);
      return;
    case Family::FromSetCover:
      if (n < 1 || m < 1 || budget < 1) {
        throw Error(ErrorCode::BadParameter, "from_set_cover requires n, m, budget >= 1");
      }
      check_density(density);
      return;
  }
}

Instance generate(const GenSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::Triangle: return gen_triangle();
    case Family::LeaveOneOut: return gen_leave_one_out(spec.n);
    case Family::CaseStudy: return gen_case_study(spec.case_name);
    case Family::Random: return gen_random(spec.n, spec.m, spec.x, spec.density, spec.seed);
    case Family::FromSetCover: {
      auto sc = gen_random_set_cover(spec.n, spec.m, spec.density, spec.budget, spec.seed);
      // elements in no set join the first set so the reduction is defined
      std::vector<bool> covered(sc.universe_size + 1, false);
      for (const auto& set : sc.sets) {
        for (auto e : set) covered[e] = true;
      }
      for (std::size_t e = 1; e <= sc.universe_size; ++e) {
        if (!covered[e]) sc.sets.front().push_back(e);
      }
      return reduce_set_cover(sc).instance;
    }
  }
  throw Error(ErrorCode::BadParameter, "unknown family");
}

}  // namespace deskfair
