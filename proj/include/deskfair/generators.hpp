#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "deskfair/exact.hpp"
#include "deskfair/instance.hpp"

namespace deskfair {

// Three authors, three papers, x = 1; each pair of authors shares one paper.
Instance gen_triangle();

// n papers, paper i authored by everyone except author i, x = n - 2.
// Throws BadParameter for n < 3.
Instance gen_leave_one_out(std::size_t n);

// Named worked examples: "cvpr26", "appc1", "appc2", "ex52".
// Throws UnknownCase.
Instance gen_case_study(std::string_view name);

// Each (author, paper) pair included independently with probability
// `density`. Papers left without authors get the lowest-index author; authors
// left without papers then get the lowest-index paper.
Instance gen_random(std::size_t n, std::size_t m, std::int64_t x, double density, std::uint64_t seed);

// Random set-cover instance over {1..universe_size}; every set is non-empty.
SetCoverInstance gen_random_set_cover(std::size_t universe_size, std::size_t num_sets, double density,
                                      std::size_t budget, std::uint64_t seed);

enum class Family { Triangle, LeaveOneOut, CaseStudy, Random, FromSetCover };

Family parse_family(std::string_view name);
std::string_view to_string(Family family);

struct GenSpec {
  Family family = Family::Random;
  std::size_t n = 4;
  std::size_t m = 8;
  std::int64_t x = 2;
  double density = 0.5;
  std::uint64_t seed = 0;
  std::string case_name = "cvpr26";
  std::size_t budget = 1;  // from_set_cover only

  void validate() const;
};

// FromSetCover yields the reduced instance; its budget stays in GenSpec::budget.
Instance generate(const GenSpec& spec);

}  // namespace deskfair
