#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deskfair/instance.hpp"
#include "deskfair/metrics.hpp"

namespace deskfair {

enum class Decision { Keep, Reject };

struct TraceEntry {
  std::string paper_id;
  Decision decision;
  std::string reason;
};

struct PolicyOutcome {
  std::string policy;
  KeepVector keep;
  FairnessReport report;
  std::vector<TraceEntry> trace;
};

// Order-based desk rejection: papers are processed in submission order and a
// paper is rejected when any of its authors already has x registered papers.
// Only kept papers are registered.
PolicyOutcome conventional_desk_reject(const Instance& inst);

// While some author exceeds the cap, take the author with the largest overage
// (lowest index on ties) and reject one of their kept papers uniformly at
// random. Same seed, same outcome.
PolicyOutcome roulette_reject(const Instance& inst, std::uint64_t seed);

struct RouletteExpectation {
  Rational expected_zeta_ind;
  Rational expected_zeta_group;
  std::size_t outcomes = 0;  // leaves of the randomness tree
};

// Exact expectation over every branch of the roulette randomness. Throws
// OutcomeSpaceTooLarge when the tree has more than max_outcomes leaves.
RouletteExpectation roulette_expectation(const Instance& inst, std::size_t max_outcomes);

// Ideal keep set for n <= 2 built by case analysis on author categories and
// the shared-paper count. Ties reject the latest-submitted paper first.
// Throws TooManyAuthors for n > 2.
std::optional<KeepVector> ideal_construct_small(const Instance& inst);

}  // namespace deskfair
