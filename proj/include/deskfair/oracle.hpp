#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "deskfair/instance.hpp"
#include "deskfair/rational.hpp"

namespace deskfair {

inline constexpr std::size_t kOracleMaxPapers = 20;
inline constexpr std::size_t kTableMaxPapers = 12;

struct OracleOptimum {
  Rational value;
  KeepVector witness;
};

struct OracleResult {
  OracleOptimum best_group;
  OracleOptimum best_individual;
  bool ideal_exists = false;
  std::optional<KeepVector> ideal_witness;
  std::uint64_t feasible_count = 0;
};

// Scans all 2^m keep subsets (bit j set = paper j kept). Ties go to the
// lowest bitmask. Throws InstanceTooLarge for m > 20.
OracleResult enumerate_optimal(const Instance& inst);

struct RemainingCountsRow {
  std::vector<std::size_t> rejected;           // paper indices, ascending
  std::vector<std::int64_t> remaining;         // per author
};

// Every rejection subset with the resulting per-author paper counts, ordered
// by subset size and then lexicographically. Throws InstanceTooLarge for m > 12.
std::vector<RemainingCountsRow> table3_remaining_counts(const Instance& inst);

}  // namespace deskfair
