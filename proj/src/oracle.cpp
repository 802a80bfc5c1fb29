#include "deskfair/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "deskfair/error.hpp"

namespace deskfair {

namespace {

std::vector<std::uint32_t> author_masks(const Instance& inst) {
  std::vector<std::uint32_t> masks(inst.num_authors(), 0);
  for (std::size_t i = 0; i < inst.num_authors(); ++i) {
    for (auto j : inst.papers_of(i)) masks[i] |= std::uint32_t{1} << j;
  }
  return masks;
}

KeepVector keep_from_mask(std::uint32_t mask, std::size_t m) {
  std::vector<bool> kept(m);
  for (std::size_t j = 0; j < m; ++j) kept[j] = (mask >> j) & 1u;
  return KeepVector::binary(std::move(kept));
}

}  // namespace

OracleResult enumerate_optimal(const Instance& inst) {
  const std::size_t m = inst.num_papers();
  const std::size_t n = inst.num_authors();
  if (m > kOracleMaxPapers) {
    throw Error(ErrorCode::InstanceTooLarge, "oracle enumerates at most " + std::to_string(kOracleMaxPapers) +
                                                 " papers, got " + std::to_string(m));
  }
  const auto masks = author_masks(inst);

  // Costs are compared as integers over the common denominator L = lcm |P_i|
  // (at most lcm(1..20), so n * L stays far inside 64 bits).
  std::int64_t lcm = 1;
  for (std::size_t i = 0; i < n; ++i) lcm = std::lcm(lcm, static_cast<std::int64_t>(inst.paper_count(i)));
  std::vector<std::int64_t> weight(n);
  for (std::size_t i = 0; i < n; ++i) weight[i] = lcm / static_cast<std::int64_t>(inst.paper_count(i));

  std::optional<std::int64_t> best_sum;
  std::optional<std::int64_t> best_max;
  std::uint32_t best_sum_mask = 0;
  std::uint32_t best_max_mask = 0;
  std::optional<std::uint32_t> ideal_mask;
  std::uint64_t feasible = 0;

  const std::uint64_t subsets = std::uint64_t{1} << m;
  for (std::uint64_t s = 0; s < subsets; ++s) {
    const auto mask = static_cast<std::uint32_t>(s);
    std::int64_t sum = 0;
    std::int64_t worst = 0;
    bool ok = true;
    bool ideal = true;
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t kept = std::popcount(mask & masks[i]);
      const auto total = static_cast<std::int64_t>(inst.paper_count(i));
      if (kept > inst.cap()) {
        ok = false;
        break;
      }
      ideal = ideal && kept == std::min<std::int64_t>(inst.cap(), total);
      const std::int64_t scaled_cost = (total - kept) * weight[i];
      sum += scaled_cost;
      worst = std::max(worst, scaled_cost);
    }
    if (!ok) continue;
    ++feasible;
    if (!best_sum || sum < *best_sum) {
      best_sum = sum;
      best_sum_mask = mask;
    }
    if (!best_max || worst < *best_max) {
      best_max = worst;
      best_max_mask = mask;
    }
    if (ideal && !ideal_mask) ideal_mask = mask;
  }

  // the empty keep set is always feasible, so both optima exist
  OracleResult result{
      OracleOptimum{Rational(*best_sum, lcm * static_cast<std::int64_t>(n)), keep_from_mask(best_sum_mask, m)},
      OracleOptimum{Rational(*best_max, lcm), keep_from_mask(best_max_mask, m)},
      ideal_mask.has_value(),
      std::nullopt,
      feasible,
  };
  if (ideal_mask) result.ideal_witness = keep_from_mask(*ideal_mask, m);
  return result;
}

std::vector<RemainingCountsRow> table3_remaining_counts(const Instance& inst) {
  const std::size_t m = inst.num_papers();
  if (m > kTableMaxPapers) {
    throw Error(ErrorCode::InstanceTooLarge, "remaining-count table supports at most " +
                                                 std::to_string(kTableMaxPapers) + " papers");
  }
  const auto masks = author_masks(inst);
  const std::uint32_t all = (std::uint32_t{1} << m) - 1;

  std::vector<RemainingCountsRow> rows;
  rows.reserve(std::size_t{1} << m);
  for (std::uint32_t rejected = 0; rejected <= all; ++rejected) {
    RemainingCountsRow row;
    for (std::size_t j = 0; j < m; ++j) {
      if ((rejected >> j) & 1u) row.rejected.push_back(j);
    }
    for (auto author_mask : masks) row.remaining.push_back(std::popcount(author_mask & ~rejected & all));
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.rejected.size() != b.rejected.size()) return a.rejected.size() < b.rejected.size();
    return a.rejected < b.rejected;
  });
  return rows;
}

}  // namespace deskfair
