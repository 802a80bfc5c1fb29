#pragma once

#include <cstdint>
#include <vector>

#include "deskfair/generators.hpp"
#include "deskfair/instance.hpp"
#include "deskfair/random.hpp"

namespace deskfair::testing {

inline RawPaper paper(std::string id, std::vector<std::string> authors) {
  return RawPaper{std::move(id), std::move(authors)};
}

inline Instance make(std::int64_t x, std::vector<std::string> authors, std::vector<RawPaper> papers) {
  return validate_instance(RawInstance{x, std::move(authors), std::move(papers)});
}

// Small random instance with the shape drawn from the seed itself.
inline Instance random_instance(std::uint64_t seed, std::size_t max_n = 6, std::size_t max_m = 12) {
  Rng rng(seed * 0x9E3779B97F4A7C15ULL + 1);
  const std::size_t n = 1 + uniform_index(rng, max_n);
  const std::size_t m = 1 + uniform_index(rng, max_m);
  const std::int64_t x = 1 + static_cast<std::int64_t>(uniform_index(rng, 4));
  const double density = 0.2 + 0.6 * uniform_unit(rng);
  return gen_random(n, m, x, density, rng());
}

inline KeepVector random_keep(std::size_t m, Rng& rng) {
  std::vector<bool> bits(m);
  for (std::size_t j = 0; j < m; ++j) bits[j] = rng() & 1U;
  return KeepVector::binary(bits);
}

// Drops random kept papers until nobody exceeds the cap.
inline KeepVector random_feasible_keep(const Instance& inst, Rng& rng) {
  std::vector<bool> bits(inst.num_papers());
  for (std::size_t j = 0; j < bits.size(); ++j) bits[j] = rng() & 1U;
  for (std::size_t i = 0; i < inst.num_authors(); ++i) {
    std::vector<std::size_t> mine;
    for (auto j : inst.papers_of(i))
      if (bits[j]) mine.push_back(j);
    while (static_cast<std::int64_t>(mine.size()) > inst.cap()) {
      const auto k = uniform_index(rng, mine.size());
      bits[mine[k]] = false;
      mine.erase(mine.begin() + static_cast<std::ptrdiff_t>(k));
    }
  }
  return KeepVector::binary(bits);
}

inline std::vector<bool> bits_of(const KeepVector& keep) {
  std::vector<bool> bits(keep.size());
  for (std::size_t j = 0; j < keep.size(); ++j) bits[j] = keep.kept(j);
  return bits;
}

}  // namespace deskfair::testing
