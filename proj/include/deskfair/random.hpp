#pragma once

#include <cstdint>
#include <random>

namespace deskfair {

// mt19937_64 output is fixed by the standard; the helpers below avoid the
// implementation-defined standard distributions so seeded runs reproduce
// across toolchains.
using Rng = std::mt19937_64;

// Uniform integer in [0, bound), unbiased (rejection sampling). bound >= 1.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % bound;
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace deskfair
