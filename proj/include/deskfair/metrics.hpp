#pragma once

#include <cstdint>
#include <vector>

#include "deskfair/instance.hpp"
#include "deskfair/rational.hpp"

namespace deskfair {

// Exact fairness evaluation of one keep set.
struct FairnessReport {
  std::vector<Rational> per_author_cost;
  std::vector<std::int64_t> kept_counts;
  Rational zeta_ind;    // max cost
  Rational zeta_group;  // mean cost
  bool feasible = false;
  bool ideal = false;
};

// Fraction of the author's papers rejected: (|P_i| - kept) / |P_i|.
Rational cost(const Instance& inst, const KeepVector& keep, std::size_t author);

Rational zeta_ind(const Instance& inst, const KeepVector& keep);
Rational zeta_group(const Instance& inst, const KeepVector& keep);

// Every author keeps at most x papers.
bool is_feasible(const Instance& inst, const KeepVector& keep);
// Every author keeps exactly min(x, |P_i|) papers.
bool is_ideal(const Instance& inst, const KeepVector& keep);

FairnessReport evaluate(const Instance& inst, const KeepVector& keep);

}  // namespace deskfair
