#include "deskfair/metrics.hpp"

#include <algorithm>

#include "deskfair/error.hpp"

namespace deskfair {

namespace {

Rational author_cost(const Instance& inst, std::size_t author, std::int64_t kept) {
  const auto total = static_cast<std::int64_t>(inst.paper_count(author));
  return Rational(total - kept, total);
}

}  // namespace

Rational cost(const Instance& inst, const KeepVector& keep, std::size_t author) {
  const auto counts = kept_counts(inst, keep);
  if (author >= counts.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "author index " + std::to_string(author) + " out of range");
  }
  return author_cost(inst, author, counts[author]);
}

Rational zeta_ind(const Instance& inst, const KeepVector& keep) { return evaluate(inst, keep).zeta_ind; }

Rational zeta_group(const Instance& inst, const KeepVector& keep) {
  return evaluate(inst, keep).zeta_group;
}

bool is_feasible(const Instance& inst, const KeepVector& keep) {
  const auto counts = kept_counts(inst, keep);
  return std::all_of(counts.begin(), counts.end(), [&](auto c) { return c <= inst.cap(); });
}

bool is_ideal(const Instance& inst, const KeepVector& keep) {
  const auto counts = kept_counts(inst, keep);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const auto target = std::min<std::int64_t>(inst.cap(), static_cast<std::int64_t>(inst.paper_count(i)));
    if (counts[i] != target) return false;
  }
  return true;
}

FairnessReport evaluate(const Instance& inst, const KeepVector& keep) {
  FairnessReport report;
  report.kept_counts = kept_counts(inst, keep);
  report.feasible = true;
  report.ideal = true;
  Rational sum = 0;
  for (std::size_t i = 0; i < inst.num_authors(); ++i) {
    const auto kept = report.kept_counts[i];
    Rational c = author_cost(inst, i, kept);
    if (c > report.zeta_ind) report.zeta_ind = c;
    sum += c;
    report.per_author_cost.push_back(std::move(c));
    const auto target = std::min<std::int64_t>(inst.cap(), static_cast<std::int64_t>(inst.paper_count(i)));
    report.feasible = report.feasible && kept <= inst.cap();
    report.ideal = report.ideal && kept == target;
  }
  report.zeta_group = sum / static_cast<std::int64_t>(inst.num_authors());
  return report;
}

}  // namespace deskfair
