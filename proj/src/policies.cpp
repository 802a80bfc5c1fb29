#include "deskfair/policies.hpp"

#include <algorithm>
#include <functional>

#include "deskfair/error.hpp"
#include "deskfair/random.hpp"

namespace deskfair {

namespace {

std::vector<bool> keep_all_mask(const Instance& inst) { return std::vector<bool>(inst.num_papers(), true); }

PolicyOutcome finish(const Instance& inst, std::string policy, const std::vector<bool>& kept,
                     std::vector<TraceEntry> trace) {
  auto keep = KeepVector::binary(kept);
  auto report = evaluate(inst, keep);
  return PolicyOutcome{std::move(policy), std::move(keep), std::move(report), std::move(trace)};
}

// Author with the largest positive overage, lowest index on ties.
std::optional<std::size_t> most_over_cap(const std::vector<std::int64_t>& counts, std::int64_t cap) {
  std::optional<std::size_t> victim;
  std::int64_t worst = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const auto overage = counts[i] - cap;
    if (overage > worst) {
      worst = overage;
      victim = i;
    }
  }
  return victim;
}

std::vector<std::size_t> kept_papers_of(const Instance& inst, const std::vector<bool>& kept,
                                        std::size_t author) {
  std::vector<std::size_t> out;
  for (auto j : inst.papers_of(author)) {
    if (kept[j]) out.push_back(j);
  }
  return out;
}

void reject_paper(const Instance& inst, std::vector<bool>& kept, std::vector<std::int64_t>& counts,
                  std::size_t j) {
  kept[j] = false;
  for (auto i : inst.paper(j).authors) --counts[i];
}

}  // namespace

PolicyOutcome conventional_desk_reject(const Instance& inst) {
  std::vector<bool> kept = keep_all_mask(inst);
  std::vector<std::int64_t> registered(inst.num_authors(), 0);
  std::vector<TraceEntry> trace;
  trace.reserve(inst.num_papers());
  for (std::size_t j = 0; j < inst.num_papers(); ++j) {
    const Paper& paper = inst.paper(j);
    auto blocker = std::find_if(paper.authors.begin(), paper.authors.end(),
                                [&](std::size_t i) { return registered[i] >= inst.cap(); });
    if (blocker != paper.authors.end()) {
      kept[j] = false;
      trace.push_back({paper.id, Decision::Reject,
                       "author " + inst.author_id(*blocker) + " already registered " +
                           std::to_string(inst.cap()) + " papers"});
      continue;
    }
    for (auto i : paper.authors) ++registered[i];
    trace.push_back({paper.id, Decision::Keep, "registered"});
  }
  return finish(inst, "conventional", kept, std::move(trace));
}

PolicyOutcome roulette_reject(const Instance& inst, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<bool> kept = keep_all_mask(inst);
  std::vector<std::int64_t> counts(inst.num_authors());
  for (std::size_t i = 0; i < inst.num_authors(); ++i) {
    counts[i] = static_cast<std::int64_t>(inst.paper_count(i));
  }
  std::vector<TraceEntry> trace;
  while (auto victim = most_over_cap(counts, inst.cap())) {
    const auto candidates = kept_papers_of(inst, kept, *victim);
    const auto pick = candidates[uniform_index(rng, candidates.size())];
    trace.push_back({inst.paper(pick).id, Decision::Reject,
                     "author " + inst.author_id(*victim) + " over cap by " +
                         std::to_string(counts[*victim] - inst.cap())});
    reject_paper(inst, kept, counts, pick);
  }
  return finish(inst, "roulette", kept, std::move(trace));
}

RouletteExpectation roulette_expectation(const Instance& inst, std::size_t max_outcomes) {
  RouletteExpectation result;
  std::vector<bool> kept = keep_all_mask(inst);
  std::vector<std::int64_t> counts(inst.num_authors());
  for (std::size_t i = 0; i < inst.num_authors(); ++i) {
    counts[i] = static_cast<std::int64_t>(inst.paper_count(i));
  }

  std::function<void(const Rational&)> explore = [&](const Rational& probability) {
    auto victim = most_over_cap(counts, inst.cap());
    if (!victim) {
      if (++result.outcomes > max_outcomes) {
        throw Error(ErrorCode::OutcomeSpaceTooLarge,
                    "roulette outcome tree exceeds " + std::to_string(max_outcomes) + " leaves");
      }
      const auto report = evaluate(inst, KeepVector::binary(kept));
      result.expected_zeta_ind += probability * report.zeta_ind;
      result.expected_zeta_group += probability * report.zeta_group;
      return;
    }
    const auto candidates = kept_papers_of(inst, kept, *victim);
    const Rational branch = probability / static_cast<std::int64_t>(candidates.size());
    for (auto j : candidates) {
      reject_paper(inst, kept, counts, j);
      explore(branch);
      kept[j] = true;
      for (auto i : inst.paper(j).authors) ++counts[i];
    }
  };
  explore(Rational(1));
  return result;
}

std::optional<KeepVector> ideal_construct_small(const Instance& inst) {
  const std::size_t n = inst.num_authors();
  if (n > 2) {
    throw Error(ErrorCode::TooManyAuthors,
                "constructive ideal rejection needs n <= 2, got n = " + std::to_string(n));
  }
  std::vector<bool> kept = keep_all_mask(inst);
  const auto x = inst.cap();
  const auto excess = [&](std::size_t i) {
    return std::max<std::int64_t>(0, static_cast<std::int64_t>(inst.paper_count(i)) - x);
  };
  // Reject `count` papers from `pool`, latest submissions first.
  const auto reject_latest = [&](const std::vector<std::size_t>& pool, std::int64_t count) {
    for (auto it = pool.rbegin(); it != pool.rend() && count > 0; ++it, --count) kept[*it] = false;
  };

  if (n == 1) {
    const auto own = inst.papers_of(0);
    reject_latest({own.begin(), own.end()}, excess(0));
  } else {
    std::vector<std::size_t> solo[2];
    std::vector<std::size_t> shared;
    for (std::size_t j = 0; j < inst.num_papers(); ++j) {
      const auto& authors = inst.paper(j).authors;
      if (authors.size() == 2) {
        shared.push_back(j);
      } else {
        solo[authors.front()].push_back(j);
      }
    }
    using Cat = AuthorCategory;
    const Cat cat[2] = {classify_author(inst, 0), classify_author(inst, 1)};
    const auto noncompliant = [&](std::size_t i) { return cat[i] == Cat::NonCompliant; };

    if (cat[0] == Cat::Safe && cat[1] == Cat::Safe) {
      // nothing exceeds the cap
    } else if (noncompliant(0) != noncompliant(1)) {
      // One non-compliant author; the other is safe (no shared papers) or
      // vulnerable (shared <= |P_other| <= x), so the non-compliant author
      // has at least `excess` solo papers to give up.
      const std::size_t heavy = noncompliant(0) ? 0 : 1;
      reject_latest(solo[heavy], excess(heavy));
    } else if (noncompliant(0) && noncompliant(1)) {
      const auto c = static_cast<std::int64_t>(shared.size());
      if (c <= x) {
        reject_latest(solo[0], excess(0));
        reject_latest(solo[1], excess(1));
      } else {
        reject_latest(solo[0], static_cast<std::int64_t>(solo[0].size()));
        reject_latest(solo[1], static_cast<std::int64_t>(solo[1].size()));
        reject_latest(shared, c - x);
      }
    } else {
      // vulnerable without a non-compliant coauthor cannot occur
      return std::nullopt;
    }
  }
  auto keep = KeepVector::binary(kept);
  if (!is_ideal(inst, keep)) return std::nullopt;
  return keep;
}

}  // namespace deskfair
