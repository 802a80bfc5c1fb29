#include "deskfair/instance.hpp"

#include <algorithm>
#include <unordered_set>

#include "deskfair/error.hpp"

namespace deskfair {

namespace {

void check_author(const Instance& inst, std::size_t author) {
  if (author >= inst.num_authors()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "author index " + std::to_string(author) + " out of range (n = " +
                    std::to_string(inst.num_authors()) + ")");
  }
}

}  // namespace

const Paper& Instance::paper(std::size_t j) const {
  if (j >= papers_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "paper index " + std::to_string(j) + " out of range");
  }
  return papers_[j];
}

const std::string& Instance::author_id(std::size_t i) const {
  check_author(*this, i);
  return author_ids_[i];
}

std::span<const std::size_t> Instance::papers_of(std::size_t author) const {
  check_author(*this, author);
  return papers_of_[author];
}

std::optional<std::size_t> Instance::author_index(std::string_view id) const {
  auto it = author_lookup_.find(std::string(id));
  if (it == author_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Instance::paper_index(std::string_view id) const {
  auto it = paper_lookup_.find(std::string(id));
  if (it == paper_lookup_.end()) return std::nullopt;
  return it->second;
}

Instance Instance::with_cap(std::int64_t x) const {
  if (x < 1) throw Error(ErrorCode::NonPositiveCap, "cap must be >= 1, got " + std::to_string(x));
  Instance copy = *this;
  copy.cap_ = x;
  return copy;
}

RawInstance Instance::to_raw() const {
  RawInstance raw;
  raw.x = cap_;
  raw.authors = author_ids_;
  raw.papers.reserve(papers_.size());
  for (const auto& p : papers_) {
    RawPaper rp{p.id, {}};
    for (auto a : p.authors) rp.authors.push_back(author_ids_[a]);
    raw.papers.push_back(std::move(rp));
  }
  return raw;
}

Instance validate_instance(const RawInstance& raw) {
  if (raw.x < 1) {
    throw Error(ErrorCode::NonPositiveCap, "cap x must be >= 1, got " + std::to_string(raw.x));
  }
  Instance inst;
  inst.cap_ = raw.x;
  inst.author_ids_ = raw.authors;
  for (std::size_t i = 0; i < raw.authors.size(); ++i) {
    if (!inst.author_lookup_.emplace(raw.authors[i], i).second) {
      throw Error(ErrorCode::DuplicateId, "duplicate author id '" + raw.authors[i] + "'");
    }
  }
  inst.papers_of_.assign(raw.authors.size(), {});
  inst.papers_.reserve(raw.papers.size());
  for (std::size_t j = 0; j < raw.papers.size(); ++j) {
    const RawPaper& rp = raw.papers[j];
    if (!inst.paper_lookup_.emplace(rp.id, j).second) {
      throw Error(ErrorCode::DuplicateId, "duplicate paper id '" + rp.id + "'");
    }
    if (rp.authors.empty()) {
      throw Error(ErrorCode::EmptyAuthorList, "paper '" + rp.id + "' has no authors");
    }
    Paper paper{rp.id, {}};
    std::unordered_set<std::size_t> seen;
    for (const auto& name : rp.authors) {
      auto it = inst.author_lookup_.find(name);
      if (it == inst.author_lookup_.end()) {
        throw Error(ErrorCode::UnknownAuthorOnPaper,
                    "paper '" + rp.id + "' lists undeclared author '" + name + "'");
      }
      if (!seen.insert(it->second).second) {
        throw Error(ErrorCode::DuplicateId,
                    "paper '" + rp.id + "' lists author '" + name + "' twice");
      }
      paper.authors.push_back(it->second);
      inst.papers_of_[it->second].push_back(j);
    }
    inst.papers_.push_back(std::move(paper));
  }
  for (std::size_t i = 0; i < inst.papers_of_.size(); ++i) {
    if (inst.papers_of_[i].empty()) {
      throw Error(ErrorCode::AuthorWithNoPapers, "author '" + raw.authors[i] + "' has no papers");
    }
  }
  return inst;
}

IncidenceMatrix::IncidenceMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0), row_sums_(rows, 0), column_sums_(cols, 0) {}

void IncidenceMatrix::set(std::size_t i, std::size_t j) {
  auto& cell = entries_[i * cols_ + j];
  if (cell == 0) {
    cell = 1;
    ++row_sums_[i];
    ++column_sums_[j];
  }
}

IncidenceMatrix build_incidence(const Instance& inst) {
  IncidenceMatrix w(inst.num_authors(), inst.num_papers());
  for (std::size_t j = 0; j < inst.num_papers(); ++j) {
    for (auto i : inst.paper(j).authors) w.set(i, j);
  }
  // row sums must reproduce |P_i| and column sums |A_j|
  for (std::size_t i = 0; i < w.rows(); ++i) {
    if (w.row_sums()[i] != inst.paper_count(i) || w.row_sums()[i] == 0) {
      throw Error(ErrorCode::DimensionMismatch, "incidence row sum disagrees with author paper list");
    }
  }
  for (std::size_t j = 0; j < w.cols(); ++j) {
    if (w.column_sums()[j] != inst.paper(j).authors.size() || w.column_sums()[j] == 0) {
      throw Error(ErrorCode::DimensionMismatch, "incidence column sum disagrees with paper author list");
    }
  }
  return w;
}

KeepVector KeepVector::binary(std::vector<bool> kept) {
  std::vector<double> values(kept.size());
  for (std::size_t j = 0; j < kept.size(); ++j) values[j] = kept[j] ? 1.0 : 0.0;
  return KeepVector(Mode::Binary, std::move(values));
}

KeepVector KeepVector::all(std::size_t m) { return KeepVector(Mode::Binary, std::vector<double>(m, 1.0)); }

KeepVector KeepVector::none(std::size_t m) { return KeepVector(Mode::Binary, std::vector<double>(m, 0.0)); }

KeepVector KeepVector::fractional(std::vector<double> values) {
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::BadParameter, "fractional keep entry outside [0, 1]");
    }
  }
  return KeepVector(Mode::Fractional, std::move(values));
}

std::vector<std::size_t> KeepVector::kept_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (values_[j] == 1.0) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> KeepVector::rejected_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (values_[j] == 0.0) out.push_back(j);
  }
  return out;
}

Rational kept_count(const IncidenceMatrix& w, const KeepVector& r, std::size_t author) {
  if (r.size() != w.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "keep vector length " + std::to_string(r.size()) +
                                                  " != paper count " + std::to_string(w.cols()));
  }
  if (author >= w.rows()) {
    throw Error(ErrorCode::IndexOutOfRange, "author index " + std::to_string(author) + " out of range");
  }
  Rational total = 0;
  const auto row = w.row(author);
  for (std::size_t j = 0; j < w.cols(); ++j) {
    if (row[j] == 0 || r[j] == 0.0) continue;
    total += r[j] == 1.0 ? Rational(1) : from_double(r[j]);
  }
  return total;
}

std::vector<std::int64_t> kept_counts(const Instance& inst, const KeepVector& keep) {
  if (keep.size() != inst.num_papers()) {
    throw Error(ErrorCode::DimensionMismatch, "keep vector length " + std::to_string(keep.size()) +
                                                  " != paper count " +
                                                  std::to_string(inst.num_papers()));
  }
  if (!keep.is_binary()) {
    throw Error(ErrorCode::NonBinaryKeepVector, "metric requires a binary keep vector");
  }
  std::vector<std::int64_t> counts(inst.num_authors(), 0);
  for (std::size_t j = 0; j < inst.num_papers(); ++j) {
    if (!keep.kept(j)) continue;
    for (auto i : inst.paper(j).authors) ++counts[i];
  }
  return counts;
}

std::vector<std::size_t> coauthors(const Instance& inst, std::size_t author) {
  std::vector<std::size_t> out;
  for (auto j : inst.papers_of(author)) {
    for (auto other : inst.paper(j).authors) {
      if (other != author) out.push_back(other);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string_view to_string(AuthorCategory category) {
  switch (category) {
    case AuthorCategory::NonCompliant: return "non-compliant";
    case AuthorCategory::Vulnerable: return "vulnerable";
    case AuthorCategory::Safe: return "safe";
  }
  return "unknown";
}

AuthorCategory classify_author(const Instance& inst, std::size_t author) {
  const auto over_cap = [&](std::size_t i) {
    return static_cast<std::int64_t>(inst.paper_count(i)) > inst.cap();
  };
  if (over_cap(author)) return AuthorCategory::NonCompliant;
  for (auto k : coauthors(inst, author)) {
    if (over_cap(k)) return AuthorCategory::Vulnerable;
  }
  return AuthorCategory::Safe;
}

}  // namespace deskfair
