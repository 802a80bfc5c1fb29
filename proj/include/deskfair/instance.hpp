#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "deskfair/rational.hpp"

namespace deskfair {

// Unvalidated instance description, as parsed from the interchange format.
struct RawPaper {
  std::string id;
  std::vector<std::string> authors;
};

struct RawInstance {
  std::int64_t x = 0;
  std::vector<std::string> authors;
  std::vector<RawPaper> papers;
};

struct Paper {
  std::string id;
  std::vector<std::size_t> authors;  // dense author indices, in listed order
};

// A validated submission-limit instance. Immutable after construction; the
// paper order is the submission order.
class Instance {
 public:
  std::size_t num_authors() const { return author_ids_.size(); }
  std::size_t num_papers() const { return papers_.size(); }
  std::int64_t cap() const { return cap_; }

  const std::vector<std::string>& author_ids() const { return author_ids_; }
  const std::vector<Paper>& papers() const { return papers_; }
  const Paper& paper(std::size_t j) const;
  const std::string& author_id(std::size_t i) const;

  // Paper indices of author i, in submission order.
  std::span<const std::size_t> papers_of(std::size_t author) const;
  // |P_i|
  std::size_t paper_count(std::size_t author) const { return papers_of(author).size(); }

  std::optional<std::size_t> author_index(std::string_view id) const;
  std::optional<std::size_t> paper_index(std::string_view id) const;

  // Same incidence structure under a different cap.
  Instance with_cap(std::int64_t x) const;

  RawInstance to_raw() const;

  friend Instance validate_instance(const RawInstance& raw);

 private:
  Instance() = default;

  std::vector<std::string> author_ids_;
  std::vector<Paper> papers_;
  std::int64_t cap_ = 0;
  std::vector<std::vector<std::size_t>> papers_of_;
  std::unordered_map<std::string, std::size_t> author_lookup_;
  std::unordered_map<std::string, std::size_t> paper_lookup_;
};

// Throws Error with DuplicateId, UnknownAuthorOnPaper, EmptyAuthorList,
// NonPositiveCap or AuthorWithNoPapers. Never repairs its input.
Instance validate_instance(const RawInstance& raw);

// 0/1 author x paper matrix with cached row and column sums.
class IncidenceMatrix {
 public:
  IncidenceMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint8_t at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  std::span<const std::uint8_t> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  const std::vector<std::size_t>& row_sums() const { return row_sums_; }
  const std::vector<std::size_t>& column_sums() const { return column_sums_; }

  void set(std::size_t i, std::size_t j);

  bool operator==(const IncidenceMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> entries_;
  std::vector<std::size_t> row_sums_;
  std::vector<std::size_t> column_sums_;
};

IncidenceMatrix build_incidence(const Instance& inst);

// Per-paper keep decision; 1 keeps the paper, 0 desk-rejects it.
class KeepVector {
 public:
  enum class Mode { Binary, Fractional };

  static KeepVector binary(std::vector<bool> kept);
  static KeepVector all(std::size_t m);
  static KeepVector none(std::size_t m);
  // Entries must lie in [0, 1].
  static KeepVector fractional(std::vector<double> values);

  Mode mode() const { return mode_; }
  bool is_binary() const { return mode_ == Mode::Binary; }
  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t j) const { return values_[j]; }
  bool kept(std::size_t j) const { return values_[j] == 1.0; }

  std::vector<std::size_t> kept_indices() const;
  std::vector<std::size_t> rejected_indices() const;

  bool operator==(const KeepVector&) const = default;

 private:
  KeepVector(Mode mode, std::vector<double> values) : mode_(mode), values_(std::move(values)) {}

  Mode mode_;
  std::vector<double> values_;
};

// W_i . r, exact (fractional entries are converted exactly).
Rational kept_count(const IncidenceMatrix& w, const KeepVector& r, std::size_t author);

// Kept paper count per author for a binary keep vector.
std::vector<std::int64_t> kept_counts(const Instance& inst, const KeepVector& keep);

// Authors sharing at least one paper with `author`, ascending.
std::vector<std::size_t> coauthors(const Instance& inst, std::size_t author);

enum class AuthorCategory { NonCompliant, Vulnerable, Safe };

std::string_view to_string(AuthorCategory category);

AuthorCategory classify_author(const Instance& inst, std::size_t author);

}  // namespace deskfair
