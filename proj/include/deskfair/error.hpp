#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace deskfair {

enum class ErrorCode {
  DuplicateId,
  UnknownAuthorOnPaper,
  EmptyAuthorList,
  NonPositiveCap,
  AuthorWithNoPapers,
  IndexOutOfRange,
  DimensionMismatch,
  NonBinaryKeepVector,
  TooManyAuthors,
  OutcomeSpaceTooLarge,
  SolverStalled,
  NumericalBreakdown,
  NotOptimal,
  NodeLimitExceeded,
  InstanceTooLarge,
  BadParameter,
  UnknownCase,
  UnknownPolicy,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

// Every failure surfaced by the library carries one of the codes above so the
// CLI and tests can dispatch on it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace deskfair
