#include "deskfair/error.hpp"

namespace deskfair {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnknownAuthorOnPaper: return "UnknownAuthorOnPaper";
    case ErrorCode::EmptyAuthorList: return "EmptyAuthorList";
    case ErrorCode::NonPositiveCap: return "NonPositiveCap";
    case ErrorCode::AuthorWithNoPapers: return "AuthorWithNoPapers";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonBinaryKeepVector: return "NonBinaryKeepVector";
    case ErrorCode::TooManyAuthors: return "TooManyAuthors";
    case ErrorCode::OutcomeSpaceTooLarge: return "OutcomeSpaceTooLarge";
    case ErrorCode::SolverStalled: return "SolverStalled";
    case ErrorCode::NumericalBreakdown: return "NumericalBreakdown";
    case ErrorCode::NotOptimal: return "NotOptimal";
    case ErrorCode::NodeLimitExceeded: return "NodeLimitExceeded";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::UnknownCase: return "UnknownCase";
    case ErrorCode::UnknownPolicy: return "UnknownPolicy";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace deskfair
