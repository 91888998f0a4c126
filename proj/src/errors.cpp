#include "fbfmi/errors.hpp"

namespace fbfmi {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::InsufficientRows: return "InsufficientRows";
    case ErrorKind::FractionTooSmall: return "FractionTooSmall";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::EmptyIndexSet: return "EmptyIndexSet";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::TooManyPredictors: return "TooManyPredictors";
    case ErrorKind::IncompleteModelSet: return "IncompleteModelSet";
    case ErrorKind::DegenerateCovariance: return "DegenerateCovariance";
    case ErrorKind::AllMissingRow: return "AllMissingRow";
    case ErrorKind::AlreadyMissing: return "AlreadyMissing";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::MissingResponse: return "MissingResponse";
    case ErrorKind::UnknownColumn: return "UnknownColumn";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "Io";
  }
  return "UnknownError";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::MissingResponse:
    case ErrorKind::UnknownColumn:
    case ErrorKind::AlreadyMissing:
    case ErrorKind::TooManyPredictors:
    case ErrorKind::InvalidArgument:
      return 2;
    case ErrorKind::Io:
      return 4;
    default:
      return 3;
  }
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace fbfmi
