#pragma once

#include <stdexcept>
#include <string>

namespace fbfmi {

enum class ErrorKind {
  RankDeficient,
  InsufficientRows,
  FractionTooSmall,
  DimensionMismatch,
  NotPositiveDefinite,
  EmptyIndexSet,
  IndexOutOfRange,
  TooManyPredictors,
  IncompleteModelSet,
  DegenerateCovariance,
  AllMissingRow,
  AlreadyMissing,
  ParseError,
  MissingResponse,
  UnknownColumn,
  NonFinite,
  InvalidArgument,
  Io,
};

const char* to_string(ErrorKind kind);

// Exit-code buckets used by the CLI: 2 = input/parse error,
// 3 = numerical failure, 4 = IO.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace fbfmi
