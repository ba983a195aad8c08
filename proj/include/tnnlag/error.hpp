#pragma once

#include <stdexcept>
#include <string>

namespace tnnlag {

enum class ErrorKind {
  BoundViolation,
  SumMismatch,
  NotBijective,
  ShapeMismatch,
  NotRhoSymmetric,
  IndexOutOfRange,
  SizeGuard,
  InconsistentNecklace,
  MalformedMap,
  DanglingStrand,
  OddBoundary,
  SiteMismatch,
  UnknownCell,
  RankDeficient,
  NoMatching,
  StepWeightMismatch,
  NotInCell,
  NoPositiveRoot,
  FirstMinorZero,
  PrecisionExhausted,
  ParseError,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tnnlag
