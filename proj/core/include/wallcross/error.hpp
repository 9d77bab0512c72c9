#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wallcross {

enum class ErrorCode {
  // exactnum
  IncompatibleRadicands,
  DegenerateQuadratic,
  ParseError,
  DivisionByZero,
  // numclass
  InvalidContext,
  RankTooLow,
  OutsideU,
  UndefinedDirection,
  ZeroC1,
  RankZero,
  LatticeViolation,
  // bwplane
  DegenerateLine,
  IdenticallyZero,
  CoincidentPoints,
  NegativeDiscriminant,
  NotPositive,
  AmbiguousRoot,
  Unsatisfiable,
  // wallengine
  UnboundedSearch,
  InvalidRegion,
  NotAVnClass,
  Inapplicable,
  NoSuchN,
  CertificateFailed,
  // wallcross
  InfiniteExpansion,
  NonIntegerChi,
  RankConstraintViolated,
  SlopeMismatch,
  CannotIsolate,
  MissingValue,
  // cli
  EmptyViewport,
  ConfigError,
  Precondition,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wallcross
