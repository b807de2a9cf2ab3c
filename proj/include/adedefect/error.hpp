#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ade {

enum class ErrorCode {
  // numbers
  NonIsolating,
  MultipleRoot,
  DivisionByProvableZero,
  PrecisionExhausted,
  // poly
  SyntaxError,
  UnknownVariable,
  NonHomogeneous,
  DegenerateDirection,
  DimensionMismatch,
  // singular
  NotSingular,
  NotDoublePoint,
  TruncationInsufficient,
  CorankTooHigh,
  NotSimple,
  Undecided,
  KernelDimensionUnexpected,
  InvalidIndex,
  UnsupportedLift,
  // defect
  MissingFrame,
  UnsupportedSpecialization,
  RankUndecided,
  DivisibilityError,
  // hodge
  AssumptionViolated,
  UnsupportedCover,
  UnsupportedFiberTopology,
  // gallery
  DegreeMismatch,
  NonzeroRemainder,
  DependentForms,
  LineInQuadric,
  DegenerateLine,
  TypeMismatch,
  DuplicatePoint,
  UnknownExample,
  // io
  InvalidInput,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ade
