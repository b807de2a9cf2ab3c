#include "adedefect/error.hpp"

namespace ade {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonIsolating: return "NonIsolating";
    case ErrorCode::MultipleRoot: return "MultipleRoot";
    case ErrorCode::DivisionByProvableZero: return "DivisionByProvableZero";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::NonHomogeneous: return "NonHomogeneous";
    case ErrorCode::DegenerateDirection: return "DegenerateDirection";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSingular: return "NotSingular";
    case ErrorCode::NotDoublePoint: return "NotDoublePoint";
    case ErrorCode::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorCode::CorankTooHigh: return "CorankTooHigh";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::Undecided: return "Undecided";
    case ErrorCode::KernelDimensionUnexpected: return "KernelDimensionUnexpected";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::UnsupportedLift: return "UnsupportedLift";
    case ErrorCode::MissingFrame: return "MissingFrame";
    case ErrorCode::UnsupportedSpecialization: return "UnsupportedSpecialization";
    case ErrorCode::RankUndecided: return "RankUndecided";
    case ErrorCode::DivisibilityError: return "DivisibilityError";
    case ErrorCode::AssumptionViolated: return "AssumptionViolated";
    case ErrorCode::UnsupportedCover: return "UnsupportedCover";
    case ErrorCode::UnsupportedFiberTopology: return "UnsupportedFiberTopology";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NonzeroRemainder: return "NonzeroRemainder";
    case ErrorCode::DependentForms: return "DependentForms";
    case ErrorCode::LineInQuadric: return "LineInQuadric";
    case ErrorCode::DegenerateLine: return "DegenerateLine";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace ade
