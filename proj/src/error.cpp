#include "vml/error.hpp"

namespace vml {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidTorus: return "InvalidTorus";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::InvalidDivisor: return "InvalidDivisor";
    case ErrorCode::EmptyDivisor: return "EmptyDivisor";
    case ErrorCode::BradlowViolation: return "BradlowViolation";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InvalidDegree: return "InvalidDegree";
    case ErrorCode::PartitionMismatch: return "PartitionMismatch";
    case ErrorCode::DegenerateHyperplane: return "DegenerateHyperplane";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::SupportMismatch: return "SupportMismatch";
    case ErrorCode::InsufficientHypotheses: return "InsufficientHypotheses";
    case ErrorCode::OutOfScopeDegree: return "OutOfScopeDegree";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace vml
