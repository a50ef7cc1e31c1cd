#include "orbilef/error.hpp"

namespace orbilef {

std::string_view error_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::ValidationError: return "ValidationError";
  case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
  case ErrorCode::NotBijective: return "NotBijective";
  case ErrorCode::NotInvariant: return "NotInvariant";
  case ErrorCode::GroupMismatch: return "GroupMismatch";
  case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
  case ErrorCode::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
  case ErrorCode::NotIntertwiner: return "NotIntertwiner";
  case ErrorCode::SingularIntertwiner: return "SingularIntertwiner";
  case ErrorCode::AmbiguousSign: return "AmbiguousSign";
  case ErrorCode::ExplosionGuard: return "ExplosionGuard";
  case ErrorCode::NotClosed: return "NotClosed";
  case ErrorCode::OutOfReach: return "OutOfReach";
  case ErrorCode::NonDifferentiable: return "NonDifferentiable";
  case ErrorCode::TangencyDetected: return "TangencyDetected";
  case ErrorCode::CosetMismatch: return "CosetMismatch";
  case ErrorCode::NonIntegerTotal: return "NonIntegerTotal";
  case ErrorCode::GroupTooLarge: return "GroupTooLarge";
  case ErrorCode::IoError: return "IoError";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

} // namespace orbilef
