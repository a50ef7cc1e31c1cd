// Error classes shared by every orbilef module.
#ifndef ORBILEF_ERROR_HPP_
#define ORBILEF_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbilef {

// Numeric values are part of the C API and of the CLI exit codes.
enum class ErrorCode : int {
  ParseError = 2,
  ValidationError = 3,
  NotAHomomorphism = 4,
  NotBijective = 5,
  NotInvariant = 6,
  GroupMismatch = 7,
  ConvergenceFailure = 8,
  NonIntegralMultiplicity = 9,
  NotIntertwiner = 10,
  SingularIntertwiner = 11,
  AmbiguousSign = 12,
  ExplosionGuard = 13,
  NotClosed = 14,
  OutOfReach = 15,
  NonDifferentiable = 16,
  TangencyDetected = 17,
  CosetMismatch = 18,
  NonIntegerTotal = 19,
  GroupTooLarge = 20,
  IoError = 21,
  InvalidArgument = 22,
  Internal = 23,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg)
    : std::runtime_error(std::string(error_name(code)) + ": " + msg), code_(code) {}
  ErrorCode code() const noexcept { return code_; }
private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

} // namespace orbilef

#endif // ORBILEF_ERROR_HPP_
