#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gradings {

enum class ErrorCode {
  InvalidGroup,
  GroupMismatch,
  InvalidConductor,
  DivisionByZero,
  DimensionMismatch,
  InvalidTuple,
  SupportClash,
  KindMismatch,
  NotInAlgebra,
  SingularForm,
  MixedSymmetry,
  NotInvolutionStable,
  IncompatibleTuple,
  InvalidOrder,
  InvalidCase,
  TooSmall,
  BadMarker,
  NotInvolutionGrading,
  NotStable,
  BadSquare,
  BadEmbedding,
  NotAssociativeGrading,
};

std::string_view error_code_name(ErrorCode code);

/// Precondition failure of a library operation. Verification failures are
/// reported through VerificationReport instead.
class GradingError : public std::runtime_error {
 public:
  GradingError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gradings
