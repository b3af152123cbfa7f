#pragma once

#include <stdexcept>
#include <string>

namespace qmasd {

enum class ErrorCode {
  kInvalidArgument,
  kDivisionByZero,
  kUnrepresentableRadical,
  kInvalidPrime,
  kNonUnitLeading,
  kOffGridExponent,
  kPrecisionExceedsListedData,
  kNoConsistentOffset,
  kInsufficientPrecision,
  kAmbiguousRecovery,
  kNoSolution,
  kInsufficientUnitCoefficients,
  kNonIntegralAtP,
  kWeilBoundViolation,
  kNoQMFactorization,
  kNoValidAssignment,
  kBothAssignmentsPass,
  kBadPrime,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qmasd
