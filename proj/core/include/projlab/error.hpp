#pragma once

#include <stdexcept>
#include <string>

namespace projlab {

enum class ErrorCode {
  InvalidArgument,
  EnumerationTooLarge,
  MixedDegrees,
  DimensionMismatch,
  DualNotImplemented,
  NoClosedForm,
  OracleInconclusive,
  QuadratureFailure,
  RootIsolationFailure,
  UseMonteCarlo,
  BudgetExceeded,
  MismatchedAlpha,
  Parse,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace projlab
