#include "projlab/error.hpp"

namespace projlab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::EnumerationTooLarge: return "enumeration too large";
    case ErrorCode::MixedDegrees: return "mixed degrees";
    case ErrorCode::DimensionMismatch: return "dimension mismatch";
    case ErrorCode::DualNotImplemented: return "dual not implemented";
    case ErrorCode::NoClosedForm: return "no closed form; use brute force";
    case ErrorCode::OracleInconclusive: return "oracle inconclusive";
    case ErrorCode::QuadratureFailure: return "quadrature non-convergence";
    case ErrorCode::RootIsolationFailure: return "root isolation failure";
    case ErrorCode::UseMonteCarlo: return "use Monte Carlo path";
    case ErrorCode::BudgetExceeded: return "budget exceeded";
    case ErrorCode::MismatchedAlpha: return "mismatched alpha";
    case ErrorCode::Parse: return "parse error";
  }
  return "unknown error";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace projlab
