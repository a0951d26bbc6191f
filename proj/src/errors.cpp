#include "hecke/error.hpp"

namespace hecke {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonUnitLeading: return "NonUnitLeading";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NotIntegralSeries: return "NotIntegralSeries";
    case ErrorKind::UnsupportedWeight: return "UnsupportedWeight";
    case ErrorKind::UnsupportedWeightParity: return "UnsupportedWeightParity";
    case ErrorKind::UnsupportedParameter: return "UnsupportedParameter";
    case ErrorKind::DeterminantMismatch: return "DeterminantMismatch";
    case ErrorKind::NotInDeltaN: return "NotInDeltaN";
    case ErrorKind::UnknownDivisor: return "UnknownDivisor";
    case ErrorKind::NotPolynomialInJ: return "NotPolynomialInJ";
    case ErrorKind::ConvergenceBudgetExceeded: return "ConvergenceBudgetExceeded";
    case ErrorKind::NonGenusZeroLevel: return "NonGenusZeroLevel";
    case ErrorKind::MissingCuspValue: return "MissingCuspValue";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

}  // namespace hecke
