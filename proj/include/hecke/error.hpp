#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

enum class ErrorKind {
  NonUnitLeading,
  PrecisionExhausted,
  NotIntegralSeries,
  UnsupportedWeight,
  UnsupportedWeightParity,
  UnsupportedParameter,
  DeterminantMismatch,
  NotInDeltaN,
  UnknownDivisor,
  NotPolynomialInJ,
  ConvergenceBudgetExceeded,
  NonGenusZeroLevel,
  MissingCuspValue,
  ParseError,
};

const char* error_name(ErrorKind kind);

// Every library failure is reported through this type; kind() names the
// failure class so callers (and the CLI) can surface it verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  const char* name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace hecke
