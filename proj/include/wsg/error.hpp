#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wsg {

enum class ErrorCode {
  NonPrimeP,
  GcdViolation,
  EmptyData,
  InvalidArgument,
  IndexOutOfRange,
  UnsupportedPlace,
  DegreeNotOne,
  NonPositive,
  DuplicatePlace,
  TooFewPlaces,
  TooManyPlaces,
  NotInGamma,
  BudgetExceeded,
  EmptyInput,
  Overflow,
  Internal,
  DivisionByZeroPoly,
  FieldMismatch,
  ConstantPolynomial,
  AlphaZero,
  ValidationFailure,
  SyntaxError,
  SchemaError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wsg
