#include "wsg/arith.hpp"

namespace wsg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeP: return "NonPrimeP";
    case ErrorCode::GcdViolation: return "GcdViolation";
    case ErrorCode::EmptyData: return "EmptyData";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UnsupportedPlace: return "UnsupportedPlace";
    case ErrorCode::DegreeNotOne: return "DegreeNotOne";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::DuplicatePlace: return "DuplicatePlace";
    case ErrorCode::TooFewPlaces: return "TooFewPlaces";
    case ErrorCode::TooManyPlaces: return "TooManyPlaces";
    case ErrorCode::NotInGamma: return "NotInGamma";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Internal: return "Internal";
    case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::AlphaZero: return "AlphaZero";
    case ErrorCode::ValidationFailure: return "ValidationFailure";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m <= 0) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  if (m == 1) return 0;
  std::int64_t old_r = mod_floor(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw Error(ErrorCode::InvalidArgument, "value is not invertible modulo " + std::to_string(m));
  return mod_floor(old_s, m);
}

std::int64_t floor_sum(std::int64_t a, std::int64_t b) {
  std::int64_t total = 0;
  for (std::int64_t k = 1; k < b; ++k) total += floor_div(k * a, b);
  return total;
}

std::int64_t floor_sum_closed(std::int64_t a, std::int64_t b) {
  return ((a - 1) * (b - 1) + std::gcd(a, b) - 1) / 2;
}

}  // namespace wsg
