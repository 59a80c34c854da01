#pragma once

#include <cstdint>
#include <numeric>

#include "wsg/error.hpp"

namespace wsg {

// Mathematical floor/ceil division (toward -inf / +inf), never truncation.
constexpr std::int64_t floor_div(std::int64_t n, std::int64_t d) {
  return n / d - ((n % d != 0) && ((n < 0) != (d < 0)));
}

constexpr std::int64_t ceil_div(std::int64_t n, std::int64_t d) {
  return n / d + ((n % d != 0) && ((n < 0) == (d < 0)));
}

// Least nonnegative residue.
constexpr std::int64_t mod_floor(std::int64_t n, std::int64_t d) {
  const std::int64_t r = n % d;
  return r < 0 ? r + (d < 0 ? -d : d) : r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer multiplication overflow");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer addition overflow");
  return r;
}

inline std::int64_t checked_pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

bool is_prime(std::int64_t n);

// Inverse of a modulo m (m >= 1); throws InvalidArgument if gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

// Sum_{k=1}^{b-1} floor(k*a/b) evaluated term by term.
std::int64_t floor_sum(std::int64_t a, std::int64_t b);

// Closed form ((a-1)(b-1) + gcd(a,b) - 1) / 2 of the same sum, for a, b >= 1.
std::int64_t floor_sum_closed(std::int64_t a, std::int64_t b);

}  // namespace wsg
