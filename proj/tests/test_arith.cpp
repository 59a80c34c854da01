#include <doctest.h>

#include <numeric>

#include "wsg/arith.hpp"

using namespace wsg;

TEST_CASE("floor and ceil division round toward minus and plus infinity") {
  CHECK(floor_div(-7, 8) == -1);
  CHECK(ceil_div(-7, 8) == 0);
  CHECK(floor_div(7, 8) == 0);
  CHECK(ceil_div(7, 8) == 1);
  CHECK(floor_div(-8, 8) == -1);
  CHECK(ceil_div(-8, 8) == -1);
  CHECK(floor_div(-9, 8) == -2);
  CHECK(floor_div(9, -8) == -2);
  CHECK(ceil_div(9, -8) == -1);
  CHECK(floor_div(0, 5) == 0);
  CHECK(mod_floor(-7, 8) == 1);
  CHECK(mod_floor(15, 8) == 7);
}

TEST_CASE("floor(-x) = -ceil(x) and ceil - floor is the non-integrality indicator") {
  for (std::int64_t n = -60; n <= 60; ++n)
    for (std::int64_t d = 1; d <= 12; ++d) {
      CHECK(floor_div(-n, d) == -ceil_div(n, d));
      CHECK(ceil_div(n, d) - floor_div(n, d) == (n % d == 0 ? 0 : 1));
    }
}

TEST_CASE("floor-sum closed form holds for 1 <= a, b <= 200") {
  for (std::int64_t a = 1; a <= 200; ++a)
    for (std::int64_t b = 1; b <= 200; ++b) REQUIRE(floor_sum(a, b) == floor_sum_closed(a, b));
}

TEST_CASE("modular inverse") {
  CHECK(mod_inverse(-3, 4) == 1);
  CHECK(mod_inverse(-1, 8) == 7);
  CHECK(mod_inverse(3, 7) == 5);
  for (std::int64_t m = 2; m <= 30; ++m)
    for (std::int64_t a = -40; a <= 40; ++a) {
      if (std::gcd(a, m) != 1) {
        CHECK_THROWS_AS(mod_inverse(a, m), Error);
        continue;
      }
      CHECK(mod_floor(a * mod_inverse(a, m), m) == 1);
    }
}

TEST_CASE("checked arithmetic detects overflow") {
  CHECK_THROWS_AS(checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 40), Error);
  CHECK_THROWS_AS(checked_pow(2, 64), Error);
  CHECK(checked_pow(3, 4) == 81);
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}
