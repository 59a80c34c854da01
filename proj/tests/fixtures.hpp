#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "wsg/model.hpp"

namespace wsg::testing {

// y^8 + y^4 + y^2 + y = x(x+1)/(x^3+x+1) over F_8, degrees only.
inline FieldSpec e1() { return build_spec(2, 3, {{1, 1}, {1, 1}, {1, 1}}, {{1, 1}, {1, 1}}); }

// y^4 + y^2 + y = x^2(x+1)^2(x^2+x+1)/(x^3+x+1) over F_8.
inline FieldSpec e2() { return build_spec(2, 2, {{1, 1}, {1, 1}, {1, 1}}, {{2, 1}, {2, 1}, {1, 2}}); }

// p = 2, n = 1, three poles (one of degree 2), no zeros: n0 = -4.
inline FieldSpec d1() { return build_spec(2, 1, {{1, 1}, {1, 1}, {1, 2}}, {}); }

struct SweepLimits {
  std::int64_t max_q = 16;
  int max_s = 3;
  int max_r = 3;
  std::int64_t max_deg = 3;
  std::int64_t max_mult = 10;
};

// Random valid spec with at least one degree-one place in I.
inline FieldSpec random_spec(std::mt19937_64& rng, const SweepLimits& lim = {}) {
  const std::int64_t primes[] = {2, 3, 5};
  auto pick = [&rng](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  while (true) {
    const std::int64_t p = primes[pick(0, 2)];
    int max_n = 0;
    for (std::int64_t q = p; q <= lim.max_q; q *= p) ++max_n;
    if (max_n == 0) continue;
    const int n = static_cast<int>(pick(1, max_n));
    std::vector<PoleDatum> poles;
    std::vector<ZeroDatum> zeros;
    const auto s = pick(0, lim.max_s), r = pick(0, lim.max_r);
    for (int i = 0; i < s; ++i) {
      std::int64_t mult = pick(1, lim.max_mult);
      while (std::gcd(mult, p) != 1) mult = pick(1, lim.max_mult);
      poles.push_back({mult, pick(1, lim.max_deg)});
    }
    for (int j = 0; j < r; ++j) zeros.push_back({pick(1, lim.max_mult), pick(1, lim.max_deg)});
    try {
      FieldSpec spec = build_spec(p, n, poles, zeros);
      for (const auto& x : spec.ramified())
        if (x.deg == 1) return spec;
    } catch (const std::exception&) {
      // gcd(n0, p) != 1 or empty data: draw again
    }
  }
}

inline std::vector<int> degree_one_places(const FieldSpec& spec) {
  std::vector<int> out;
  for (const auto& x : spec.ramified())
    if (x.deg == 1) out.push_back(x.index);
  return out;
}

// gcd(lambda, p) = 1, lambda in [-50, 50] \ {0}.
inline std::int64_t random_lambda(std::mt19937_64& rng, std::int64_t p) {
  std::uniform_int_distribution<std::int64_t> dist(-50, 50);
  while (true) {
    const auto v = dist(rng);
    if (v != 0 && std::gcd(v, p) == 1) return v;
  }
}

}  // namespace wsg::testing
