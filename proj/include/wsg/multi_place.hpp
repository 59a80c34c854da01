#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wsg/model.hpp"

namespace wsg {

using Tuple = std::vector<std::int64_t>;

// Guard on the oracle's candidate box, prod_k |G(Q_{l_k})|.
inline constexpr std::int64_t kDefaultOracleBudget = 10'000'000;

// values[k] = j_vec[k] * p^n - i * lambda * n_{l_k}, one shared i.
struct GammaTuple {
  Tuple values;
  std::int64_t i = 0;
  std::vector<std::int64_t> j_vec;
  std::int64_t lambda = 0;
};

struct GammaSet {
  std::vector<int> places;
  std::int64_t lambda = 0;
  std::vector<GammaTuple> tuples;  // sorted lexicographically by values

  std::vector<Tuple> values() const;
};

// Closed form for the minimal generating tuples at t >= 2 degree-one places.
GammaSet gamma(const FieldSpec& spec, std::span<const int> places, std::int64_t lambda = -1);

// Independent route: scans G(Q_{l_1}) x ... x G(Q_{l_t}) and keeps tuples of
// H whose dimensions satisfy l(A - P) = l(A - P - Q) for all pairs P != Q.
std::vector<Tuple> gamma_oracle(const FieldSpec& spec, std::span<const int> places,
                                std::int64_t budget = kDefaultOracleBudget);

// Factored function whose pole divisor is sum_k values[k] Q_{l_k}.
WitnessExpr gamma_witness(const FieldSpec& spec, std::span<const int> places, const GammaTuple& tuple);

// Union over nonempty subsets M of the places of the zero-padded Gamma(M).
// Singletons contribute H(Q_l) cut off at `cap`; cap < 0 selects
// max_l frobenius(Q_l) + p^n (or p^n at genus 0).
std::vector<Tuple> tilde_gamma(const FieldSpec& spec, std::span<const int> places, std::int64_t cap = -1,
                               std::int64_t lambda = -1);

Tuple lub(std::span<const Tuple> tuples);

// a is a lub of elements of the generating set iff every coordinate k has
// some u in it with u <= a and u_k = a_k. Elements above a never matter, so
// the singleton cap max(a) is exact.
bool closure_membership(const FieldSpec& spec, std::span<const int> places, std::span<const std::int64_t> tuple,
                        std::int64_t lambda = -1);

// Same test against a precomputed generating set.
bool lub_closure_contains(std::span<const Tuple> generators, std::span<const std::int64_t> tuple);

}  // namespace wsg
