#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wsg/model.hpp"

namespace wsg {

// Element value = j * p^n - i * lambda * n_l.
struct GapParam {
  std::int64_t i;
  std::int64_t j;
  std::int64_t value;
};

struct GapSet {
  int place = 0;
  std::int64_t lambda = -1;
  std::vector<std::int64_t> elements;  // sorted ascending
  std::vector<GapParam> parameterization;
};

struct SemigroupProfile {
  int place = 0;
  std::vector<std::int64_t> generators;
  std::int64_t multiplicity = 0;
  std::int64_t frobenius = 0;
  bool symmetric = false;
};

// lambda in [1, p^n) with lambda * (-n_l) == 1 (mod p^n).
std::int64_t inverse_lambda(const FieldSpec& spec, int l);

GapSet gap_set(const FieldSpec& spec, int l, std::int64_t lambda = -1);

std::vector<std::int64_t> semigroup_generators(const FieldSpec& spec, int l);

std::int64_t multiplicity(const FieldSpec& spec, int l);

// Undefined (throws InvalidArgument) when the genus is 0.
std::int64_t frobenius(const FieldSpec& spec, int l);

bool is_symmetric(const FieldSpec& spec, int l);

// n_i == n_j (mod p^n); sufficient for H(Q_i) = H(Q_j), not necessary.
bool same_semigroup_criterion(const FieldSpec& spec, int i, int j);

SemigroupProfile semigroup_profile(const FieldSpec& spec, int l);

// Membership table of the numerical semigroup generated by gens on [0, limit].
std::vector<bool> generated_members(std::span<const std::int64_t> gens, std::int64_t limit);

// Post-processing: drops generators that are sums of smaller ones.
std::vector<std::int64_t> prune_generators(std::span<const std::int64_t> gens);

}  // namespace wsg
