#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "wsg/model.hpp"

namespace wsg {

struct PlaceCoeff {
  int place;  // index in I
  std::int64_t coeff;
};

// Divisor sum a * Q_place; unlisted places of I have coefficient 0.
using CoeffVector = std::vector<PlaceCoeff>;

// One summand L((D + (y^k))|_{K(x)}) * y^k of the direct-sum decomposition of
// L(D). Its elements are y^k * h(x) * prod_{c<0} p_i^{-c} / prod_{c>0} p_i^{c}
// with deg h <= num_degree_bound.
struct BasisDescriptor {
  std::int64_t k = 0;
  std::map<int, std::int64_t> denom_exp;         // c_{i,k}
  std::int64_t num_degree_bound = 0;             // sum_i c_{i,k} d_i
  std::map<int, std::int64_t> mandatory_factor;  // -c_{i,k} where negative

  std::int64_t contribution() const { return num_degree_bound + 1; }
};

std::int64_t rr_dimension(const FieldSpec& spec, const CoeffVector& coeffs);
std::vector<BasisDescriptor> rr_basis(const FieldSpec& spec, const CoeffVector& coeffs);

// Closed gap criterion at Q_l for d_l = 1.
bool is_gap(const FieldSpec& spec, int l, std::int64_t a);

// Gaps at Q_l found as dimension jumps l(aQ) == l((a-1)Q) for 1 <= a <= 2g-1.
std::vector<std::int64_t> gap_set_oracle(const FieldSpec& spec, int l);

// Whether tuple lies in H(Q_{places[0]}, ...), by the dimension criterion.
bool membership_multi(const FieldSpec& spec, std::span<const int> places, std::span<const std::int64_t> tuple);

// Throws unless places are distinct members of I with degree one.
void require_degree_one_places(const FieldSpec& spec, std::span<const int> places);

}  // namespace wsg
