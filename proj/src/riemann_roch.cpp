#include "wsg/riemann_roch.hpp"

#include <algorithm>
#include <set>

#include "wsg/arith.hpp"
#include "wsg/error.hpp"

namespace wsg {

namespace {

// Coefficient of every place of I, in the order of spec.ramified().
std::vector<std::int64_t> dense_coeffs(const FieldSpec& spec, const CoeffVector& coeffs) {
  const auto& places = spec.ramified();
  std::vector<std::int64_t> dense(places.size(), 0);
  std::vector<bool> seen(places.size(), false);
  for (const auto& pc : coeffs) {
    const auto it = std::find_if(places.begin(), places.end(), [&](const IndexedDatum& x) { return x.index == pc.place; });
    if (it == places.end())
      throw Error(ErrorCode::IndexOutOfRange, "place index " + std::to_string(pc.place) + " is not in I");
    const auto pos = static_cast<std::size_t>(it - places.begin());
    if (seen[pos]) throw Error(ErrorCode::DuplicatePlace, "place " + std::to_string(pc.place) + " listed twice");
    seen[pos] = true;
    dense[pos] = pc.coeff;
  }
  return dense;
}

// Restricted degree sum_i floor((a_i - k n_i) / p^n) d_i.
std::int64_t restricted_degree(const FieldSpec& spec, const std::vector<std::int64_t>& dense, std::int64_t k) {
  const auto& places = spec.ramified();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < places.size(); ++i) {
    const std::int64_t c = floor_div(checked_add(dense[i], -checked_mul(k, places[i].mult)), spec.q_pow());
    total = checked_add(total, checked_mul(c, places[i].deg));
  }
  return total;
}

std::int64_t dimension_dense(const FieldSpec& spec, const std::vector<std::int64_t>& dense) {
  std::int64_t total = 0;
  for (std::int64_t k = 0; k < spec.q_pow(); ++k) total += std::max<std::int64_t>(0, restricted_degree(spec, dense, k) + 1);
  return total;
}

}  // namespace

std::int64_t rr_dimension(const FieldSpec& spec, const CoeffVector& coeffs) {
  return dimension_dense(spec, dense_coeffs(spec, coeffs));
}

std::vector<BasisDescriptor> rr_basis(const FieldSpec& spec, const CoeffVector& coeffs) {
  const auto dense = dense_coeffs(spec, coeffs);
  const auto& places = spec.ramified();
  std::vector<BasisDescriptor> out;
  for (std::int64_t k = 0; k < spec.q_pow(); ++k) {
    BasisDescriptor b;
    b.k = k;
    for (std::size_t i = 0; i < places.size(); ++i) {
      const std::int64_t c = floor_div(dense[i] - k * places[i].mult, spec.q_pow());
      b.denom_exp[places[i].index] = c;
      b.num_degree_bound += c * places[i].deg;
      if (c < 0) b.mandatory_factor[places[i].index] = -c;
    }
    if (b.contribution() > 0) out.push_back(std::move(b));
  }
  return out;
}

void require_degree_one_places(const FieldSpec& spec, std::span<const int> places) {
  std::set<int> seen;
  for (int l : places) {
    if (spec.at_I(l).deg != 1)
      throw Error(ErrorCode::DegreeNotOne, "place Q" + std::to_string(l) + " has degree " +
                                               std::to_string(spec.at_I(l).deg));
    if (!seen.insert(l).second) throw Error(ErrorCode::DuplicatePlace, "place Q" + std::to_string(l) + " repeated");
  }
}

bool is_gap(const FieldSpec& spec, int l, std::int64_t a) {
  const int one[] = {l};
  require_degree_one_places(spec, one);
  if (a <= 0) throw Error(ErrorCode::NonPositive, "gap candidates must be positive");
  const std::int64_t q = spec.q_pow();
  const std::int64_t n_l = spec.at_I(l).mult;
  const std::int64_t k = mod_floor(checked_mul(mod_floor(a, q), mod_inverse(n_l, q)), q);
  std::int64_t lhs = floor_div(a - k * n_l, q);
  for (const auto& x : spec.ramified())
    if (x.index != l) lhs += floor_div(-k * x.mult, q) * x.deg;
  return lhs <= -1;
}

std::vector<std::int64_t> gap_set_oracle(const FieldSpec& spec, int l) {
  const int one[] = {l};
  require_degree_one_places(spec, one);
  std::vector<std::int64_t> gaps;
  const std::int64_t g = spec.genus();
  std::int64_t prev = 1;  // l(0)
  for (std::int64_t a = 1; a <= 2 * g - 1; ++a) {
    const std::int64_t cur = rr_dimension(spec, {{l, a}});
    if (cur == prev) gaps.push_back(a);
    prev = cur;
  }
  if (static_cast<std::int64_t>(gaps.size()) != g)
    throw Error(ErrorCode::Internal, "found " + std::to_string(gaps.size()) + " gaps at Q" + std::to_string(l) +
                                         " but the genus is " + std::to_string(g));
  return gaps;
}

bool membership_multi(const FieldSpec& spec, std::span<const int> places, std::span<const std::int64_t> tuple) {
  if (places.size() != tuple.size()) throw Error(ErrorCode::InvalidArgument, "tuple length does not match place count");
  require_degree_one_places(spec, places);
  for (auto a : tuple)
    if (a < 0) throw Error(ErrorCode::InvalidArgument, "tuple entries must be nonnegative");
  CoeffVector cv;
  for (std::size_t k = 0; k < places.size(); ++k) cv.push_back({places[k], tuple[k]});
  auto dense = dense_coeffs(spec, cv);
  const std::int64_t full = dimension_dense(spec, dense);
  for (std::size_t k = 0; k < places.size(); ++k) {
    auto lowered = cv;
    lowered[k].coeff -= 1;
    if (rr_dimension(spec, lowered) + 1 != full) return false;
  }
  return true;
}

}  // namespace wsg
