#include "wsg/single_place.hpp"

#include <algorithm>
#include <numeric>

#include "wsg/arith.hpp"
#include "wsg/error.hpp"
#include "wsg/fault.hpp"
#include "wsg/riemann_roch.hpp"

namespace wsg {

namespace {

const IndexedDatum& degree_one_place(const FieldSpec& spec, int l) {
  const auto& place = spec.at_I(l);
  if (place.deg != 1)
    throw Error(ErrorCode::DegreeNotOne, "place Q" + std::to_string(l) + " has degree " + std::to_string(place.deg));
  return place;
}

void require_positive_genus(const FieldSpec& spec, const char* what) {
  if (spec.genus() < 1) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is undefined for genus 0");
}

}  // namespace

std::int64_t inverse_lambda(const FieldSpec& spec, int l) {
  const auto& place = spec.at_I(l);
  return mod_inverse(-place.mult, spec.q_pow());
}

GapSet gap_set(const FieldSpec& spec, int l, std::int64_t lambda) {
  const auto& place = degree_one_place(spec, l);
  if (std::gcd(lambda, spec.p()) != 1)
    throw Error(ErrorCode::GcdViolation, "gcd(lambda, p) != 1 for lambda = " + std::to_string(lambda));
  const std::int64_t q = spec.q_pow();
  GapSet out;
  out.place = l;
  out.lambda = lambda;
  for (std::int64_t i = 1; i < q; ++i) {
    const std::int64_t il = checked_mul(i, lambda);
    const std::int64_t shift = checked_mul(il, place.mult);
    std::int64_t hi = checked_mul(spec.m(), ceil_div(il, q)) + WSG_MUTABLE_FLOOR(shift, q) - 1;
    for (const auto& x : spec.ramified()) hi -= checked_mul(floor_div(checked_mul(il, x.mult), q), x.deg);
    for (std::int64_t j = ceil_div(shift, q); j <= hi; ++j)
      out.parameterization.push_back({i, j, checked_mul(j, q) - shift});
  }
  for (const auto& gp : out.parameterization) out.elements.push_back(gp.value);
  std::sort(out.elements.begin(), out.elements.end());
  if (std::adjacent_find(out.elements.begin(), out.elements.end()) != out.elements.end())
    throw Error(ErrorCode::Internal, "gap parameterization is not injective");
  if (static_cast<std::int64_t>(out.elements.size()) != spec.genus())
    throw Error(ErrorCode::Internal, "gap count " + std::to_string(out.elements.size()) + " differs from genus " +
                                         std::to_string(spec.genus()));
  return out;
}

std::vector<std::int64_t> semigroup_generators(const FieldSpec& spec, int l) {
  const auto& place = degree_one_place(spec, l);
  const std::int64_t q = spec.q_pow();
  std::vector<std::int64_t> gens{q};
  for (std::int64_t i = 1; i < q; ++i) {
    std::int64_t coeff = -ceil_div(i * place.mult, q);
    for (const auto& x : spec.ramified()) coeff += checked_mul(ceil_div(checked_mul(i, x.mult), q), x.deg);
    gens.push_back(checked_add(checked_mul(coeff, q), checked_mul(i, place.mult)));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

std::int64_t multiplicity(const FieldSpec& spec, int l) {
  const auto& place = degree_one_place(spec, l);
  if (spec.ramified().size() >= 2) return spec.q_pow();
  return std::min(spec.q_pow(), place.mult);
}

std::int64_t frobenius(const FieldSpec& spec, int l) {
  const auto& place = degree_one_place(spec, l);
  require_positive_genus(spec, "the Frobenius number");
  const std::int64_t q = spec.q_pow();
  std::int64_t coeff = spec.m() + floor_div(place.mult, q) - 1;
  for (const auto& x : spec.ramified()) coeff -= floor_div(x.mult, q) * x.deg;
  return checked_mul(coeff, q) - place.mult;
}

bool is_symmetric(const FieldSpec& spec, int l) {
  degree_one_place(spec, l);
  require_positive_genus(spec, "symmetry");
  const std::int64_t q = spec.q_pow();
  return std::all_of(spec.ramified().begin(), spec.ramified().end(), [&](const IndexedDatum& x) {
    return x.index == l || mod_floor(x.mult + 1, q) == 0;
  });
}

bool same_semigroup_criterion(const FieldSpec& spec, int i, int j) {
  const auto& a = degree_one_place(spec, i);
  const auto& b = degree_one_place(spec, j);
  return mod_floor(a.mult - b.mult, spec.q_pow()) == 0;
}

SemigroupProfile semigroup_profile(const FieldSpec& spec, int l) {
  SemigroupProfile out;
  out.place = l;
  out.generators = semigroup_generators(spec, l);
  out.multiplicity = multiplicity(spec, l);
  out.frobenius = frobenius(spec, l);
  out.symmetric = is_symmetric(spec, l);
  return out;
}

std::vector<bool> generated_members(std::span<const std::int64_t> gens, std::int64_t limit) {
  std::vector<bool> member(static_cast<std::size_t>(limit + 1), false);
  member[0] = true;
  for (std::int64_t v = 1; v <= limit; ++v)
    for (auto g : gens)
      if (g > 0 && g <= v && member[static_cast<std::size_t>(v - g)]) {
        member[static_cast<std::size_t>(v)] = true;
        break;
      }
  return member;
}

std::vector<std::int64_t> prune_generators(std::span<const std::int64_t> gens) {
  std::vector<std::int64_t> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::int64_t> kept;
  for (auto g : sorted) {
    if (g <= 0) continue;
    if (!generated_members(kept, g)[static_cast<std::size_t>(g)]) kept.push_back(g);
  }
  return kept;
}

}  // namespace wsg
