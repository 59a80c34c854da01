#include "wsg/multi_place.hpp"

#include <algorithm>
#include <numeric>

#include "wsg/arith.hpp"
#include "wsg/error.hpp"
#include "wsg/fault.hpp"
#include "wsg/riemann_roch.hpp"
#include "wsg/single_place.hpp"

namespace wsg {

namespace {

void check_gamma_places(const FieldSpec& spec, std::span<const int> places) {
  if (places.size() < 2) throw Error(ErrorCode::TooFewPlaces, "at least two places are required");
  if (places.size() > spec.ramified().size())
    throw Error(ErrorCode::TooManyPlaces, "more places than |I| = " + std::to_string(spec.ramified().size()));
  require_degree_one_places(spec, places);
}

void check_lambda(const FieldSpec& spec, std::int64_t lambda) {
  if (std::gcd(lambda, spec.p()) != 1)
    throw Error(ErrorCode::GcdViolation, "gcd(lambda, p) != 1 for lambda = " + std::to_string(lambda));
}

// Right-hand side of the j-sum identity for a given i.
std::int64_t j_sum_target(const FieldSpec& spec, std::span<const int> places, std::int64_t il) {
  const std::int64_t q = spec.q_pow();
  std::int64_t total = checked_mul(spec.m(), ceil_div(il, q));
  for (const auto& x : spec.ramified()) total -= checked_mul(floor_div(checked_mul(il, x.mult), q), x.deg);
  for (int l : places) total += WSG_MUTABLE_FLOOR(checked_mul(il, spec.at_I(l).mult), q);
  return total;
}

bool lex_less(const GammaTuple& a, const GammaTuple& b) { return a.values < b.values; }

// Dense coefficient vector over I with a dimension evaluator, for the oracle loops.
class DimensionProbe {
 public:
  DimensionProbe(const FieldSpec& spec, std::span<const int> places) : spec_(spec) {
    for (int l : places) {
      const auto& I = spec.ramified();
      const auto it = std::find_if(I.begin(), I.end(), [l](const IndexedDatum& x) { return x.index == l; });
      pos_.push_back(static_cast<std::size_t>(it - I.begin()));
    }
  }

  std::int64_t operator()(std::span<const std::int64_t> tuple) const {
    const auto& I = spec_.ramified();
    std::vector<std::int64_t> dense(I.size(), 0);
    for (std::size_t k = 0; k < pos_.size(); ++k) dense[pos_[k]] = tuple[k];
    const std::int64_t q = spec_.q_pow();
    std::int64_t total = 0;
    for (std::int64_t k = 0; k < q; ++k) {
      std::int64_t deg = 1;
      for (std::size_t i = 0; i < I.size(); ++i) deg += floor_div(dense[i] - k * I[i].mult, q) * I[i].deg;
      total += std::max<std::int64_t>(0, deg);
    }
    return total;
  }

 private:
  const FieldSpec& spec_;
  std::vector<std::size_t> pos_;
};

}  // namespace

std::vector<Tuple> GammaSet::values() const {
  std::vector<Tuple> out;
  out.reserve(tuples.size());
  for (const auto& t : tuples) out.push_back(t.values);
  return out;
}

GammaSet gamma(const FieldSpec& spec, std::span<const int> places, std::int64_t lambda) {
  check_gamma_places(spec, places);
  check_lambda(spec, lambda);
  const std::int64_t q = spec.q_pow();
  const std::size_t t = places.size();
  GammaSet out;
  out.places.assign(places.begin(), places.end());
  out.lambda = lambda;

  for (std::int64_t i = 1; i < q; ++i) {
    const std::int64_t il = checked_mul(i, lambda);
    std::vector<std::int64_t> shift(t), lower(t);
    std::int64_t slack = j_sum_target(spec, places, il);
    for (std::size_t k = 0; k < t; ++k) {
      shift[k] = checked_mul(il, spec.at_I(places[k]).mult);
      lower[k] = ceil_div(shift[k], q);
      slack -= lower[k];
    }
    if (slack < 0) continue;
    // Distribute the slack over the t coordinates above their lower bounds.
    std::vector<std::int64_t> extra(t, 0);
    extra[t - 1] = slack;
    while (true) {
      GammaTuple gt;
      gt.i = i;
      gt.lambda = lambda;
      bool positive = true;
      for (std::size_t k = 0; k < t; ++k) {
        const std::int64_t j = lower[k] + extra[k];
        gt.j_vec.push_back(j);
        gt.values.push_back(checked_mul(j, q) - shift[k]);
        positive = positive && gt.values.back() > 0;
      }
      if (positive) out.tuples.push_back(std::move(gt));
      // Next composition in colex order: move one unit leftward.
      std::size_t k = t - 1;
      while (k > 0 && extra[k] == 0) --k;
      if (k == 0) break;
      const std::int64_t carry = extra[k];
      extra[k] = 0;
      extra[k - 1] += 1;
      extra[t - 1] = carry - 1;
    }
  }
  std::sort(out.tuples.begin(), out.tuples.end(), lex_less);
  if (out.tuples.empty()) throw Error(ErrorCode::Internal, "closed-form Gamma is empty");
  return out;
}

std::vector<Tuple> gamma_oracle(const FieldSpec& spec, std::span<const int> places, std::int64_t budget) {
  check_gamma_places(spec, places);
  std::vector<std::vector<std::int64_t>> gaps;
  std::int64_t box = 1;
  for (int l : places) {
    gaps.push_back(gap_set_oracle(spec, l));
    box = checked_mul(box, static_cast<std::int64_t>(gaps.back().size()));
    if (box > budget)
      throw Error(ErrorCode::BudgetExceeded, "oracle candidate box exceeds " + std::to_string(budget) + " tuples");
  }
  const std::size_t t = places.size();
  const DimensionProbe dim(spec, places);
  std::vector<Tuple> out;
  std::vector<std::size_t> idx(t, 0);
  Tuple a(t);
  while (true) {
    for (std::size_t k = 0; k < t; ++k) a[k] = gaps[k][idx[k]];
    const std::int64_t full = dim(a);
    std::vector<std::int64_t> less_one(t);
    bool keep = true;
    for (std::size_t k = 0; k < t && keep; ++k) {
      Tuple b = a;
      b[k] -= 1;
      less_one[k] = dim(b);
      keep = less_one[k] + 1 == full;
    }
    for (std::size_t k = 0; k < t && keep; ++k)
      for (std::size_t h = k + 1; h < t && keep; ++h) {
        Tuple b = a;
        b[k] -= 1;
        b[h] -= 1;
        keep = dim(b) + 1 == full;
      }
    if (keep) out.push_back(a);

    std::size_t k = t;
    while (k > 0) {
      --k;
      if (++idx[k] < gaps[k].size()) break;
      idx[k] = 0;
      if (k == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
  }
}

WitnessExpr gamma_witness(const FieldSpec& spec, std::span<const int> places, const GammaTuple& tuple) {
  check_gamma_places(spec, places);
  check_lambda(spec, tuple.lambda);
  const std::int64_t q = spec.q_pow();
  const std::size_t t = places.size();
  const auto reject = [](const std::string& why) { throw Error(ErrorCode::NotInGamma, why); };
  if (tuple.values.size() != t || tuple.j_vec.size() != t) reject("tuple length does not match the places");
  if (tuple.i < 1 || tuple.i >= q) reject("i outside 1..p^n-1");
  const std::int64_t il = checked_mul(tuple.i, tuple.lambda);
  std::int64_t j_sum = 0;
  for (std::size_t k = 0; k < t; ++k) {
    const std::int64_t shift = checked_mul(il, spec.at_I(places[k]).mult);
    if (tuple.j_vec[k] < ceil_div(shift, q)) reject("j below its lower bound");
    if (tuple.values[k] != tuple.j_vec[k] * q - shift || tuple.values[k] <= 0) reject("value inconsistent with (i, j)");
    j_sum += tuple.j_vec[k];
  }
  if (j_sum != j_sum_target(spec, places, il)) reject("j-sum identity fails");

  const std::int64_t c = ceil_div(il, q);
  WitnessExpr w;
  w.y_exp = -il;
  w.ratio_exp = c;
  for (const auto& z : spec.zero_places()) w.q_exp[z.index] = checked_mul(z.mult, c);
  for (const auto& x : spec.ramified()) {
    const auto it = std::find(places.begin(), places.end(), x.index);
    w.p_exp[x.index] = it != places.end() ? -tuple.j_vec[static_cast<std::size_t>(it - places.begin())]
                                          : -floor_div(checked_mul(il, x.mult), q);
  }
  return w;
}

std::vector<Tuple> tilde_gamma(const FieldSpec& spec, std::span<const int> places, std::int64_t cap,
                               std::int64_t lambda) {
  if (places.empty()) throw Error(ErrorCode::TooFewPlaces, "at least one place is required");
  require_degree_one_places(spec, places);
  check_lambda(spec, lambda);
  const std::size_t s = places.size();
  if (s > 30) throw Error(ErrorCode::BudgetExceeded, "too many places for subset enumeration");
  if (cap < 0) {
    cap = spec.q_pow();
    if (spec.genus() > 0)
      for (int l : places) cap = std::max(cap, frobenius(spec, l) + spec.q_pow());
  }

  std::vector<Tuple> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << s); ++mask) {
    std::vector<int> subset;
    std::vector<std::size_t> pos;
    for (std::size_t k = 0; k < s; ++k)
      if (mask & (std::uint32_t{1} << k)) {
        subset.push_back(places[k]);
        pos.push_back(k);
      }
    if (subset.size() == 1) {
      const auto gaps = gap_set(spec, subset[0]).elements;
      for (std::int64_t v = 0; v <= cap; ++v) {
        if (std::binary_search(gaps.begin(), gaps.end(), v)) continue;
        Tuple u(s, 0);
        u[pos[0]] = v;
        out.push_back(std::move(u));
      }
    } else {
      for (const auto& gt : gamma(spec, subset, lambda).tuples) {
        Tuple u(s, 0);
        for (std::size_t k = 0; k < pos.size(); ++k) u[pos[k]] = gt.values[k];
        out.push_back(std::move(u));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Tuple lub(std::span<const Tuple> tuples) {
  if (tuples.empty()) throw Error(ErrorCode::EmptyInput, "lub of an empty family");
  Tuple out = tuples.front();
  for (const auto& u : tuples) {
    if (u.size() != out.size()) throw Error(ErrorCode::InvalidArgument, "tuples of different lengths");
    for (std::size_t k = 0; k < u.size(); ++k) out[k] = std::max(out[k], u[k]);
  }
  return out;
}

bool lub_closure_contains(std::span<const Tuple> generators, std::span<const std::int64_t> tuple) {
  const std::size_t s = tuple.size();
  std::vector<bool> covered(s, false);
  for (const auto& u : generators) {
    if (u.size() != s) throw Error(ErrorCode::InvalidArgument, "generator length does not match tuple");
    bool below = true;
    for (std::size_t k = 0; k < s && below; ++k) below = u[k] <= tuple[k];
    if (!below) continue;
    for (std::size_t k = 0; k < s; ++k)
      if (u[k] == tuple[k]) covered[k] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

bool closure_membership(const FieldSpec& spec, std::span<const int> places, std::span<const std::int64_t> tuple,
                        std::int64_t lambda) {
  if (tuple.size() != places.size()) throw Error(ErrorCode::InvalidArgument, "tuple length does not match place count");
  std::int64_t cap = 0;
  for (auto a : tuple) {
    if (a < 0) throw Error(ErrorCode::InvalidArgument, "tuple entries must be nonnegative");
    cap = std::max(cap, a);
  }
  return lub_closure_contains(tilde_gamma(spec, places, cap, lambda), tuple);
}

}  // namespace wsg
