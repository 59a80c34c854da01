#include "wsg/model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wsg/arith.hpp"
#include "wsg/error.hpp"

namespace wsg {

bool FieldSpec::in_I(int i) const {
  return std::any_of(I_.begin(), I_.end(), [i](const IndexedDatum& x) { return x.index == i; });
}

bool FieldSpec::in_J(int j) const {
  return std::any_of(J_.begin(), J_.end(), [j](const IndexedDatum& x) { return x.index == j; });
}

const IndexedDatum& FieldSpec::at_I(int i) const {
  for (const auto& x : I_)
    if (x.index == i) return x;
  throw Error(ErrorCode::IndexOutOfRange, "place index " + std::to_string(i) + " is not in I");
}

const IndexedDatum& FieldSpec::at_J(int j) const {
  for (const auto& x : J_)
    if (x.index == j) return x;
  throw Error(ErrorCode::IndexOutOfRange, "zero index " + std::to_string(j) + " is not in J");
}

std::int64_t FieldSpec::sum_deg_I() const {
  std::int64_t total = 0;
  for (const auto& x : I_) total = checked_add(total, x.deg);
  return total;
}

FieldSpec build_spec(std::int64_t p, int n, std::vector<PoleDatum> poles, std::vector<ZeroDatum> zeros,
                     std::int64_t max_degree) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrimeP, "p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  if (poles.empty() && zeros.empty()) throw Error(ErrorCode::EmptyData, "no pole or zero data given");
  for (const auto& pd : poles)
    if (pd.mult < 1 || pd.deg < 1) throw Error(ErrorCode::InvalidArgument, "pole multiplicities and degrees must be >= 1");
  for (const auto& zd : zeros)
    if (zd.mult < 1 || zd.deg < 1) throw Error(ErrorCode::InvalidArgument, "zero multiplicities and degrees must be >= 1");

  FieldSpec s;
  s.p_ = p;
  s.n_ = n;
  s.q_pow_ = checked_pow(p, n);
  if (s.q_pow_ > max_degree)
    throw Error(ErrorCode::BudgetExceeded, "p^n = " + std::to_string(s.q_pow_) + " exceeds the limit " +
                                               std::to_string(max_degree));

  for (std::size_t i = 0; i < poles.size(); ++i)
    if (std::gcd(poles[i].mult, p) != 1)
      throw Error(ErrorCode::GcdViolation, "gcd(n_" + std::to_string(i + 1) + ", p) != 1");

  std::int64_t pole_sum = 0, zero_sum = 0;
  for (const auto& pd : poles) pole_sum = checked_add(pole_sum, checked_mul(pd.mult, pd.deg));
  for (const auto& zd : zeros) zero_sum = checked_add(zero_sum, checked_mul(zd.mult, zd.deg));
  s.n0_ = zero_sum - pole_sum;
  if (s.n0_ > 0 && std::gcd(s.n0_, p) != 1)
    throw Error(ErrorCode::GcdViolation, "n0 = " + std::to_string(s.n0_) + " > 0 with gcd(n0, p) != 1");

  if (s.n0_ > 0) s.I_.push_back({0, s.n0_, 1});
  for (std::size_t i = 0; i < poles.size(); ++i)
    s.I_.push_back({static_cast<int>(i + 1), poles[i].mult, poles[i].deg});
  if (s.n0_ < 0) s.J_.push_back({0, -s.n0_, 1});
  for (std::size_t j = 0; j < zeros.size(); ++j)
    s.J_.push_back({static_cast<int>(j + 1), zeros[j].mult, zeros[j].deg});

  std::int64_t m_from_I = 0, m_from_J = 0;
  for (const auto& x : s.I_) m_from_I = checked_add(m_from_I, checked_mul(x.mult, x.deg));
  for (const auto& x : s.J_) m_from_J = checked_add(m_from_J, checked_mul(x.mult, x.deg));
  if (m_from_I != m_from_J) throw Error(ErrorCode::Internal, "pole and zero degree sums disagree");
  if (m_from_I < 1) throw Error(ErrorCode::EmptyData, "right-hand side is constant");
  s.m_ = m_from_I;

  const std::int64_t twice_g = checked_mul(s.q_pow_ - 1, s.m_ + s.sum_deg_I() - 2);
  if (twice_g < 0 || twice_g % 2 != 0) throw Error(ErrorCode::Internal, "genus formula is not a nonnegative integer");
  s.genus_ = twice_g / 2;

  s.poles_ = std::move(poles);
  s.zeros_ = std::move(zeros);
  return s;
}

std::int64_t genus(const FieldSpec& spec) { return spec.genus(); }

std::string to_string(const PlaceId& place) {
  switch (place.kind) {
    case PlaceId::Kind::Q: return "Q" + std::to_string(place.a);
    case PlaceId::Kind::R: return "R" + std::to_string(place.a) + "," + std::to_string(place.b);
    case PlaceId::Kind::D0: return "D0";
  }
  return "?";
}

std::int64_t Divisor::operator[](const PlaceId& place) const {
  const auto it = coeffs_.find(place);
  return it == coeffs_.end() ? 0 : it->second;
}

void Divisor::add(const PlaceId& place, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(place, 0);
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) coeffs_.erase(it);
}

Divisor& Divisor::operator+=(const Divisor& other) {
  for (const auto& [place, c] : other.coeffs_) add(place, c);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) {
  for (const auto& [place, c] : other.coeffs_) add(place, -c);
  return *this;
}

Divisor operator*(std::int64_t scalar, const Divisor& d) {
  Divisor out;
  for (const auto& [place, c] : d.coeffs_) out.add(place, checked_mul(scalar, c));
  return out;
}

std::int64_t Divisor::degree(const FieldSpec& spec) const {
  std::int64_t total = 0;
  for (const auto& [place, c] : coeffs_) {
    std::int64_t w = 0;
    switch (place.kind) {
      case PlaceId::Kind::Q: w = spec.at_I(place.a).deg; break;
      case PlaceId::Kind::R: w = spec.at_J(place.a).deg; break;
      case PlaceId::Kind::D0: w = spec.q_pow(); break;
    }
    total = checked_add(total, checked_mul(c, w));
  }
  return total;
}

Divisor Divisor::pole_part() const {
  Divisor out;
  for (const auto& [place, c] : coeffs_)
    if (c < 0) out.add(place, -c);
  return out;
}

std::string to_string(const Divisor& d) {
  if (d.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [place, c] : d.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const std::int64_t a = c < 0 ? -c : c;
    if (a != 1) os << a << "*";
    os << to_string(place);
  }
  return os.str();
}

namespace {

void check_beta_index(const FieldSpec& spec, int k) {
  if (k < 1 || k > spec.q_pow())
    throw Error(ErrorCode::IndexOutOfRange, "root index " + std::to_string(k) + " outside 1..p^n");
}

}  // namespace

Divisor principal_divisor(const FieldSpec& spec, const Factor& factor) {
  Divisor out;
  if (const auto* f = std::get_if<PolyP>(&factor)) {
    const auto& data = spec.at_I(f->i);
    out.add(PlaceId::q(f->i), spec.q_pow());
    out.add(PlaceId::d0(), -data.deg);
  } else if (const auto* f = std::get_if<PolyQ>(&factor)) {
    const auto& data = spec.at_J(f->j);
    for (std::int64_t k = 1; k <= spec.q_pow(); ++k) out.add(PlaceId::r(f->j, static_cast<int>(k)), 1);
    out.add(PlaceId::d0(), -data.deg);
  } else {
    const int k = std::get<YMinusBeta>(factor).k;
    check_beta_index(spec, k);
    for (const auto& z : spec.zero_places()) out.add(PlaceId::r(z.index, k), z.mult);
    for (const auto& q : spec.ramified()) out.add(PlaceId::q(q.index), -q.mult);
  }
  return out;
}

WitnessExpr& WitnessExpr::operator+=(const WitnessExpr& other) {
  y_exp = checked_add(y_exp, other.y_exp);
  ratio_exp = checked_add(ratio_exp, other.ratio_exp);
  for (const auto& [i, e] : other.p_exp) p_exp[i] = checked_add(p_exp[i], e);
  for (const auto& [j, e] : other.q_exp) q_exp[j] = checked_add(q_exp[j], e);
  return *this;
}

Divisor divisor_of_witness(const FieldSpec& spec, const WitnessExpr& w) {
  Divisor out;
  // beta_1 = 0, so y itself is the k = 1 factor.
  if (w.y_exp != 0) out += w.y_exp * principal_divisor(spec, YMinusBeta{1});
  for (const auto& [i, e] : w.p_exp)
    if (e != 0) out += e * principal_divisor(spec, PolyP{i});
  for (const auto& [j, e] : w.q_exp)
    if (e != 0) out += e * principal_divisor(spec, PolyQ{j});
  if (w.ratio_exp != 0) {
    // prod_{k>=2} y/(y-beta_k) has divisor (p^n - 1)(y) - sum_{k>=2} (y - beta_k).
    Divisor ratio = (spec.q_pow() - 1) * principal_divisor(spec, YMinusBeta{1});
    for (std::int64_t k = 2; k <= spec.q_pow(); ++k)
      ratio -= principal_divisor(spec, YMinusBeta{static_cast<int>(k)});
    out += w.ratio_exp * ratio;
  }
  return out;
}

std::map<int, std::int64_t> restriction(const FieldSpec& spec, const Divisor& d) {
  std::map<int, std::int64_t> out;
  for (const auto& [place, c] : d.terms()) {
    if (place.kind != PlaceId::Kind::Q)
      throw Error(ErrorCode::UnsupportedPlace, "restriction is defined only for divisors supported on Q_i, got " +
                                                   to_string(place));
    spec.at_I(place.a);
    out[place.a] = floor_div(c, spec.q_pow());
  }
  return out;
}

}  // namespace wsg
