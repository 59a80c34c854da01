#include "wsg/finite_field.hpp"

#include <algorithm>

#include "wsg/arith.hpp"
#include "wsg/error.hpp"

namespace wsg {

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FiniteField::FiniteField(std::int64_t p, std::vector<std::int64_t> modulus)
    : p_(p), k_(static_cast<int>(modulus.size()) - 1), size_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < k_; ++i) size_ = static_cast<std::uint64_t>(checked_mul(static_cast<std::int64_t>(size_), p_));
}

std::shared_ptr<const FiniteField> FiniteField::prime_field(std::int64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrimeP, "field characteristic " + std::to_string(p) + " is not prime");
  return std::shared_ptr<const FiniteField>(new FiniteField(p, {0, 1}));
}

std::shared_ptr<const FiniteField> FiniteField::create(std::int64_t p, std::vector<std::int64_t> modulus) {
  auto base = prime_field(p);
  for (auto c : modulus)
    if (c < 0 || c >= p) throw Error(ErrorCode::InvalidArgument, "modulus coefficient outside 0..p-1");
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() < 2) throw Error(ErrorCode::InvalidArgument, "field modulus must have degree >= 1");
  if (modulus.back() != 1) throw Error(ErrorCode::InvalidArgument, "field modulus must be monic");
  if (modulus.size() > 2) {
    std::vector<FiniteField::Elem> coeffs(modulus.begin(), modulus.end());
    if (!is_irreducible(FieldPoly(base, coeffs)))
      throw Error(ErrorCode::InvalidArgument, "field modulus is not irreducible over F_" + std::to_string(p));
  }
  auto field = std::shared_ptr<const FiniteField>(new FiniteField(p, std::move(modulus)));
  if (field->degree() > 1 && field->size() > (std::uint64_t{1} << 40))
    throw Error(ErrorCode::BudgetExceeded, "field too large");
  return field;
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (k_ == 1) return (a + b) % static_cast<Elem>(p_);
  Elem out = 0, scale = 1;
  const auto P = static_cast<Elem>(p_);
  for (int i = 0; i < k_; ++i) {
    out += ((a % P + b % P) % P) * scale;
    a /= P;
    b /= P;
    scale *= P;
  }
  return out;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  Elem out = 0, scale = 1;
  const auto P = static_cast<Elem>(p_);
  for (int i = 0; i < k_; ++i) {
    out += ((P - a % P) % P) * scale;
    a /= P;
    scale *= P;
  }
  return out;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  const auto P = static_cast<std::int64_t>(p_);
  if (k_ == 1) return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % static_cast<Elem>(P));
  const auto x = to_digits(a), y = to_digits(b);
  std::vector<std::int64_t> prod(2 * static_cast<std::size_t>(k_) - 1, 0);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % P;
  for (int d = 2 * k_ - 2; d >= k_; --d) {
    const std::int64_t c = prod[d];
    if (c == 0) continue;
    for (int i = 0; i <= k_; ++i) prod[d - k_ + i] = mod_floor(prod[d - k_ + i] - c * modulus_[i], P);
  }
  prod.resize(static_cast<std::size_t>(k_));
  return from_digits(prod);
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  Elem result = 1, base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "zero has no inverse");
  return pow(a, size_ - 2);
}

FiniteField::Elem FiniteField::from_digits(const std::vector<std::int64_t>& digits) const {
  if (digits.size() > static_cast<std::size_t>(k_))
    throw Error(ErrorCode::InvalidArgument, "element has more digits than the extension degree");
  Elem out = 0, scale = 1;
  for (auto d : digits) {
    out += static_cast<Elem>(mod_floor(d, p_)) * scale;
    scale *= static_cast<Elem>(p_);
  }
  return out;
}

std::vector<std::int64_t> FiniteField::to_digits(Elem a) const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(k_), 0);
  for (int i = 0; i < k_; ++i) {
    out[i] = static_cast<std::int64_t>(a % static_cast<Elem>(p_));
    a /= static_cast<Elem>(p_);
  }
  return out;
}

FieldPoly::FieldPoly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_)
    if (c >= field_->size()) throw Error(ErrorCode::InvalidArgument, "coefficient outside the field");
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool operator==(const FieldPoly& a, const FieldPoly& b) {
  return a.field_->same_as(*b.field_) && a.coeffs_ == b.coeffs_;
}

namespace {

const FiniteField& common_field(const FieldPoly& a, const FieldPoly& b) {
  if (!a.field()->same_as(*b.field())) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
  return *a.field();
}

}  // namespace

FieldPoly add(const FieldPoly& a, const FieldPoly& b) {
  const auto& F = common_field(a, b);
  std::vector<FiniteField::Elem> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto x = i < a.coeffs().size() ? a.coeffs()[i] : 0;
    const auto y = i < b.coeffs().size() ? b.coeffs()[i] : 0;
    out[i] = F.add(x, y);
  }
  return FieldPoly(a.field(), std::move(out));
}

FieldPoly sub(const FieldPoly& a, const FieldPoly& b) {
  const auto& F = common_field(a, b);
  std::vector<FiniteField::Elem> nb(b.coeffs().size());
  for (std::size_t i = 0; i < nb.size(); ++i) nb[i] = F.neg(b.coeffs()[i]);
  return add(a, FieldPoly(b.field(), std::move(nb)));
}

FieldPoly mul(const FieldPoly& a, const FieldPoly& b) {
  const auto& F = common_field(a, b);
  if (a.is_zero() || b.is_zero()) return FieldPoly::zero(a.field());
  std::vector<FiniteField::Elem> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      out[i + j] = F.add(out[i + j], F.mul(a.coeffs()[i], b.coeffs()[j]));
  }
  return FieldPoly(a.field(), std::move(out));
}

std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& a, const FieldPoly& b) {
  const auto& F = common_field(a, b);
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "division by the zero polynomial");
  auto rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {FieldPoly::zero(a.field()), a};
  std::vector<FiniteField::Elem> quot(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const auto lead_inv = F.inv(b.leading());
  for (int d = a.degree(); d >= db; --d) {
    const auto c = rem[d];
    if (c == 0) continue;
    const auto factor = F.mul(c, lead_inv);
    quot[d - db] = factor;
    for (int i = 0; i <= db; ++i) rem[d - db + i] = F.sub(rem[d - db + i], F.mul(factor, b.coeffs()[i]));
  }
  return {FieldPoly(a.field(), std::move(quot)), FieldPoly(a.field(), std::move(rem))};
}

FieldPoly make_monic(const FieldPoly& a) {
  if (a.is_zero()) return a;
  const auto& F = *a.field();
  const auto s = F.inv(a.leading());
  std::vector<FiniteField::Elem> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.mul(a.coeffs()[i], s);
  return FieldPoly(a.field(), std::move(out));
}

FieldPoly gcd(const FieldPoly& a, const FieldPoly& b) {
  common_field(a, b);
  FieldPoly x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

FieldPoly powmod(const FieldPoly& a, std::uint64_t e, const FieldPoly& mod) {
  common_field(a, mod);
  FieldPoly result = divmod(FieldPoly::constant(a.field(), 1), mod).second;
  FieldPoly base = divmod(a, mod).second;
  while (e > 0) {
    if (e & 1) result = divmod(mul(result, base), mod).second;
    e >>= 1;
    if (e > 0) base = divmod(mul(base, base), mod).second;
  }
  return result;
}

namespace {

// x^{q^times} mod f by repeated q-th powering.
FieldPoly frobenius_iterate(const FieldPoly& f, int times) {
  FieldPoly h = divmod(FieldPoly::x(f.field()), f).second;
  for (int i = 0; i < times; ++i) h = powmod(h, f.field()->size(), f);
  return h;
}

}  // namespace

bool is_irreducible(const FieldPoly& f) {
  const int n = f.degree();
  if (n < 1) throw Error(ErrorCode::ConstantPolynomial, "irreducibility needs degree >= 1");
  const FieldPoly g = make_monic(f);
  const FieldPoly x = FieldPoly::x(f.field());
  if (!divmod(sub(frobenius_iterate(g, n), x), g).second.is_zero()) return false;
  for (auto l : prime_factors(n)) {
    const auto h = sub(frobenius_iterate(g, n / static_cast<int>(l)), x);
    if (gcd(g, h).degree() != 0) return false;
  }
  return true;
}

FieldPoly linearized_poly(const std::vector<FiniteField::Elem>& L_coeffs, const FieldPtr& field) {
  std::uint64_t top = 1;
  for (std::size_t i = 1; i < L_coeffs.size(); ++i) top *= static_cast<std::uint64_t>(field->p());
  if (top > (std::uint64_t{1} << 24)) throw Error(ErrorCode::BudgetExceeded, "linearized polynomial degree too large");
  std::vector<FiniteField::Elem> coeffs(static_cast<std::size_t>(top + 1), 0);
  std::uint64_t e = 1;
  for (auto a : L_coeffs) {
    coeffs[e] = a;
    e *= static_cast<std::uint64_t>(field->p());
  }
  return FieldPoly(field, std::move(coeffs));
}

bool splits_in_K(const std::vector<FiniteField::Elem>& L_coeffs, const FieldPtr& field) {
  if (L_coeffs.empty() || L_coeffs.front() == 0)
    throw Error(ErrorCode::AlphaZero, "alpha_0 = 0, so L(y) is not separable");
  const FieldPoly L = linearized_poly(L_coeffs, field);
  if (L.degree() < 1) throw Error(ErrorCode::InvalidArgument, "L(y) must have positive degree");
  const FieldPoly y = FieldPoly::x(field);
  return divmod(sub(powmod(y, field->size(), L), y), L).second.is_zero();
}

}  // namespace wsg
