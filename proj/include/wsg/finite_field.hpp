#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace wsg {

// F_{p^k} = F_p[t] / (modulus). Elements are encoded as integers whose
// base-p digits (little-endian) are the coefficients in 1, t, ..., t^{k-1}.
class FiniteField {
 public:
  using Elem = std::uint64_t;

  // modulus: c_0..c_k over F_p, monic of degree k >= 1 and irreducible.
  static std::shared_ptr<const FiniteField> create(std::int64_t p, std::vector<std::int64_t> modulus);
  static std::shared_ptr<const FiniteField> prime_field(std::int64_t p);

  std::int64_t p() const { return p_; }
  int degree() const { return k_; }
  std::uint64_t size() const { return size_; }
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;

  Elem from_digits(const std::vector<std::int64_t>& digits) const;
  std::vector<std::int64_t> to_digits(Elem a) const;

  bool same_as(const FiniteField& other) const { return p_ == other.p_ && modulus_ == other.modulus_; }

 private:
  FiniteField(std::int64_t p, std::vector<std::int64_t> modulus);

  std::int64_t p_;
  int k_;
  std::uint64_t size_;
  std::vector<std::int64_t> modulus_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

// Polynomial over a FiniteField, coefficients low to high, no trailing zeros.
class FieldPoly {
 public:
  using Elem = FiniteField::Elem;

  FieldPoly(FieldPtr field, std::vector<Elem> coeffs);
  static FieldPoly zero(FieldPtr field) { return FieldPoly(std::move(field), {}); }
  static FieldPoly constant(FieldPtr field, Elem c) { return FieldPoly(std::move(field), {c}); }
  static FieldPoly x(FieldPtr field) { return FieldPoly(std::move(field), {0, 1}); }

  const FieldPtr& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  // -1 stands for the degree of the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  Elem leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  friend bool operator==(const FieldPoly& a, const FieldPoly& b);

 private:
  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

FieldPoly add(const FieldPoly& a, const FieldPoly& b);
FieldPoly sub(const FieldPoly& a, const FieldPoly& b);
FieldPoly mul(const FieldPoly& a, const FieldPoly& b);
std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& a, const FieldPoly& b);
FieldPoly make_monic(const FieldPoly& a);
// Monic gcd; gcd(0, 0) = 0.
FieldPoly gcd(const FieldPoly& a, const FieldPoly& b);
FieldPoly powmod(const FieldPoly& a, std::uint64_t e, const FieldPoly& mod);

// Rabin's test over the coefficient field of f.
bool is_irreducible(const FieldPoly& f);

// L(y) = sum_i alpha_i y^{p^i} has all its roots in the field.
bool splits_in_K(const std::vector<FiniteField::Elem>& L_coeffs, const FieldPtr& field);

// The polynomial sum_i alpha_i y^{p^i}.
FieldPoly linearized_poly(const std::vector<FiniteField::Elem>& L_coeffs, const FieldPtr& field);

}  // namespace wsg
