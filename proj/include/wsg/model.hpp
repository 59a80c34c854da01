#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace wsg {

// Default ceiling on p^n; larger extensions need an explicit override.
inline constexpr std::int64_t kDefaultMaxDegree = std::int64_t{1} << 20;

// (n_i, d_i): multiplicity of p_i(x) in the denominator and its degree.
struct PoleDatum {
  std::int64_t mult;
  std::int64_t deg;
  friend bool operator==(const PoleDatum&, const PoleDatum&) = default;
};

// (m_j, e_j): multiplicity of q_j(x) in the numerator and its degree.
struct ZeroDatum {
  std::int64_t mult;
  std::int64_t deg;
  friend bool operator==(const ZeroDatum&, const ZeroDatum&) = default;
};

// An index of I (resp. J) together with its multiplicity and degree. Index 0
// stands for the place at infinity when it belongs to the set.
struct IndexedDatum {
  int index;
  std::int64_t mult;
  std::int64_t deg;
};

// Combinatorial data of the function field L(y) = f(x)/g(x) with
// [F : K(x)] = p^n. Immutable once built; use build_spec().
class FieldSpec {
 public:
  std::int64_t p() const { return p_; }
  int n() const { return n_; }
  std::int64_t q_pow() const { return q_pow_; }
  const std::vector<PoleDatum>& pole_data() const { return poles_; }
  const std::vector<ZeroDatum>& zero_data() const { return zeros_; }
  std::int64_t n0() const { return n0_; }
  std::int64_t m() const { return m_; }
  std::int64_t genus() const { return genus_; }

  // Totally ramified places Q_i, i in I, in increasing index order.
  const std::vector<IndexedDatum>& ramified() const { return I_; }
  // Zero indices j in J.
  const std::vector<IndexedDatum>& zero_places() const { return J_; }

  bool in_I(int i) const;
  bool in_J(int j) const;
  // Throw IndexOutOfRange for indices outside I (resp. J).
  const IndexedDatum& at_I(int i) const;
  const IndexedDatum& at_J(int j) const;
  std::int64_t sum_deg_I() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend FieldSpec build_spec(std::int64_t, int, std::vector<PoleDatum>, std::vector<ZeroDatum>, std::int64_t);

  std::int64_t p_ = 0;
  int n_ = 0;
  std::int64_t q_pow_ = 0;
  std::vector<PoleDatum> poles_;
  std::vector<ZeroDatum> zeros_;
  std::int64_t n0_ = 0;
  std::vector<IndexedDatum> I_;
  std::vector<IndexedDatum> J_;
  std::int64_t m_ = 0;
  std::int64_t genus_ = 0;
};

inline bool operator==(const IndexedDatum& a, const IndexedDatum& b) {
  return a.index == b.index && a.mult == b.mult && a.deg == b.deg;
}

FieldSpec build_spec(std::int64_t p, int n, std::vector<PoleDatum> poles, std::vector<ZeroDatum> zeros,
                     std::int64_t max_degree = kDefaultMaxDegree);

std::int64_t genus(const FieldSpec& spec);

// Symbolic places of F: Q_i (i in I), R_{j,k} (j in J, 1 <= k <= p^n), and the
// conorm D0 of the pole of x, kept as one atom.
struct PlaceId {
  enum class Kind { Q, R, D0 };
  Kind kind = Kind::D0;
  int a = 0;
  int b = 0;

  static PlaceId q(int i) { return {Kind::Q, i, 0}; }
  static PlaceId r(int j, int k) { return {Kind::R, j, k}; }
  static PlaceId d0() { return {Kind::D0, 0, 0}; }

  friend auto operator<=>(const PlaceId&, const PlaceId&) = default;
};

std::string to_string(const PlaceId& place);

class Divisor {
 public:
  Divisor() = default;

  std::int64_t operator[](const PlaceId& place) const;
  void add(const PlaceId& place, std::int64_t coeff);
  const std::map<PlaceId, std::int64_t>& terms() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }

  Divisor& operator+=(const Divisor& other);
  Divisor& operator-=(const Divisor& other);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(std::int64_t scalar, const Divisor& d);
  friend bool operator==(const Divisor&, const Divisor&) = default;

  // deg Q_i = d_i, deg R_{j,k} = e_j, deg D0 = p^n.
  std::int64_t degree(const FieldSpec& spec) const;
  // Pole divisor: the negated negative part.
  Divisor pole_part() const;

 private:
  std::map<PlaceId, std::int64_t> coeffs_;  // no zero entries
};

std::string to_string(const Divisor& d);

struct PolyP {
  int i;
};
struct PolyQ {
  int j;
};
struct YMinusBeta {
  int k;
};
using Factor = std::variant<PolyP, PolyQ, YMinusBeta>;

Divisor principal_divisor(const FieldSpec& spec, const Factor& factor);

// y^{y_exp} * prod p_i^{p_exp[i]} * prod q_j^{q_exp[j]} * (prod_{k>=2} y/(y-beta_k))^{ratio_exp}
struct WitnessExpr {
  std::int64_t y_exp = 0;
  std::map<int, std::int64_t> p_exp;
  std::map<int, std::int64_t> q_exp;
  std::int64_t ratio_exp = 0;

  WitnessExpr& operator+=(const WitnessExpr& other);
  friend bool operator==(const WitnessExpr&, const WitnessExpr&) = default;
};

Divisor divisor_of_witness(const FieldSpec& spec, const WitnessExpr& w);

// D|_{K(x)} for D supported on {Q_i}: coefficient floor(a_i / p^n) at P_i.
std::map<int, std::int64_t> restriction(const FieldSpec& spec, const Divisor& d);

}  // namespace wsg
