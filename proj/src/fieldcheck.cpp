#include "wsg/fieldcheck.hpp"

#include <numeric>

namespace wsg {

bool ValidationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::vector<std::string> ValidationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  return out;
}

namespace {

std::string join_failures(const ValidationReport& report) {
  std::string out;
  for (const auto& f : report.failures()) out += (out.empty() ? "" : "; ") + f;
  return out.empty() ? "no failed checks" : out;
}

std::string factor_label(bool numerator, std::size_t idx) {
  return std::string(numerator ? "q" : "p") + "_" + std::to_string(idx + 1);
}

}  // namespace

ValidationError::ValidationError(ValidationReport report)
    : Error(ErrorCode::ValidationFailure, join_failures(report)), report_(std::move(report)) {}

ValidatedSpec validate_concrete(const ConcreteSpec& cs, const ValidationOptions& options) {
  ValidationReport report;
  // Failures of essential checks leave no meaningful degree data, so they
  // abort even in non-strict mode.
  bool essential_ok = true;
  auto check = [&report, &essential_ok](std::string name, bool ok, std::string detail = {}, bool essential = true) {
    essential_ok = essential_ok && (ok || !essential);
    report.checks.push_back({std::move(name), ok, ok ? std::string{} : std::move(detail)});
  };
  const auto& field = cs.field;
  const std::int64_t p = field->p();

  check("alpha nonzero", cs.alpha != 0, "alpha = 0");
  const bool shape_ok = cs.L_coeffs.size() >= 2;
  check("L has n >= 1", shape_ok, "L needs coefficients alpha_0..alpha_n with n >= 1");
  const bool a0 = !cs.L_coeffs.empty() && cs.L_coeffs.front() != 0;
  check("alpha_0 nonzero", a0, "alpha_0 = 0");
  check("alpha_n nonzero", !cs.L_coeffs.empty() && cs.L_coeffs.back() != 0, "alpha_n = 0");

  std::vector<const FactorPower*> all;
  for (const auto& f : cs.denominator_factors) all.push_back(&f);
  for (const auto& f : cs.numerator_factors) all.push_back(&f);
  const auto label = [&](std::size_t idx) {
    const bool num = idx >= cs.denominator_factors.size();
    return factor_label(num, num ? idx - cs.denominator_factors.size() : idx);
  };

  for (std::size_t idx = 0; idx < all.size(); ++idx) {
    const auto& f = *all[idx];
    if (!f.poly.field()->same_as(*field)) throw Error(ErrorCode::FieldMismatch, label(idx) + " is over another field");
    const bool positive = f.poly.degree() >= 1 && f.mult >= 1;
    check(label(idx) + " nonconstant with positive multiplicity", positive, "degree or multiplicity < 1");
    check(label(idx) + " monic", f.poly.is_monic(), "leading coefficient is not 1");
    check(label(idx) + " irreducible", positive && is_irreducible(f.poly), "not irreducible over K");
  }
  bool distinct = true;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b)
      if (make_monic(all[a]->poly) == make_monic(all[b]->poly)) {
        distinct = false;
        check("factors pairwise distinct", false, label(a) + " equals " + label(b));
      }
  if (distinct) check("factors pairwise distinct", true);

  std::int64_t pole_sum = 0, zero_sum = 0;
  for (std::size_t i = 0; i < cs.denominator_factors.size(); ++i) {
    const auto& f = cs.denominator_factors[i];
    const bool ok = std::gcd(f.mult, p) == 1;
    check("gcd(n_" + std::to_string(i + 1) + ", p) = 1", ok, "n = " + std::to_string(f.mult));
    pole_sum += f.mult * f.poly.degree();
  }
  for (const auto& f : cs.numerator_factors) zero_sum += f.mult * f.poly.degree();
  const std::int64_t n0 = zero_sum - pole_sum;
  if (n0 > 0) {
    const bool ok = std::gcd(n0, p) == 1;
    check("gcd(n_0, p) = 1", ok, "n_0 = " + std::to_string(n0));
  }

  if (a0 && shape_ok) {
    const bool splits = splits_in_K(cs.L_coeffs, field);
    check("L splits in K", splits, "some roots of L lie outside K", false);
  }
  if (options.requested_places > 0) {
    const bool big_enough = field->size() >= static_cast<std::uint64_t>(options.requested_places);
    check("|K| >= t", big_enough,
          "|K| = " + std::to_string(field->size()) + " < t = " + std::to_string(options.requested_places), false);
  }

  if (options.strict && !report.all_passed()) throw ValidationError(report);
  if (!essential_ok || all.empty()) throw ValidationError(report);

  std::vector<PoleDatum> poles;
  std::vector<ZeroDatum> zeros;
  for (const auto& f : cs.denominator_factors) poles.push_back({f.mult, f.poly.degree()});
  for (const auto& f : cs.numerator_factors) zeros.push_back({f.mult, f.poly.degree()});
  const int n = static_cast<int>(cs.L_coeffs.size()) - 1;
  return {build_spec(p, n, std::move(poles), std::move(zeros), options.max_degree), std::move(report)};
}

}  // namespace wsg
