#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "wsg/error.hpp"
#include "wsg/finite_field.hpp"
#include "wsg/model.hpp"

namespace wsg {

struct FactorPower {
  FieldPoly poly;
  std::int64_t mult;
};

// L(y) = alpha * prod q_j^{m_j} / prod p_i^{n_i} over a finite field K.
struct ConcreteSpec {
  FieldPtr field;
  FiniteField::Elem alpha = 1;
  std::vector<FiniteField::Elem> L_coeffs;  // alpha_0 .. alpha_n
  std::vector<FactorPower> numerator_factors;
  std::vector<FactorPower> denominator_factors;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::vector<std::string> failures() const;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

struct ValidationOptions {
  bool strict = false;
  // Number of places a Gamma query will use; 0 skips the |K| >= t check.
  std::int64_t requested_places = 0;
  std::int64_t max_degree = kDefaultMaxDegree;
};

struct ValidatedSpec {
  FieldSpec spec;
  ValidationReport report;
};

// Runs every hypothesis check on the defining equation and throws
// ValidationError when one fails. Outside strict mode, the splitting of L over
// K and the |K| >= t check are only reported: the degree data stays usable.
ValidatedSpec validate_concrete(const ConcreteSpec& cs, const ValidationOptions& options = {});

}  // namespace wsg
