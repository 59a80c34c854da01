#include "wsg/spec_io.hpp"

#include <cstdio>
#include <set>

#include <json.hpp>

namespace wsg {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::SchemaError, "field \"" + field + "\": " + why);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(path + key, "missing");
  return *it;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items())
    if (!ok.count(key)) schema_error(path + key, "unknown field");
}

std::int64_t as_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) schema_error(field, "expected an integer");
  return v.get<std::int64_t>();
}

std::vector<std::pair<std::int64_t, std::int64_t>> int_pairs(const json& v, const std::string& field) {
  if (!v.is_array()) schema_error(field, "expected a list of [multiplicity, degree] pairs");
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string f = field + "[" + std::to_string(i) + "]";
    if (!v[i].is_array() || v[i].size() != 2) schema_error(f, "expected [multiplicity, degree]");
    out.emplace_back(as_int(v[i][0], f + "[0]"), as_int(v[i][1], f + "[1]"));
  }
  return out;
}

FiniteField::Elem as_elem(const json& v, const FiniteField& field, const std::string& name) {
  if (!v.is_array()) schema_error(name, "expected a list of base-p digits");
  std::vector<std::int64_t> digits;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto d = as_int(v[i], name + "[" + std::to_string(i) + "]");
    if (d < 0 || d >= field.p()) schema_error(name + "[" + std::to_string(i) + "]", "digit outside 0..p-1");
    digits.push_back(d);
  }
  if (digits.size() > static_cast<std::size_t>(field.degree())) schema_error(name, "more digits than k");
  return field.from_digits(digits);
}

std::vector<FiniteField::Elem> as_elems(const json& v, const FiniteField& field, const std::string& name) {
  if (!v.is_array()) schema_error(name, "expected a list of field elements");
  std::vector<FiniteField::Elem> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_elem(v[i], field, name + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<FactorPower> as_factors(const json& v, const FieldPtr& field, const std::string& name) {
  if (!v.is_array()) schema_error(name, "expected a list of {poly, mult}");
  std::vector<FactorPower> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string path = name + "[" + std::to_string(i) + "].";
    if (!v[i].is_object()) schema_error(name + "[" + std::to_string(i) + "]", "expected an object");
    reject_unknown_keys(v[i], {"poly", "mult"}, path);
    auto coeffs = as_elems(require(v[i], "poly", path), *field, path + "poly");
    out.push_back({FieldPoly(field, std::move(coeffs)), as_int(require(v[i], "mult", path), path + "mult")});
  }
  return out;
}

AbstractInput parse_abstract(const json& doc) {
  reject_unknown_keys(doc, {"mode", "p", "n", "poles", "zeros"}, "");
  AbstractInput in;
  in.p = as_int(require(doc, "p", ""), "p");
  const auto n = as_int(require(doc, "n", ""), "n");
  if (n < 1 || n > 64) schema_error("n", "must be in 1..64");
  in.n = static_cast<int>(n);
  for (auto [a, b] : int_pairs(require(doc, "poles", ""), "poles")) in.poles.push_back({a, b});
  for (auto [a, b] : int_pairs(require(doc, "zeros", ""), "zeros")) in.zeros.push_back({a, b});
  return in;
}

ConcreteSpec parse_concrete(const json& doc) {
  reject_unknown_keys(doc, {"mode", "field", "alpha", "L", "numerator", "denominator"}, "");
  const json& f = require(doc, "field", "");
  if (!f.is_object()) schema_error("field", "expected an object");
  reject_unknown_keys(f, {"p", "k", "modulus"}, "field.");
  const auto p = as_int(require(f, "p", "field."), "field.p");
  const auto k = as_int(require(f, "k", "field."), "field.k");
  const json& mod = require(f, "modulus", "field.");
  if (!mod.is_array()) schema_error("field.modulus", "expected a list of integers");
  std::vector<std::int64_t> modulus;
  for (std::size_t i = 0; i < mod.size(); ++i) modulus.push_back(as_int(mod[i], "field.modulus[" + std::to_string(i) + "]"));
  if (static_cast<std::int64_t>(modulus.size()) != k + 1) schema_error("field.modulus", "expected k + 1 coefficients");

  ConcreteSpec cs;
  try {
    cs.field = FiniteField::create(p, modulus);
  } catch (const Error& e) {
    schema_error("field", e.what());
  }
  cs.alpha = as_elem(require(doc, "alpha", ""), *cs.field, "alpha");
  cs.L_coeffs = as_elems(require(doc, "L", ""), *cs.field, "L");
  cs.numerator_factors = as_factors(require(doc, "numerator", ""), cs.field, "numerator");
  cs.denominator_factors = as_factors(require(doc, "denominator", ""), cs.field, "denominator");
  return cs;
}

json elem_json(const FiniteField& field, FiniteField::Elem e) { return field.to_digits(e); }

json factors_json(const std::vector<FactorPower>& factors, const FiniteField& field) {
  json out = json::array();
  for (const auto& f : factors) {
    json poly = json::array();
    for (auto c : f.poly.coeffs()) poly.push_back(elem_json(field, c));
    out.push_back({{"poly", poly}, {"mult", f.mult}});
  }
  return out;
}

}  // namespace

SpecDocument parse_spec_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }
  if (!doc.is_object()) schema_error("<root>", "expected a JSON object");
  const json& mode = require(doc, "mode", "");
  if (!mode.is_string()) schema_error("mode", "expected \"abstract\" or \"concrete\"");
  if (mode == "abstract") return parse_abstract(doc);
  if (mode == "concrete") return parse_concrete(doc);
  schema_error("mode", "expected \"abstract\" or \"concrete\"");
}

std::string serialize_spec(const SpecDocument& doc) {
  json out;
  if (const auto* a = std::get_if<AbstractInput>(&doc)) {
    json poles = json::array(), zeros = json::array();
    for (const auto& x : a->poles) poles.push_back({x.mult, x.deg});
    for (const auto& x : a->zeros) zeros.push_back({x.mult, x.deg});
    out = {{"mode", "abstract"}, {"p", a->p}, {"n", a->n}, {"poles", poles}, {"zeros", zeros}};
  } else {
    const auto& c = std::get<ConcreteSpec>(doc);
    const auto& F = *c.field;
    json L = json::array();
    for (auto e : c.L_coeffs) L.push_back(elem_json(F, e));
    out = {{"mode", "concrete"},
           {"field", {{"p", F.p()}, {"k", F.degree()}, {"modulus", F.modulus()}}},
           {"alpha", elem_json(F, c.alpha)},
           {"L", L},
           {"numerator", factors_json(c.numerator_factors, F)},
           {"denominator", factors_json(c.denominator_factors, F)}};
  }
  return out.dump();
}

ValidatedSpec resolve_spec(const SpecDocument& doc, const ValidationOptions& options) {
  if (const auto* a = std::get_if<AbstractInput>(&doc))
    return {build_spec(a->p, a->n, a->poles, a->zeros, options.max_degree), {}};
  return validate_concrete(std::get<ConcreteSpec>(doc), options);
}

std::string spec_fingerprint(const SpecDocument& doc) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_spec(doc)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace wsg
