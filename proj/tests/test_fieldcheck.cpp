#include <doctest.h>

#include <algorithm>

#include "data_files.hpp"
#include "fixtures.hpp"
#include "wsg/fieldcheck.hpp"
#include "wsg/single_place.hpp"
#include "wsg/spec_io.hpp"

using namespace wsg;
using wsg::testing::read_data;

namespace {

const CheckResult* find_check(const ValidationReport& r, const std::string& name) {
  const auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const CheckResult& c) { return c.name == name; });
  return it == r.checks.end() ? nullptr : &*it;
}

ConcreteSpec concrete(const std::string& file) { return std::get<ConcreteSpec>(parse_spec_file(read_data(file))); }

}  // namespace

TEST_CASE("E2 concrete data validates and reproduces the gap lists") {
  const auto v = validate_concrete(concrete("e2_concrete.json"), {.strict = true});
  CHECK(v.report.all_passed());
  CHECK(v.spec == wsg::testing::e2());
  CHECK(gap_set(v.spec, 0).elements == std::vector<std::int64_t>{1, 2, 3, 5, 6, 7, 9, 10, 11, 13, 14, 17});
  CHECK(gap_set(v.spec, 1).elements == std::vector<std::int64_t>{1, 2, 3, 5, 6, 7, 9, 10, 11, 14, 15, 19});
}

TEST_CASE("E1 concrete data fails only the splitting check") {
  const auto cs = concrete("e1_concrete.json");
  const auto v = validate_concrete(cs);
  CHECK(v.spec == wsg::testing::e1());
  CHECK_FALSE(v.report.all_passed());
  REQUIRE(v.report.failures().size() == 1);
  const auto* split = find_check(v.report, "L splits in K");
  REQUIRE(split != nullptr);
  CHECK_FALSE(split->passed);

  try {
    validate_concrete(cs, {.strict = true});
    FAIL("strict validation should throw");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ErrorCode::ValidationFailure);
    CHECK_FALSE(e.report().all_passed());
  }
}

TEST_CASE("reducible factors are rejected in any mode") {
  const auto cs = concrete("reducible_denominator.json");
  try {
    validate_concrete(cs);
    FAIL("expected ValidationFailure");
  } catch (const ValidationError& e) {
    const auto* c = find_check(e.report(), "p_1 irreducible");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->passed);
    CHECK(std::string(e.what()).find("irreducible") != std::string::npos);
  }
}

TEST_CASE("hypothesis checks") {
  const auto base = concrete("e2_concrete.json");
  auto zero_alpha0 = base;
  zero_alpha0.L_coeffs.front() = 0;
  CHECK_THROWS_AS(validate_concrete(zero_alpha0), ValidationError);

  auto not_monic = base;
  not_monic.denominator_factors[0].poly = FieldPoly(base.field, {2, 2});
  CHECK_THROWS_AS(validate_concrete(not_monic), ValidationError);

  auto duplicate = base;
  duplicate.numerator_factors[0].poly = duplicate.denominator_factors[0].poly;
  CHECK_THROWS_AS(validate_concrete(duplicate), ValidationError);

  auto even_pole = base;
  even_pole.denominator_factors[0].mult = 2;
  CHECK_THROWS_AS(validate_concrete(even_pole), ValidationError);

  // |K| = 8 >= 4 places
  CHECK(validate_concrete(base, {.strict = true, .requested_places = 4}).report.all_passed());
  CHECK_FALSE(validate_concrete(base, {.requested_places = 9}).report.all_passed());
  CHECK_THROWS_AS(validate_concrete(base, {.strict = true, .requested_places = 9}), ValidationError);
}

TEST_CASE("parsing and canonical round trip") {
  for (const auto* name : {"e1_abstract.json", "e2_abstract.json", "d1_abstract.json", "e1_concrete.json",
                           "e2_concrete.json", "reducible_denominator.json"}) {
    CAPTURE(name);
    const auto doc = parse_spec_file(read_data(name));
    const auto canon = serialize_spec(doc);
    CHECK(serialize_spec(parse_spec_file(canon)) == canon);
    CHECK(spec_fingerprint(parse_spec_file(canon)) == spec_fingerprint(doc));
    CHECK(spec_fingerprint(doc).size() == 16);
  }
  const auto e1 = std::get<AbstractInput>(parse_spec_file(read_data("e1_abstract.json")));
  CHECK(resolve_spec(e1).spec == wsg::testing::e1());
  CHECK(spec_fingerprint(parse_spec_file(read_data("e1_abstract.json"))) !=
        spec_fingerprint(parse_spec_file(read_data("e2_abstract.json"))));
}

TEST_CASE("schema and syntax errors") {
  try {
    parse_spec_file(read_data("missing_p.json"));
    FAIL("expected SchemaError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SchemaError);
    CHECK(std::string(e.what()).find("\"p\"") != std::string::npos);
  }
  try {
    parse_spec_file("{\n  \"mode\": \"abstract\",\n  \"p\": 2,,\n}");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_spec_file(R"({"mode":"abstract","p":2,"n":1,"poles":[[1,1]],"zeros":[],"extra":1})"), Error);
  CHECK_THROWS_AS(parse_spec_file(R"({"mode":"other"})"), Error);
  CHECK_THROWS_AS(parse_spec_file(R"({"mode":"abstract","p":2,"n":1,"poles":[[1]],"zeros":[]})"), Error);
}
