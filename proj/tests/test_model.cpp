#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "wsg/error.hpp"
#include "wsg/model.hpp"

using namespace wsg;
using wsg::testing::d1;
using wsg::testing::e1;
using wsg::testing::e2;

namespace {

std::vector<int> indices(const std::vector<IndexedDatum>& xs) {
  std::vector<int> out;
  for (const auto& x : xs) out.push_back(x.index);
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("build_spec derives n0, I, J, m and genus") {
  const auto a = e1();
  CHECK(a.q_pow() == 8);
  CHECK(a.n0() == -1);
  CHECK(indices(a.ramified()) == std::vector<int>{1, 2, 3});
  CHECK(indices(a.zero_places()) == std::vector<int>{0, 1, 2});
  CHECK(a.at_J(0).mult == 1);
  CHECK(a.m() == 3);
  CHECK(a.genus() == 14);

  const auto b = e2();
  CHECK(b.n0() == 3);
  CHECK(indices(b.ramified()) == std::vector<int>{0, 1, 2, 3});
  CHECK(indices(b.zero_places()) == std::vector<int>{1, 2, 3});
  CHECK(b.m() == 6);
  CHECK(b.genus() == 12);

  CHECK(genus(build_spec(2, 1, {{1, 1}}, {})) == 0);
}

TEST_CASE("n0 = 0 leaves the infinite place out of both index sets") {
  const auto s = build_spec(3, 1, {{2, 1}}, {{1, 2}});
  CHECK(s.n0() == 0);
  CHECK(indices(s.ramified()) == std::vector<int>{1});
  CHECK(indices(s.zero_places()) == std::vector<int>{1});
}

TEST_CASE("build_spec rejects invalid data") {
  CHECK(code_of([] { build_spec(2, 1, {{2, 1}}, {}); }) == ErrorCode::GcdViolation);
  CHECK(code_of([] { build_spec(4, 1, {{1, 1}}, {}); }) == ErrorCode::NonPrimeP);
  CHECK(code_of([] { build_spec(2, 1, {}, {}); }) == ErrorCode::EmptyData);
  // n0 = 2 > 0 with p = 2
  CHECK(code_of([] { build_spec(2, 1, {}, {{2, 1}}); }) == ErrorCode::GcdViolation);
  CHECK(code_of([] { build_spec(2, 21, {{1, 1}}, {}); }) == ErrorCode::BudgetExceeded);
  CHECK_NOTHROW(build_spec(2, 21, {{1, 1}}, {}, std::int64_t{1} << 22));
}

TEST_CASE("genus identity and both evaluations of m on random specs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = wsg::testing::random_spec(rng);
    std::int64_t mi = 0, mj = 0, sd = 0;
    for (const auto& x : s.ramified()) {
      mi += x.mult * x.deg;
      sd += x.deg;
    }
    for (const auto& x : s.zero_places()) mj += x.mult * x.deg;
    CHECK(mi == mj);
    CHECK(2 * s.genus() == (s.q_pow() - 1) * (s.m() + sd - 2));
  }
}

TEST_CASE("principal divisors of p_i, q_j and y - beta_k") {
  const auto a = e1();
  Divisor expect;
  expect.add(PlaceId::q(1), 8);
  expect.add(PlaceId::d0(), -1);
  CHECK(principal_divisor(a, PolyP{1}) == expect);

  Divisor y;
  for (int j : {0, 1, 2}) y.add(PlaceId::r(j, 1), 1);
  for (int i : {1, 2, 3}) y.add(PlaceId::q(i), -1);
  CHECK(principal_divisor(a, YMinusBeta{1}) == y);

  const auto b = e2();
  Divisor q3;
  for (int k = 1; k <= 4; ++k) q3.add(PlaceId::r(3, k), 1);
  q3.add(PlaceId::d0(), -2);
  CHECK(principal_divisor(b, PolyQ{3}) == q3);

  CHECK_THROWS_AS(principal_divisor(a, PolyP{0}), Error);
  CHECK_THROWS_AS(principal_divisor(a, PolyQ{3}), Error);
  CHECK_THROWS_AS(principal_divisor(a, YMinusBeta{9}), Error);
  CHECK_THROWS_AS(principal_divisor(a, YMinusBeta{0}), Error);
}

TEST_CASE("principal divisors have degree zero") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = wsg::testing::random_spec(rng);
    for (const auto& x : s.ramified()) CHECK(principal_divisor(s, PolyP{x.index}).degree(s) == 0);
    for (const auto& z : s.zero_places()) CHECK(principal_divisor(s, PolyQ{z.index}).degree(s) == 0);
    for (int k = 1; k <= s.q_pow(); ++k) CHECK(principal_divisor(s, YMinusBeta{k}).degree(s) == 0);
  }
}

TEST_CASE("divisor_of_witness on single factors") {
  const auto a = e1();
  WitnessExpr y;
  y.y_exp = 1;
  CHECK(divisor_of_witness(a, y) == principal_divisor(a, YMinusBeta{1}));
  Divisor pole;
  for (int i : {1, 2, 3}) pole.add(PlaceId::q(i), 1);
  CHECK(divisor_of_witness(a, y).pole_part() == pole);

  WitnessExpr p1;
  p1.p_exp[1] = 1;
  Divisor expect;
  expect.add(PlaceId::q(1), 8);
  expect.add(PlaceId::d0(), -1);
  CHECK(divisor_of_witness(a, p1) == expect);
}

TEST_CASE("the root-ratio aggregate expands to (p^n-1) m_j R_j1 - m_j R_jk") {
  const auto b = e2();
  WitnessExpr w;
  w.ratio_exp = 1;
  Divisor expect;
  for (const auto& z : b.zero_places()) {
    expect.add(PlaceId::r(z.index, 1), 3 * z.mult);
    for (int k = 2; k <= 4; ++k) expect.add(PlaceId::r(z.index, k), -z.mult);
  }
  CHECK(divisor_of_witness(b, w) == expect);
}

TEST_CASE("divisor_of_witness is additive") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> e(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = wsg::testing::random_spec(rng, {.max_q = 9});
    auto draw = [&] {
      WitnessExpr w;
      w.y_exp = e(rng);
      w.ratio_exp = e(rng);
      for (const auto& x : s.ramified()) w.p_exp[x.index] = e(rng);
      for (const auto& z : s.zero_places()) w.q_exp[z.index] = e(rng);
      return w;
    };
    const auto u = draw(), v = draw();
    auto sum = u;
    sum += v;
    CHECK(divisor_of_witness(s, sum) == divisor_of_witness(s, u) + divisor_of_witness(s, v));
  }
}

TEST_CASE("restriction floors each coefficient by p^n") {
  const auto a = e1();
  Divisor d;
  d.add(PlaceId::q(1), 8);
  CHECK(restriction(a, d) == std::map<int, std::int64_t>{{1, 1}});
  d.add(PlaceId::q(2), -3);
  CHECK(restriction(a, d) == std::map<int, std::int64_t>{{1, 1}, {2, -1}});

  Divisor e;
  e.add(PlaceId::q(0), 5);
  CHECK(restriction(e2(), e) == std::map<int, std::int64_t>{{0, 1}});

  Divisor bad;
  bad.add(PlaceId::r(1, 1), 1);
  CHECK(code_of([&] { restriction(a, bad); }) == ErrorCode::UnsupportedPlace);
  Divisor bad_d0;
  bad_d0.add(PlaceId::d0(), 2);
  CHECK(code_of([&] { restriction(a, bad_d0); }) == ErrorCode::UnsupportedPlace);
}

TEST_CASE("divisor printing") {
  Divisor d;
  d.add(PlaceId::q(1), 8);
  d.add(PlaceId::d0(), -1);
  CHECK(to_string(d) == "8*Q1 - D0");
  CHECK(to_string(Divisor{}) == "0");
  CHECK(to_string(PlaceId::r(2, 5)) == "R2,5");
}
