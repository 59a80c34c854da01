#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "wsg/error.hpp"
#include "wsg/riemann_roch.hpp"
#include "wsg/single_place.hpp"

using namespace wsg;
using wsg::testing::d1;
using wsg::testing::e1;
using wsg::testing::e2;

using Vec = std::vector<std::int64_t>;

TEST_CASE("gap_set examples") {
  Vec e1_gaps{1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15};
  CHECK(gap_set(e1(), 1, -1).elements == e1_gaps);
  CHECK(gap_set(e1(), 2, -1).elements == e1_gaps);
  CHECK(gap_set(e2(), 1, -1).elements == Vec{1, 2, 3, 5, 6, 7, 9, 10, 11, 14, 15, 19});
  const auto inv = inverse_lambda(e2(), 0);
  CHECK(inv == 1);
  CHECK(gap_set(e2(), 0, inv).elements == Vec{1, 2, 3, 5, 6, 7, 9, 10, 11, 13, 14, 17});
  CHECK(gap_set(e2(), 0, -1).elements == gap_set(e2(), 0, inv).elements);
  CHECK(gap_set(d1(), 1).elements == Vec{1, 3, 5});
}

TEST_CASE("parameterization reproduces the elements") {
  const auto g = gap_set(e2(), 0, 3);
  REQUIRE(g.parameterization.size() == g.elements.size());
  for (const auto& t : g.parameterization) {
    CHECK(t.value == t.j * 4 - t.i * 3 * 3);
    CHECK(std::binary_search(g.elements.begin(), g.elements.end(), t.value));
  }
}

TEST_CASE("gap_set errors") {
  CHECK_THROWS_AS(gap_set(e1(), 1, 2), Error);
  CHECK_THROWS_AS(gap_set(d1(), 3), Error);
  CHECK_THROWS_AS(gap_set(e1(), 0), Error);
  CHECK(gap_set(build_spec(2, 1, {{1, 1}}, {}), 1).elements.empty());
}

TEST_CASE("generators, multiplicity and Frobenius number") {
  Vec e1_gens{8};
  for (int i = 1; i <= 7; ++i) e1_gens.push_back(16 + i);
  CHECK(semigroup_generators(e1(), 1) == e1_gens);
  CHECK(semigroup_generators(e2(), 0) == Vec{4, 15, 18, 21});
  CHECK(multiplicity(e1(), 1) == 8);
  CHECK(frobenius(e1(), 1) == 15);
  CHECK(multiplicity(e2(), 0) == 4);
  CHECK(frobenius(e2(), 0) == 17);
  CHECK(multiplicity(e2(), 1) == 4);
  CHECK(frobenius(e2(), 1) == 19);
  CHECK(semigroup_generators(d1(), 1) == Vec{2, 7});
  CHECK(prune_generators(semigroup_generators(d1(), 1)) == Vec{2, 7});
  CHECK(prune_generators(Vec{4, 8, 15, 18, 19}) == Vec{4, 15, 18});
  CHECK_THROWS_AS(frobenius(build_spec(2, 1, {{1, 1}}, {}), 1), Error);
}

TEST_CASE("symmetry examples") {
  CHECK_FALSE(is_symmetric(e1(), 1));
  CHECK(is_symmetric(d1(), 1));
  CHECK(frobenius(d1(), 1) == 5);
  const auto one = build_spec(2, 1, {}, {{1, 3}});
  CHECK(one.n0() == 3);
  CHECK(is_symmetric(one, 0));
  CHECK(frobenius(one, 0) == 2 * one.genus() - 1);
  CHECK_THROWS_AS(is_symmetric(d1(), 3), Error);
}

TEST_CASE("same_semigroup_criterion") {
  CHECK(same_semigroup_criterion(e1(), 1, 2));
  CHECK(same_semigroup_criterion(e2(), 1, 2));
  CHECK_FALSE(same_semigroup_criterion(e2(), 0, 1));
  CHECK(gap_set(e2(), 0).elements != gap_set(e2(), 1).elements);
  CHECK_THROWS_AS(same_semigroup_criterion(d1(), 1, 3), Error);
}

TEST_CASE("randomized properties of the single-place semigroup") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const auto s = wsg::testing::random_spec(rng, {.max_q = 9});
    const auto q = s.q_pow();
    for (int l : wsg::testing::degree_one_places(s)) {
      const auto base = gap_set(s, l, -1).elements;
      REQUIRE(static_cast<std::int64_t>(base.size()) == s.genus());

      // lambda independence
      for (auto lam : {std::int64_t{1}, inverse_lambda(s, l), wsg::testing::random_lambda(rng, s.p()),
                       wsg::testing::random_lambda(rng, s.p()), wsg::testing::random_lambda(rng, s.p())})
        REQUIRE(gap_set(s, l, lam).elements == base);

      // oracle equivalence
      REQUIRE(gap_set_oracle(s, l) == base);

      const auto gens = semigroup_generators(s, l);
      for (auto x : gens) CHECK_FALSE(std::binary_search(base.begin(), base.end(), x));

      if (s.genus() == 0) {
        CHECK(std::find(gens.begin(), gens.end(), 1) != gens.end());
        continue;
      }
      const auto F = frobenius(s, l);
      CHECK(F == base.back());
      const auto table = generated_members(gens, F + q);
      for (std::int64_t a = 0; a <= F + q; ++a)
        REQUIRE(table[a] == !std::binary_search(base.begin(), base.end(), a));

      std::int64_t first = 1;
      while (std::binary_search(base.begin(), base.end(), first)) ++first;
      CHECK(multiplicity(s, l) == first);

      CHECK(is_symmetric(s, l) == (F == 2 * s.genus() - 1));

      for (int k : wsg::testing::degree_one_places(s))
        if (same_semigroup_criterion(s, l, k)) CHECK(gap_set(s, k).elements == base);

      const auto prof = semigroup_profile(s, l);
      CHECK(prof.frobenius == F);
      CHECK(prof.generators == gens);
    }
  }
}
