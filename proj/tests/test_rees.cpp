#include "oracles.hpp"

#include <reesposet/isomorphism.hpp>
#include <reesposet/rees.hpp>
#include <reesposet/zoo.hpp>

#include <catch_amalgamated.hpp>

using namespace reesposet;

TEST_CASE("Rees product of chains") {
  CHECK(isomorphic(rees_product(chain(2), chain(1)), chain(2)));
  auto r = rees_product_full(chain(3), chain(3));
  CHECK(r.poset.size() == 6);
  CHECK(r.poset.height() == 2);

  // the order agrees with the defining inequality on every pair
  auto c3 = chain(3);
  for (ElementId x = 0; x < 6; ++x)
    for (ElementId y = 0; y < 6; ++y) {
      auto [a, b] = *r.pairs[x];
      auto [a2, b2] = *r.pairs[y];
      bool expected = a <= a2 && b <= b2 && (a2 - a) >= (b2 - b);
      REQUIRE(r.poset.leq(x, y) == expected);
    }
}

TEST_CASE("Rees product order matches the definition on larger inputs") {
  auto p = boolean_algebra(3);
  auto q = tary_tree(2, 3);
  auto r = rees_product_full(p, q);
  CHECK(r.poset.height() == p.height());
  for (ElementId x = 0; x < static_cast<ElementId>(r.poset.size()); ++x)
    for (ElementId y = 0; y < static_cast<ElementId>(r.poset.size()); ++y) {
      auto [a, b] = *r.pairs[x];
      auto [a2, b2] = *r.pairs[y];
      bool expected = p.leq(a, a2) && q.leq(b, b2) &&
                      p.rank(a2) - p.rank(a) >= q.rank(b2) - q.rank(b);
      REQUIRE(r.poset.leq(x, y) == expected);
    }
}

TEST_CASE("bounded Rees products: small Mobius values") {
  CHECK(rees_bounded(boolean_algebra(2), chain(2)).mobius() == -1);
  CHECK(rees_bounded(cubical_lattice(1), chain(2)).mobius() == -1);
  auto r = rees_bounded(boolean_algebra(1), chain(1));
  CHECK(isomorphic(r, chain(3)));
  CHECK(r.mobius() == 0);
  CHECK(rees_bounded(boolean_algebra(4), chain(4)).mobius() == -9);
  CHECK(rees_bounded(cubical_lattice(2), chain(3)).mobius() == 2);
}

TEST_CASE("bounded Rees product of the square: elements and ranks") {
  auto r = rees_bounded_full(cubical_lattice(2), chain(3));
  const auto& p = r.poset;
  CHECK(p.height() == 4);
  // rank k elements are pairs (face with k-1 stars, i) with 1 <= i <= k
  CHECK(p.elements_of_rank(1).size() == 4);
  CHECK(p.elements_of_rank(2).size() == 8);
  CHECK(p.elements_of_rank(3).size() == 3);
  auto atom = r.find(cube_id("01"), 0);
  REQUIRE(atom);
  CHECK(p.label(*atom) == "(01,1)");
  CHECK(p.rank(*atom) == 1);
  CHECK_FALSE(r.find(cube_id("01"), 1));
}

TEST_CASE("rank of Rees(P, C_rank(P))") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(rees_bounded(boolean_algebra(n), chain(n)).height() == n + 1);
    CHECK(rees_bounded(cubical_lattice(n), chain(n + 1)).height() == n + 2);
  }
}

TEST_CASE("truncated Rees products of crosspolytopes") {
  CHECK(std::abs(rees_minus(crosspolytope_lattice(1), chain(1)).mobius()) == 1);
  for (int n = 2; n <= 3; ++n) {
    auto mu = rees_minus(crosspolytope_lattice(n), chain(n)).mobius();
    CHECK(std::abs(mu) == oracle::signed_derangement_permanent(n));
  }
}

TEST_CASE("Rees(B_n, C_n) inside the upper ideal of an atom of Rees(cube_n, C_{n+1})") {
  // The whole upper ideal is too big (n = 1 gives a diamond, not a 3-chain);
  // it is the part with chain index at most the number of stars that matches.
  for (int n = 1; n <= 3; ++n) {
    auto big = rees_bounded_full(cubical_lattice(n), chain(n + 1));
    const auto& p = big.poset;
    const ElementId atom = p.elements_of_rank(1).front();
    std::vector<ElementId> keep{*p.bottom()};
    for (ElementId y = 0; y < static_cast<ElementId>(p.size()); ++y) {
      if (!big.pairs[y] || y == atom || !p.leq(atom, y)) continue;
      int stars = p.rank(y) - 1;
      if (big.pairs[y]->second + 1 <= stars) keep.push_back(y);
    }
    keep.push_back(*p.top());
    std::vector<int> ranks;
    for (ElementId y : keep) ranks.push_back(y == keep.front() ? 0 : p.rank(y) - 1);
    auto lhs = GradedPoset::from_order(ranks, [&](ElementId a, ElementId b) {
      return p.leq(keep[a], keep[b]);
    });
    auto rhs = rees_bounded(boolean_algebra(n), chain(n));
    REQUIRE(isomorphic(lhs, rhs));

    std::vector<ElementId> ideal;
    for (ElementId y = 0; y < static_cast<ElementId>(p.size()); ++y)
      if (p.leq(atom, y)) ideal.push_back(y);
    CHECK_FALSE(isomorphic(induced_subposet(p, ideal, 1).poset, rhs));
  }
}

TEST_CASE("Rees construction errors") {
  GradedPoset no_bottom({0, 0, 1}, {{0, 2}, {1, 2}});
  CHECK_THROWS_AS(rees_bounded(no_bottom, chain(2)), std::invalid_argument);
  GradedPoset skewed({0, 1, 2}, {{0, 2}, {1, 2}});
  CHECK_THROWS_AS(rees_product(skewed, chain(2)), std::invalid_argument);
  CHECK_THROWS_AS(rees_minus(tary_tree(2, 3), chain(2)), std::invalid_argument);
}
