#include "oracles.hpp"

#include <reesposet/isomorphism.hpp>
#include <reesposet/poset.hpp>
#include <reesposet/poset_json.hpp>
#include <reesposet/zoo.hpp>

#include <catch_amalgamated.hpp>

using namespace reesposet;

namespace {

std::vector<GradedPoset> small_zoo() {
  std::vector<GradedPoset> zoo;
  for (int n = 1; n <= 5; ++n) zoo.push_back(chain(n + 1));
  for (int n = 0; n <= 5; ++n) zoo.push_back(boolean_algebra(n));
  for (int n = 1; n <= 4; ++n) zoo.push_back(cubical_lattice(n));
  for (int n = 1; n <= 4; ++n) zoo.push_back(crosspolytope_lattice(n));
  return zoo;
}

}  // namespace

TEST_CASE("validate_graded accepts chains and Boolean algebras") {
  auto c3 = chain(3);
  REQUIRE(validate_graded(c3).ok());
  CHECK(c3.rank(*c3.top()) == 2);

  auto b3 = boolean_algebra(3);
  REQUIRE(validate_graded(b3).ok());
  // covers are exactly the pairs of subsets differing in one element
  std::size_t expected = 0;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      if ((a & b) == a && __builtin_popcount(b ^ a) == 1) {
        ++expected;
        CHECK(std::find(b3.covers().begin(), b3.covers().end(), Cover{a, b}) != b3.covers().end());
      }
  CHECK(b3.covers().size() == expected);
  for (int m = 0; m < 8; ++m) CHECK(b3.rank(m) == __builtin_popcount(m));
}

TEST_CASE("validate_graded names a cover that skips a rank") {
  GradedPoset p({0, 1, 2, 3}, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
  auto report = validate_graded(p);
  REQUIRE_FALSE(report.ok());
  bool named = false;
  for (auto& s : report.problems) named |= s.find("cover 1 < 3") != std::string::npos;
  CHECK(named);
}

TEST_CASE("validate_graded reports cycles and uneven maximal elements") {
  GradedPoset cyc({0, 1}, {{0, 1}, {1, 0}});
  CHECK_FALSE(validate_graded(cyc).ok());
  CHECK_FALSE(cyc.bottom().has_value());

  GradedPoset uneven({0, 1, 1, 2}, {{0, 1}, {0, 2}, {1, 3}});
  auto report = validate_graded(uneven);
  REQUIRE_FALSE(report.ok());
  CHECK(report.problems.front().find("maximal element 2") != std::string::npos);
}

TEST_CASE("mobius of small posets against the definition") {
  auto b3 = boolean_algebra(3);
  for (ElementId x = 0; x < 8; ++x) CHECK(b3.mobius(x, x) == 1);
  auto subset = [](int a, int b) { return (a & b) == a; };
  CHECK(oracle::mobius(8, subset, 0, 7) == -1);
  CHECK(b3.mobius(0, 7) == -1);
  CHECK(mobius(b3, 1, 7) == oracle::mobius(8, subset, 1, 7));
  CHECK_THROWS_AS(b3.mobius(7, 0), std::invalid_argument);
  CHECK_THROWS_AS(b3.mobius(0, 8), std::out_of_range);
}

TEST_CASE("three Mobius methods agree on every interval of the zoo") {
  for (const auto& p : small_zoo()) {
    if (p.size() > 100) continue;
    for (ElementId x = 0; x < static_cast<ElementId>(p.size()); ++x)
      for (ElementId y = 0; y < static_cast<ElementId>(p.size()); ++y) {
        if (!p.leq(x, y)) continue;
        auto mu = p.mobius(x, y);
        REQUIRE(mobius_by_zeta_inversion(p, x, y) == mu);
        REQUIRE(mobius_by_chain_count(p, x, y) == mu);
      }
  }
}

TEST_CASE("Hall condition on the zoo") {
  for (const auto& p : small_zoo()) {
    const ElementId bottom = *p.bottom();
    for (ElementId y = 0; y < static_cast<ElementId>(p.size()); ++y) {
      if (y == bottom) continue;
      std::int64_t s = 0;
      for (ElementId z = 0; z < static_cast<ElementId>(p.size()); ++z)
        if (p.leq(z, y)) s += p.mobius(bottom, z);
      REQUIRE(s == 0);
    }
  }
}

TEST_CASE("flag_f small values") {
  auto b2 = boolean_algebra(2);
  CHECK(flag_f(b2, RankSet{}) == 1);
  CHECK(flag_f(b2, RankSet({1})) == 2);
  CHECK_THROWS_AS(flag_f(b2, RankSet({2})), std::invalid_argument);

  auto sq = cubical_lattice(2);
  CHECK(flag_f(sq, RankSet({1, 2})) == 8);
  auto in_face = [&](int a, int b) {
    if (a == 0) return true;
    if (b == 0) return false;
    auto u = cube_word(2, a), v = cube_word(2, b);
    for (int i = 0; i < 2; ++i)
      if (v[i] != '*' && v[i] != u[i]) return false;
    return true;
  };
  CHECK(oracle::chain_count(10, in_face, sq.ranks(), 0, *sq.top(), {1, 2}) == 8);
  CHECK(oracle::chain_count(10, in_face, sq.ranks(), 0, *sq.top(), {1}) == 4);
  CHECK(flag_f(sq, RankSet({1})) == 4);
}

TEST_CASE("flag_f agrees with the brute chain counter") {
  for (const auto& p : small_zoo()) {
    if (p.size() > 40 || p.height() < 1) continue;
    auto leq = [&](int a, int b) { return p.leq(a, b); };
    auto f = flag_f_vector(p);
    for (std::uint64_t m = 0; m < f.size(); ++m)
      REQUIRE(f[m] == oracle::chain_count(static_cast<int>(p.size()), leq, p.ranks(), *p.bottom(),
                                          *p.top(), RankSet::from_mask(m).values()));
  }
}

TEST_CASE("Philip Hall identity over flag numbers") {
  for (const auto& p : small_zoo()) {
    if (p.height() > 5 || p.height() < 1) continue;
    auto f = flag_f_vector(p);
    Integer s = 0;
    for (std::uint64_t m = 0; m < f.size(); ++m) {
      int k = __builtin_popcountll(m);
      s += (k % 2 == 0) ? -f[m] : f[m];
    }
    REQUIRE(s == p.mobius());
  }
}

TEST_CASE("dual is an involution and preserves mobius") {
  for (const auto& p : small_zoo()) {
    auto d = dual(p);
    auto dd = dual(d);
    REQUIRE(dd.ranks() == p.ranks());
    REQUIRE(dd.covers() == p.covers());
    REQUIRE(*d.bottom() == *p.top());
    REQUIRE(d.mobius() == p.mobius());
  }
  CHECK(isomorphic(dual(chain(3)), chain(3)));
  CHECK(isomorphic(dual(cubical_lattice(2)), cubical_lattice(2)));
  CHECK_FALSE(isomorphic(dual(cubical_lattice(3)), cubical_lattice(3)));
}

TEST_CASE("maximal chains") {
  CHECK(maximal_chains(chain(3)).size() == 1);
  CHECK(maximal_chains(boolean_algebra(3)).size() == 6);
  CHECK(maximal_chains(cubical_lattice(2)).size() == 8);

  auto b3 = boolean_algebra(3);
  auto chains = maximal_chains(b3);
  CHECK(std::is_sorted(chains.begin(), chains.end()));
  CHECK(chains.front() == ChainInPoset{0, 1, 3, 7});
  for (auto& c : chains)
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      const auto& up = b3.upper_covers(c[i]);
      CHECK(std::find(up.begin(), up.end(), c[i + 1]) != up.end());
    }

  for (const auto& p : small_zoo()) {
    if (p.height() < 1) continue;
    std::uint64_t full = (std::uint64_t{1} << (p.height() - 1)) - 1;
    Integer f = flag_f(p, RankSet::from_mask(full));
    if (f > 10000) continue;
    REQUIRE(Integer(maximal_chains(p).size()) == f);
  }
}

TEST_CASE("intervals") {
  auto b3 = boolean_algebra(3);
  CHECK(closed_interval(b3, 5, 5).size() == 1);
  auto top_face = closed_interval(b3, 0, 6);
  CHECK(isomorphic(top_face, boolean_algebra(2)));
  CHECK(top_face.rank(*top_face.bottom()) == 0);
  auto proper = open_interval(b3, 0, 7);
  CHECK(proper.size() == 6);
  CHECK(validate_graded(proper).ok());
  CHECK(proper.height() == 1);
  CHECK_THROWS_AS(closed_interval(b3, 3, 4), std::invalid_argument);
}

TEST_CASE("rank sets") {
  RankSet s({1, 3});
  CHECK(s.mask() == 5);
  CHECK(RankSet::from_mask(5) == s);
  CHECK(s.reversed(4) == RankSet({2, 4}));
  CHECK(s.to_string() == "{1,3}");
  CHECK_THROWS(RankSet({2, 2}));
  CHECK_THROWS(RankSet({0}));
}

TEST_CASE("poset JSON round trip") {
  auto p = cubical_lattice(2);
  auto j = poset_to_json(p);
  CHECK(j["bottom"] == 0);
  CHECK(j["top"] == 9);
  auto back = poset_from_json(j);
  CHECK(back.covers() == p.covers());
  CHECK(back.labels() == p.labels());

  Json sparse = Json::parse(R"({"elements":[{"id":10,"rank":0},{"id":30,"rank":1},{"id":20,"rank":1}],
                               "covers":[[10,20],[10,30]],"bottom":10,"top":null})");
  auto q = poset_from_json(sparse);
  CHECK(q.size() == 3);
  CHECK(q.label(1) == "20");
  CHECK(*q.bottom() == 0);
  sparse["top"] = 20;
  CHECK_THROWS_AS(poset_from_json(sparse), std::invalid_argument);
}
