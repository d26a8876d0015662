#include "oracles.hpp"

#include <reesposet/flag_weights.hpp>
#include <reesposet/labeling.hpp>

#include <catch_amalgamated.hpp>

#include <set>

using namespace reesposet;

TEST_CASE("barred words parse and print") {
  auto w = parse_barred_word("0 -3 |-4| 2 |-1| 5");
  REQUIRE(w.size() == 6);
  CHECK(w[2] == Letter{-4, true});
  CHECK(format_barred_word(w) == "0 -3 |-4| 2 |-1| 5");
  CHECK_THROWS_AS(parse_barred_word("0 x 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_barred_word("|3"), std::invalid_argument);

  auto pi = BarredSignedPermutation::parse("-3 |-4| 2 |-1|");
  CHECK(pi.to_string() == "0 -3 |-4| 2 |-1| 5");
  CHECK(pi.n() == 4);
  CHECK_THROWS_AS(BarredSignedPermutation::parse("0 -3 |-3| 2 |-1| 5"), std::invalid_argument);
  CHECK_THROWS_AS(BarredSignedPermutation(parse_barred_word("|0| -1 2")), std::invalid_argument);
}

TEST_CASE("edge labels of Rees(cube_n, C_{n+1})") {
  CubeRees c5(5);
  const auto& p = c5.poset();
  auto atom = c5.id("01001", 1);
  CHECK(c5.edge_label(c5.bottom(), atom) == EdgeLabel{0, 0});
  CHECK(c5.edge_label(atom, c5.id("*1001", 1)) == EdgeLabel{-1, 0});
  CHECK(c5.edge_label(c5.id("*1001", 1), c5.id("*1*01", 2)) == EdgeLabel{-3, 1});
  CHECK(c5.edge_label(c5.id("*1*01", 2), c5.id("*1*0*", 2)) == EdgeLabel{5, 0});
  CHECK(c5.edge_label(c5.id("*****", 4), c5.top()) == EdgeLabel{6, 0});
  // every Hasse edge gets exactly one row of the table
  for (auto [lo, hi] : p.covers()) REQUIRE_NOTHROW(c5.edge_label(lo, hi));
  CHECK_THROWS_AS(c5.edge_label(atom, c5.id("**001", 1)), std::logic_error);
}

TEST_CASE("R-labeling holds on Rees(cube_n, C_{n+1}) for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    CubeRees cr(n);
    auto report = verify_r_labeling(cr.poset(), cr.labeling());
    INFO(report_to_text(report, true));
    REQUIRE(report.ok());
  }
  CHECK(CubeRees(1).poset().size() == 6);
}

TEST_CASE("R-labeling check detects a corrupted label") {
  CubeRees cr(2);
  auto lo = cr.id("00", 1), hi = cr.id("0*", 2);
  EdgeLabeling broken = [&](ElementId a, ElementId b) {
    EdgeLabel l = cr.edge_label(a, b);
    if (a == lo && b == hi) l.first = -l.first;
    return l;
  };
  auto report = verify_r_labeling(cr.poset(), broken);
  CHECK_FALSE(report.ok());
  bool named = false;
  for (auto& c : report.checks) named |= c.name.find("(00,1)") != std::string::npos;
  CHECK(named);
}

TEST_CASE("chain_to_word and word_to_chain on the worked examples") {
  CubeRees c4(4);
  auto pi = BarredSignedPermutation::parse("0 -3 |-4| 2 |-1| 5");
  auto m = word_to_chain(c4, pi);
  std::vector<std::string> labels;
  for (auto x : m) labels.push_back(c4.poset().label(x));
  CHECK(labels == std::vector<std::string>{"0^", "(0100,1)", "(01*0,1)", "(01**,2)", "(0***,2)",
                                           "(****,3)", "1^"});
  CHECK(chain_to_word(c4, m) == pi);
  CHECK(is_falling(pi));

  CubeRees c5(5);
  ChainInPoset sigma_chain{c5.bottom(),         c5.id("01001", 1), c5.id("*1001", 1),
                           c5.id("*1*01", 2),   c5.id("*1*0*", 2), c5.id("***0*", 3),
                           c5.id("*****", 4),   c5.top()};
  CHECK(chain_to_word(c5, sigma_chain).to_string() == "0 -1 |-3| 5 |2| |-4| 6");
}

TEST_CASE("the rising maximal chain reads 0 1 ... n+1") {
  for (int n = 1; n <= 4; ++n) {
    CubeRees cr(n);
    const auto& p = cr.poset();
    int rising = 0;
    for_each_maximal_chain(p, [&](const ChainInPoset& m) {
      auto w = chain_to_word(cr, m);
      bool up = true;
      for (int i = 0; i <= n; ++i) up &= EdgeLabel{w[i].value, w[i].bar}.leq({w[i + 1].value, w[i + 1].bar});
      if (!up) return;
      ++rising;
      CHECK(m[1] == cr.id(std::string(n, '1'), 1));
      for (int i = 0; i <= n + 1; ++i) CHECK(w[i] == Letter{i, false});
    });
    CHECK(rising == 1);
  }
}

TEST_CASE("word_to_chain and chain_to_word are inverse for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    CubeRees cr(n);
    std::set<ChainInPoset> seen;
    std::size_t chains = 0;
    for_each_maximal_chain(cr.poset(), [&](const ChainInPoset& m) {
      ++chains;
      auto w = chain_to_word(cr, m);
      REQUIRE(word_to_chain(cr, w) == m);
    });
    // every barred signed permutation is the word of some maximal chain
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::size_t words = 0;
    do {
      for (std::uint64_t flags = 0; flags < (std::uint64_t{1} << (2 * n)); ++flags) {
        BarredWord inner;
        for (int i = 0; i < n; ++i)
          inner.push_back({(flags >> (2 * i) & 1) ? -perm[i] : perm[i], (flags >> (2 * i + 1) & 1) != 0});
        auto pi = BarredSignedPermutation::from_inner(inner);
        auto m = word_to_chain(cr, pi);
        REQUIRE(chain_to_word(cr, m) == pi);
        seen.insert(m);
        ++words;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(seen.size() == words);
    CHECK(words == chains);
  }
}

TEST_CASE("is_falling examples") {
  CHECK(is_falling(BarredSignedPermutation::parse("0 -3 |-4| 2 |-1| 5")));
  for (int n = 1; n <= 5; ++n) {
    BarredWord inner;
    for (int i = 1; i <= n; ++i) inner.push_back({i, false});
    CHECK_FALSE(is_falling(BarredSignedPermutation::from_inner(inner)));
  }
  CHECK(is_falling(BarredSignedPermutation::parse(
      "0 -5 -7 |-8| |-9| 11 |6| |2| |-3| 10 4 |-1| 12")));
  CHECK(is_falling(BarredSignedPermutation::parse("0 |-1| 2")));
  CHECK_FALSE(is_falling(BarredSignedPermutation::parse("0 -1 2")));
}

TEST_CASE("falling words: block enumeration matches the filter") {
  CHECK(falling_words(1).size() == 1);
  CHECK(falling_words(1).front().to_string() == "0 |-1| 2");
  CHECK(falling_words(2).size() == 2);
  CHECK(falling_words(3).size() == 15);
  for (int n = 1; n <= 5; ++n) {
    auto fast = falling_words(n);
    auto slow = falling_words_by_filter(n);
    REQUIRE(fast == slow);
    CHECK(std::adjacent_find(fast.begin(), fast.end()) == fast.end());
  }
}

TEST_CASE("falling words are the label words of falling chains") {
  for (int n = 1; n <= 4; ++n) {
    CubeRees cr(n);
    std::vector<BarredSignedPermutation> from_chains;
    for_each_maximal_chain(cr.poset(), [&](const ChainInPoset& m) {
      auto w = chain_to_word(cr, m);
      bool all_descents = true;
      for (int i = 0; i <= n; ++i)
        all_descents &= !EdgeLabel{w[i].value, w[i].bar}.leq({w[i + 1].value, w[i + 1].bar});
      if (all_descents) from_chains.push_back(w);
    });
    std::sort(from_chains.begin(), from_chains.end());
    REQUIRE(from_chains == falling_words(n));
    CHECK(count_falling_chains(cr.poset(), cr.labeling()) ==
          static_cast<std::int64_t>(from_chains.size()));
  }
}

TEST_CASE("total order on falling words") {
  auto a = BarredSignedPermutation::parse("0 -2 |-1| 3");
  auto b = BarredSignedPermutation::parse("0 |-2| |-1| 3");
  CHECK(a < b);
  auto c = BarredSignedPermutation::parse("0 -1 |-2| 3");
  CHECK(a < c);
  CHECK_FALSE(a < a);
}

TEST_CASE("closed forms") {
  CHECK(mobius_by_compositions(1) == -1);
  CHECK(mobius_by_compositions(3) == -15);
  CHECK(mobius_by_compositions(4) == 116);
  CHECK(mobius_cube_closed_form(2) == 2);
  CHECK(mobius_cube_closed_form(5) == -1165);
  CHECK(mobius_cube_closed_form(8) == 3130280);
  for (int n = 1; n <= 12; ++n) CHECK(mobius_cube_closed_form(n) == mobius_by_compositions(n));
  CHECK(compositions(4).size() == 8);
}

TEST_CASE("convolution identity") {
  for (int n = 0; n <= 30; ++n) CHECK(convolution_identity_check(n));
}

TEST_CASE("Mobius of Rees(cube_n, C_{n+1}) four ways, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    CubeRees cr(n);
    const Integer oracle = cr.poset().mobius();
    CHECK(oracle == mobius_cube_closed_form(n));
    CHECK(oracle == mobius_by_compositions(n));
    CHECK(oracle == sign_power(n) * Integer(falling_words(n).size()));
    CHECK(oracle == mobius_rees_formula(cubical_lattice(n), 1));
    CHECK(oracle == sign_power(n) * count_falling_chains(cr.poset(), cr.labeling()));
  }
}

TEST_CASE("Mobius of upper intervals by corank") {
  CHECK(interval_mobius_corank(1) == -1);
  CHECK(interval_mobius_corank(2) == 1);
  CHECK(interval_mobius_corank(3) == -2);
  CHECK_THROWS_AS(interval_mobius_corank(0), std::invalid_argument);
  for (int n = 1; n <= 4; ++n) {
    auto report = check_corank_formula(CubeRees(n));
    INFO(report_to_text(report));
    REQUIRE(report.ok());
  }
}

TEST_CASE("falling word counts are divisible by n") {
  for (int n = 1; n <= 7; ++n) CHECK(falling_words(n).size() % n == 0);
}
