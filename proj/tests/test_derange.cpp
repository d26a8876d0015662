#include "oracles.hpp"

#include <reesposet/derange.hpp>
#include <reesposet/rees.hpp>
#include <reesposet/skew_hooks.hpp>
#include <reesposet/zoo.hpp>

#include <catch_amalgamated.hpp>

#include <set>

using namespace reesposet;

namespace {

std::int64_t brute_derangements(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::int64_t c = 0;
  do {
    bool ok = true;
    for (int i = 0; i < n; ++i) ok &= p[i] != i;
    c += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return c;
}

}  // namespace

TEST_CASE("derangement numbers") {
  const std::vector<int> table{1, 0, 1, 2, 9, 44, 265, 1854, 14833, 133496, 1334961};
  for (int n = 0; n <= 10; ++n) CHECK(derangement_count(n) == table[n]);
  for (int n = 0; n <= 8; ++n) CHECK(derangement_count(n) == brute_derangements(n));
  for (int n = 0; n <= 8; ++n) CHECK(permanent(constant_matrix(n, 0, 1)) == brute_derangements(n));
}

TEST_CASE("signed derangement numbers") {
  CHECK(signed_derangement_count(0) == 1);
  CHECK(signed_derangement_count(2) == 5);
  CHECK(signed_derangement_count(3) == 29);
  CHECK(signed_derangement_count(9) == Integer("112690097"));
  for (int n = 0; n <= 7; ++n) {
    CHECK(signed_derangement_count(n) == signed_derangement_oracle(n));
    CHECK(signed_derangement_count(n) == oracle::signed_derangement_permanent(n));
  }
  CHECK_THROWS_AS(signed_derangement_oracle(9), std::invalid_argument);
}

TEST_CASE("Ryser and direct permanents agree") {
  IntegerMatrix a{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
  std::vector<std::vector<std::int64_t>> b{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
  CHECK(permanent_direct(a) == oracle::permanent(b));
  CHECK(permanent_ryser(a) == oracle::permanent(b));
  for (int n = 0; n <= 9; ++n)
    CHECK(permanent_ryser(constant_matrix(n, 1, 2)) == permanent_direct(constant_matrix(n, 1, 2)));
  CHECK(permanent_ryser(constant_matrix(11, 1, 2)) == Integer("49583642701"));
  CHECK_THROWS_AS(permanent_direct({{1, 2}, {3}}), std::invalid_argument);
}

TEST_CASE("nearest-integer formulas") {
  auto r = nearest_integer_checks(12);
  INFO(report_to_text(r));
  CHECK(r.ok());
  auto rows = nearest_integer_rows(3);
  CHECK(rows[3].power_round == Integer(29));
  CHECK(rows[1].power_round == Integer(1));
  CHECK(rows[0].power_round == Integer(1));
  CHECK(rows[3].power_form.error < Rational(1, 1000000));
  CHECK(rational_to_decimal(rows[3].power_form.value, 2) == "29.11");
  // the shifted form at n lands on D+-_{n-1}
  for (const auto& row : nearest_integer_rows(8))
    if (row.n >= 1) CHECK(*row.shifted_round == signed_derangement_count(row.n - 1));
  CHECK_FALSE(certified_round({Rational(1, 2), Rational(1, 100)}).has_value());
  CHECK(certified_round({Rational(-7, 5), Rational(1, 100)}) == Integer(-1));
}

TEST_CASE("cycle notation") {
  auto p = PermutationCycles::parse("(16827)(3495)");
  CHECK(p.n == 9);
  CHECK(p.to_string() == "(16827)(3495)");
  CHECK(p.fixed_points().empty());
  CHECK(PermutationCycles::from_one_line(p.one_line()) == p);
  CHECK(PermutationCycles::parse("(1 10 3)(2 4)").to_string() == "(1 10 3)(2 4)");
  CHECK(PermutationCycles::parse("(231)").canonical().to_string() == "(123)");
  CHECK_THROWS_AS(PermutationCycles::parse("(1231)"), std::invalid_argument);
  CHECK_THROWS_AS(PermutationCycles::parse("(12"), std::invalid_argument);
}

TEST_CASE("cycle to diagram examples") {
  CHECK(format_barred_word(cycles_to_diagram(PermutationCycles::parse("(135764928)"))) ==
        "9 |8| |2| 6 |4| 7 5 3 |1|");
  CHECK(format_barred_word(cycles_to_diagram(PermutationCycles::parse("(12)"))) == "2 |1|");
  CHECK(diagram_to_cycles(parse_barred_word("8 |7| |2| 6 |1| 9 |5| 4 |3|")).to_string() == "(16827)(3495)");
  CHECK(diagram_to_cycles(parse_barred_word("2 |1|")).to_string() == "(12)");
  CHECK(format_barred_word(cycles_to_diagram(PermutationCycles::parse("(16827)(3495)"))) ==
        "8 |7| |2| 6 |1| 9 |5| 4 |3|");
  CHECK_THROWS_AS(cycles_to_diagram(PermutationCycles::parse("(12)", 3)), std::invalid_argument);
  CHECK_THROWS_AS(diagram_to_cycles(parse_barred_word("2 |1| 3")), std::invalid_argument);
  CHECK_THROWS_AS(diagram_to_cycles(parse_barred_word("1 |2|")), std::invalid_argument);
}

TEST_CASE("cycle/diagram bijection is exhaustive for n <= 7") {
  for (int n = 2; n <= 7; ++n) {
    auto r = check_cycle_bijection(n);
    INFO(report_to_text(r, true));
    CHECK(r.ok());
  }
  // every unsigned word with decreasing hooks of size >= 2 and an unbarred
  // first letter is hit
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::set<std::string> admissible;
    do {
      for (std::uint32_t bars = 0; bars < (1u << n); ++bars) {
        BarredWord w;
        for (int i = 0; i < n; ++i) w.push_back({perm[i], (bars >> i & 1) != 0});
        if (w[0].bar) continue;
        auto shape = hook_shape(w);
        if (!shape) continue;
        bool ok = true;
        for (const auto& piece : hook_pieces(w, *shape)) {
          ok &= piece.size() >= 2;
          for (std::size_t i = 0; i + 1 < piece.size(); ++i) ok &= piece[i].value > piece[i + 1].value;
        }
        if (ok) admissible.insert(format_barred_word(w));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::set<std::string> images;
    for (const auto& w : jonsson_diagrams(n)) images.insert(format_barred_word(w));
    CHECK(images == admissible);
  }
}

TEST_CASE("Jonsson count against the Rees(B_n, C_n) oracle") {
  CHECK(jonsson_count(2) == 1);
  CHECK(jonsson_count(4) == 9);
  CHECK(jonsson_count(5) == 44);
  for (int n = 1; n <= 5; ++n) {
    auto p = rees_bounded(boolean_algebra(n), chain(n));
    std::int64_t mu = oracle::mobius(static_cast<int>(p.size()), [&](int a, int b) { return p.leq(a, b); },
                                     *p.bottom(), *p.top());
    CHECK(Integer(mu) == sign_power(n + 1) * derangement_count(n));
    if (n >= 2) CHECK(jonsson_count(n) == derangement_count(n));
  }
}

TEST_CASE("crosspolytope Rees-minus Mobius values") {
  for (int n = 1; n <= 4; ++n) {
    auto p = rees_minus(crosspolytope_lattice(n), chain(n));
    Integer mu = p.mobius();
    CHECK(abs(mu) == signed_derangement_count(n));
  }
}

TEST_CASE("F_pi family") {
  // identity of S_2: F = {1,2}
  auto fam = f_pi_family({1, 2});
  REQUIRE(fam.size() == 3);
  CHECK(fam[0].first == std::vector<int>{1, 2, 3});
  CHECK(fam[2].first == std::vector<int>{1, 2, 3});
  CHECK(fam[0].tau.cycles.empty());
  CHECK(format_barred_word(f_pair_to_diagram(fam[0])) == "3 2 |1|");
  CHECK(format_barred_word(f_pair_to_diagram(fam[1])) == "3 |2| |1|");
  CHECK(format_barred_word(f_pair_to_diagram(fam[2])) == "|3| |2| |1|");
  // (12) in S_2: F empty, each F_i = {i}
  auto swap = f_pi_family({2, 1});
  for (int i = 1; i <= 3; ++i) {
    CHECK(swap[i - 1].first == std::vector<int>{i});
    CHECK(swap[i - 1].tau.cycles.size() == 1);
    CHECK(swap[i - 1].tau.cycles[0].size() == 2);
  }
  CHECK(format_barred_word(f_pair_to_diagram(swap[0])) == "|1| 3 |2|");
  for (int n = 1; n <= 6; ++n) {
    auto r = check_f_pi_bijection(n);
    INFO(report_to_text(r, true));
    CHECK(r.ok());
  }
}

TEST_CASE("falling words counted through F_pi") {
  CHECK(count_falling_via_bijection(1) == 1);
  CHECK(count_falling_via_bijection(3) == 15);
  CHECK(count_falling_via_bijection(7) == 195643);
  for (int n = 1; n <= 6; ++n) CHECK(Integer(falling_words(n).size()) == n * signed_derangement_count(n - 1));
}

TEST_CASE("skew hook geometry") {
  SkewHookDiagram d{{{2, 2}, {1, 3}, {2, 1}}};
  CHECK(d.size() == 11);
  CHECK(d.lambda() == std::vector<int>{3, 3, 5, 5, 5, 8});
  CHECK(d.mu() == std::vector<int>{2, 3, 4, 4, 5});
  // the removed part in each row below the first matches the cells
  auto cells = d.cells();
  std::map<int, std::pair<int, int>> rows;  // row -> (min col, max col + 1)
  for (auto c : cells) {
    auto [it, fresh] = rows.try_emplace(c.row, c.col, c.col + 1);
    it->second.first = std::min(it->second.first, c.col);
    it->second.second = std::max(it->second.second, c.col + 1);
  }
  std::vector<int> lam, mu;
  for (auto& [r, span] : rows) {
    lam.push_back(span.second);
    if (r > 0) mu.push_back(span.first);
  }
  CHECK(lam == d.lambda());
  CHECK(mu == d.mu());
}

TEST_CASE("length-11 falling word: shape and standard filling") {
  auto sigma = BarredSignedPermutation::parse("0 -5 -7 |-8| |-9| 11 |6| |2| |-3| 10 4 |-1| 12");
  CHECK(is_falling(sigma));
  auto d = shape_of(sigma);
  CHECK(d == SkewHookDiagram{{{2, 2}, {1, 3}, {2, 1}}});
  // with the 0 box in front and the 12 box at the end
  SkewHookDiagram augmented{{{3, 2}, {1, 3}, {2, 1}, {0, 1}}};
  std::vector<Cell> expected{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 4}, {2, 5},
                             {3, 5}, {4, 5}, {5, 6}, {5, 7}, {5, 8}, {6, 9}};
  CHECK(augmented.cells() == expected);
  std::vector<int> labels;
  for (const auto& l : sigma.letters()) labels.push_back(l.value);
  CHECK(is_standard_filling(augmented.cells(), labels));
  std::swap(labels[1], labels[2]);
  CHECK_FALSE(is_standard_filling(augmented.cells(), labels));
}

TEST_CASE("standard filling counts") {
  // a hook drawn as a column above the right end of a row: binomial count
  for (int m = 1; m <= 7; ++m)
    for (int b = 1; b <= m; ++b) CHECK(count_standard_fillings(corner_hook_cells(m - b, b)) == binomial(m - 1, b - 1));
  CHECK(count_standard_fillings(SkewHookDiagram{{{0, 4}}}.cells()) == 1);
  // hooks as in the diagrams: one filling per choice of label sets
  CHECK(count_standard_fillings(SkewHookDiagram{{{1, 1}, {1, 1}}}.cells()) == 6);
  CHECK(count_standard_fillings(SkewHookDiagram{{{2, 2}, {1, 3}}}.cells()) == multinomial({4, 4}));
}

TEST_CASE("representation dimension sums") {
  const std::vector<int> expected{0, 1, 2, 15, 116, 1165, 13974};
  for (int n = 1; n <= 6; ++n) {
    auto r = representation_dimension_check(n);
    INFO(report_to_text(r, true));
    CHECK(r.ok());
    CHECK(Integer(expected[n]) == n * signed_derangement_count(n - 1));
  }
}
