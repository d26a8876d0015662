#pragma once

#include "reesposet/csigma.hpp"
#include "reesposet/derange.hpp"
#include "reesposet/flag_weights.hpp"
#include "reesposet/labeling.hpp"
#include "reesposet/skew_hooks.hpp"
#include "reesposet/zoo.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reesposet {

/// zoo:chain:n, zoo:tree:t:n, zoo:boolean:n, zoo:cube:n, zoo:crosspoly:n, zoo:asym.
inline GradedPoset zoo_poset(const std::string& ref) {
  std::vector<std::string> parts;
  std::stringstream ss(ref);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() < 2 || parts[0] != "zoo") throw std::invalid_argument("not a zoo reference: " + ref);
  auto arg = [&](std::size_t i) {
    if (i >= parts.size()) throw std::invalid_argument("missing parameter in " + ref);
    std::size_t used = 0;
    int v = std::stoi(parts[i], &used);
    if (used != parts[i].size()) throw std::invalid_argument("bad parameter in " + ref);
    return v;
  };
  const std::string& family = parts[1];
  std::size_t expected = 3;
  GradedPoset p;
  if (family == "chain") {
    p = chain(arg(2));
  } else if (family == "tree") {
    p = tary_tree(arg(2), arg(3));
    expected = 4;
  } else if (family == "boolean") {
    p = boolean_algebra(arg(2));
  } else if (family == "cube") {
    p = cubical_lattice(arg(2));
  } else if (family == "crosspoly") {
    p = crosspolytope_lattice(arg(2));
  } else if (family == "asym") {
    p = asymmetric_rank3();
    expected = 2;
  } else {
    throw std::invalid_argument("unknown zoo family: " + family);
  }
  if (parts.size() != expected) throw std::invalid_argument("wrong number of parameters in " + ref);
  return p;
}

// ---------------------------------------------------------------- table

struct TableRow {
  int n = 0;
  Integer derangements;       // D_n
  Integer value;              // (-1)^n mu(Rees(cube_n, C_{n+1})), 0 at n = 0
  Integer signed_previous;    // D+-_{n-1}, 0 at n = 0
  std::optional<Integer> oracle;  // direct Mobius computation when feasible
};

/// Rows 0..max_n from the closed forms; the Mobius oracle is attached for
/// n <= oracle_max.
inline std::vector<TableRow> mobius_table(int max_n, int oracle_max = 0) {
  std::vector<TableRow> rows;
  for (int n = 0; n <= max_n; ++n) {
    TableRow row;
    row.n = n;
    row.derangements = derangement_count(n);
    if (n >= 1) {
      row.value = sign_power(n) * mobius_cube_closed_form(n);
      row.signed_previous = signed_derangement_count(n - 1);
      if (n <= oracle_max) row.oracle = sign_power(n) * Integer(CubeRees(n).poset().mobius());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string table_factorization(const TableRow& row) {
  return row.n == 0 ? "0" : std::to_string(row.n) + "*" + row.signed_previous.str();
}

// ---------------------------------------------------------------- suites

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"flag-weights", "rlabel", "falling", "bijection",
                                              "homology", "rep-dim"};
  return names;
}

/// Zoo posets used by the flag-weight suites: B_2..B_4, cube and
/// crosspolytope up to dimension 3, capped by max_n on the rank.
inline std::vector<std::pair<std::string, GradedPoset>> flag_weight_zoo(int max_n) {
  std::vector<std::pair<std::string, GradedPoset>> z;
  for (int n = 2; n <= std::min(4, max_n); ++n) z.emplace_back("B" + std::to_string(n), boolean_algebra(n));
  for (int n = 1; n <= std::min(3, max_n); ++n) {
    z.emplace_back("cube" + std::to_string(n), cubical_lattice(n));
    z.emplace_back("crosspoly" + std::to_string(n), crosspolytope_lattice(n));
  }
  z.emplace_back("asym", asymmetric_rank3());
  return z;
}

inline std::vector<Report> suite_flag_weights(int max_n) {
  std::vector<Report> out;
  for (const auto& [name, p] : flag_weight_zoo(max_n)) {
    out.push_back(check_flag_transfer(p, {1, 2}, name));
    out.push_back(check_duality(p, {1, 2}, name));
  }
  Report iso;
  iso.title = "duality with non-isomorphic Rees posets";
  auto asym = asymmetric_rank3();
  iso.add("asym is not self-dual", !isomorphic(asym, dual(asym)));
  iso.add("Rees(asym, T_1) and Rees(asym*, T_1) are not isomorphic",
          !isomorphic(rees_with_tree(asym, 1), rees_with_tree(dual(asym), 1)));
  out.push_back(iso);
  std::vector<std::pair<std::string, GradedPoset>> odd;
  for (int n = 1; n <= std::min(5, std::max(max_n, 1)); ++n) {
    if (n % 2 == 1) {
      odd.emplace_back("chain" + std::to_string(n + 1), chain(n + 1));
      odd.emplace_back("B" + std::to_string(n), boolean_algebra(n));
    }
    if ((n + 1) % 2 == 1 && n <= 4) {
      odd.emplace_back("cube" + std::to_string(n), cubical_lattice(n));
      odd.emplace_back("crosspoly" + std::to_string(n), crosspolytope_lattice(n));
    }
  }
  odd.emplace_back("asym", asymmetric_rank3());
  for (const auto& [name, p] : odd) out.push_back(check_parity_divisibility(p, name));
  return out;
}

inline std::vector<Report> suite_rlabel(int max_n) {
  std::vector<Report> out;
  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    CubeRees cr(n);
    Report r = verify_r_labeling(cr.poset(), cr.labeling());
    r.title = "R-labeling of Rees(cube_" + std::to_string(n) + ", C_" + std::to_string(n + 1) + ")";
    r.expect_eq("falling chains = |mu|", abs(Integer(cr.poset().mobius())),
                Integer(count_falling_chains(cr.poset(), cr.labeling())));
    out.push_back(std::move(r));
    out.push_back(check_corank_formula(cr));
  }
  return out;
}

/// Four-way Mobius agreement, word counts, divisibility by n and the
/// convolution identity.
inline std::vector<Report> suite_falling(int max_n, bool slow = false) {
  std::vector<Report> out;
  Report counts;
  counts.title = "falling word counts";
  std::string listed;
  for (int n = 1; n <= std::min(max_n, slow ? 8 : 6); ++n) {
    const Integer count = Integer(falling_words(n).size());
    listed += (listed.empty() ? "" : ",") + count.str();
    counts.expect_eq("|F_" + std::to_string(n) + "| = n D+-_{n-1}", Integer(n) * signed_derangement_count(n - 1),
                     count);
    counts.add("n divides |F_" + std::to_string(n) + "|", count % n == 0);
  }
  counts.add("counts " + listed, true);
  out.push_back(counts);
  for (int n = 1; n <= std::min(max_n, 5); ++n) {
    Report r;
    r.title = "Mobius of Rees(cube_" + std::to_string(n) + ", C_" + std::to_string(n + 1) + ")";
    CubeRees cr(n);
    const Integer oracle = cr.poset().mobius();
    r.expect_eq("closed form", oracle, mobius_cube_closed_form(n));
    r.expect_eq("compositions", oracle, mobius_by_compositions(n));
    r.expect_eq("(-1)^n |falling words|", oracle, sign_power(n) * Integer(falling_words(n).size()));
    r.expect_eq("flag weight formula at t=1", oracle, mobius_rees_formula(cubical_lattice(n), 1));
    out.push_back(std::move(r));
  }
  Report conv;
  conv.title = "convolution identity";
  for (int n = 0; n <= 30; ++n) conv.add("n=" + std::to_string(n), convolution_identity_check(n));
  out.push_back(conv);
  return out;
}

inline std::vector<Report> suite_bijection(int max_n) {
  std::vector<Report> out;
  out.push_back(check_bijection_examples());
  for (int n = 2; n <= std::min(max_n, 7); ++n) out.push_back(check_cycle_bijection(n));
  for (int n = 2; n <= std::min(max_n, 7); ++n) out.push_back(check_f_pi_bijection(n));
  Report jon;
  jon.title = "Rees(B_n, C_n) and derangements";
  for (int n = 1; n <= std::min(max_n, 8); ++n) {
    jon.expect_eq("diagram count n=" + std::to_string(n), derangement_count(n), jonsson_count(n));
    if (n <= 5)
      jon.expect_eq("|mu| oracle n=" + std::to_string(n), derangement_count(n),
                    abs(Integer(rees_bounded(boolean_algebra(n), chain(n)).mobius())));
  }
  out.push_back(jon);
  Report cross;
  cross.title = "Rees^-(crosspolytope_n, C_n) and signed derangements";
  for (int n = 1; n <= std::min(max_n, 4); ++n)
    cross.expect_eq("|mu| n=" + std::to_string(n), signed_derangement_count(n),
                    abs(Integer(rees_minus(crosspolytope_lattice(n), chain(n)).mobius())));
  out.push_back(cross);
  Report perm;
  perm.title = "signed derangement permanent";
  for (int n = 0; n <= std::min(max_n, 7); ++n)
    perm.expect_eq("permanent = signed-fixed-point-free count n=" + std::to_string(n),
                   signed_derangement_oracle(n), signed_derangement_count(n));
  out.push_back(perm);
  out.push_back(nearest_integer_checks(12));
  return out;
}

inline std::vector<Report> suite_homology(int max_n, bool slow = false) {
  std::vector<Report> out;
  const int top = std::min(max_n, slow ? 4 : 3);
  for (int n = 1; n <= top; ++n) {
    out.push_back(rees_cube_homology_report(n));
    Report iso;
    iso.title = "C_sigma isomorphism and sphere homology n=" + std::to_string(n);
    CubeRees cr(n);
    for (const auto& w : falling_words(n)) iso.merge(check_c_sigma_iso(cr, w));
    out.push_back(std::move(iso));
    out.push_back(basis_rank_check(n));
  }
  for (int n = 1; n <= std::min(max_n, 2); ++n) out.push_back(crosspolytope_homology_report(n));
  return out;
}

inline std::vector<Report> suite_rep_dim(int max_n) {
  std::vector<Report> out;
  for (int n = 1; n <= std::min(max_n, 7); ++n) out.push_back(representation_dimension_check(n));
  return out;
}

inline std::vector<Report> run_suite(const std::string& name, int max_n, bool slow = false) {
  if (name == "flag-weights") return suite_flag_weights(max_n);
  if (name == "rlabel") return suite_rlabel(max_n);
  if (name == "falling") return suite_falling(max_n, slow);
  if (name == "bijection") return suite_bijection(max_n);
  if (name == "homology") return suite_homology(max_n, slow);
  if (name == "rep-dim") return suite_rep_dim(max_n);
  if (name == "all") {
    std::vector<Report> out;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s, max_n, slow);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace reesposet
