#pragma once

#include "reesposet/derange.hpp"
#include "reesposet/isomorphism.hpp"
#include "reesposet/labeling.hpp"
#include "reesposet/report.hpp"
#include "reesposet/simplicial.hpp"
#include "reesposet/zoo.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace reesposet {

/// The subposet C_sigma of Rees(cube_n, C_{n+1}) attached to a falling word.
/// Ranks in `sub` are face dimensions 0..n.
struct CSigma {
  BarredSignedPermutation sigma;
  Subposet sub;                       // origin ids point into CubeRees::poset()
  std::vector<ElementId> m_sigma;     // proper part of the chain of sigma, by dimension
  std::vector<int> index;             // chain index of generic elements, dimension 0..n-1
  std::vector<int> special_index;     // chain index of m_sigma at each dimension
  std::vector<std::string> rule;      // rule applied at dimension 1..n-1 ("" at 0)
  ElementId lower_top = -1, upper_top = -1;  // ids in CubeRees::poset()

  bool contains(ElementId rees_id) const {
    return std::binary_search(sub.origin.begin(), sub.origin.end(), rees_id);
  }
};

/// Builds C_sigma by the recursive rules on chain indices:
///   dim 0: every vertex gets index 1;
///   sigma_i, sigma_{i-1} unbarred: same index as dimension i-1 (rule i);
///   sigma_i, sigma_{i+1} barred: one more (rule ii);
///   sigma_i barred, sigma_{i+1} unbarred: same index, but the face of m_sigma
///     gets one more (rule iii);
///   sigma_{i-1} barred, sigma_i unbarred: one more than the generic index
///     below (rule iv);
/// and the two tops (*...*, k), (*...*, k+1) with k the index at dimension n-1.
inline CSigma c_sigma(const CubeRees& cr, const BarredSignedPermutation& sigma) {
  const int n = cr.n();
  if (sigma.n() != n) throw std::invalid_argument("c_sigma: word length does not match n");
  if (!is_falling(sigma)) throw std::invalid_argument("c_sigma: " + sigma.to_string() + " is not falling");
  CSigma c;
  c.sigma = sigma;
  const auto chain = word_to_chain(cr, sigma);
  c.m_sigma.assign(chain.begin() + 1, chain.end() - 1);

  c.index.assign(n, 1);
  c.special_index.assign(n + 1, 1);
  c.rule.assign(n, "");
  for (int i = 1; i < n; ++i) {
    const bool prev = sigma[i - 1].bar, cur = sigma[i].bar, next = sigma[i + 1].bar;
    const int k = c.index[i - 1];
    if (!cur && !prev) {
      c.rule[i] = "i";
      c.index[i] = c.special_index[i] = k;
    } else if (cur && next) {
      c.rule[i] = "ii";
      c.index[i] = c.special_index[i] = k + 1;
    } else if (cur) {
      c.rule[i] = "iii";
      c.index[i] = k;
      c.special_index[i] = k + 1;
    } else {
      c.rule[i] = "iv";
      c.index[i] = c.special_index[i] = k + 1;
    }
  }
  if (n >= 2 && c.rule[n - 1] == "iii") throw std::logic_error("c_sigma: last letter of a falling word is unbarred");
  const int k = c.index[n - 1];
  c.special_index[n] = -1;

  std::vector<ElementId> elems;
  auto lookup = [&](const std::string& w, int j) {
    auto id = cr.find(w, j);
    if (!id) throw std::logic_error("c_sigma: chain index " + std::to_string(j) + " out of range for " + w);
    return *id;
  };
  ElementId words = 1;
  for (int a = 0; a < n; ++a) words *= 3;
  for (ElementId f = 1; f < words; ++f) {
    const std::string w = cube_word(n, f);
    const int dim = static_cast<int>(std::count(w.begin(), w.end(), '*'));
    const bool on_chain = cr.word(c.m_sigma[dim]) == w;
    elems.push_back(lookup(w, on_chain ? c.special_index[dim] : c.index[dim]));
  }
  const std::string full(n, '*');
  c.lower_top = lookup(full, k);
  c.upper_top = lookup(full, k + 1);
  elems.push_back(c.lower_top);
  elems.push_back(c.upper_top);
  c.sub = induced_subposet(cr.poset(), std::move(elems), 1);
  return c;
}

/// Cube face lattice without its bottom, plus a second top 1' covering every
/// coatom. Ids 0..3^n-1 are the cube words in cube_id order (shifted by one);
/// the last id is 1'. Ranks are face dimensions.
inline GradedPoset cube_with_second_top(int n) {
  const GradedPoset cube = cubical_lattice(n);
  const int faces = static_cast<int>(cube.size()) - 1;
  std::vector<int> ranks;
  std::vector<std::string> labels;
  for (int f = 1; f <= faces; ++f) {
    ranks.push_back(cube.rank(f) - 1);
    labels.push_back(cube.label(f));
  }
  ranks.push_back(n);
  labels.push_back("1'");
  return GradedPoset::from_order(
      std::move(ranks),
      [&](ElementId a, ElementId b) {
        if (a == b) return true;
        if (a == faces || b == faces) return b == faces && cube.rank(a + 1) <= n;
        return cube.leq(a + 1, b + 1);
      },
      std::move(labels));
}

/// The forgetful map C_sigma -> cube_with_second_top(n), in `sub` ids.
inline std::vector<ElementId> forgetful_map(const CubeRees& cr, const CSigma& c) {
  const int n = cr.n();
  ElementId words = 1;
  for (int a = 0; a < n; ++a) words *= 3;
  std::vector<ElementId> map;
  for (ElementId x : c.sub.origin) {
    if (x == c.upper_top)
      map.push_back(words);
    else
      map.push_back(cube_id(cr.word(x)) - 1);
  }
  return map;
}

/// Order isomorphism onto the cube with a second top, sphere homology of the
/// order complex, and the basic shape of C_sigma.
inline Report check_c_sigma_iso(const CubeRees& cr, const BarredSignedPermutation& sigma) {
  Report r;
  const int n = cr.n();
  r.title = "C_sigma for " + sigma.to_string();
  const CSigma c = c_sigma(cr, sigma);
  const auto& p = c.sub.poset;
  r.expect_eq("element count", Integer(pow(Integer(3), n) + 1), Integer(p.size()));
  bool has_chain = true;
  for (ElementId x : c.m_sigma) has_chain = has_chain && c.contains(x);
  r.add("contains m_sigma", has_chain);
  bool vertices_ok = true;
  std::size_t maximal = 0;
  for (ElementId x = 0; x < static_cast<ElementId>(p.size()); ++x) {
    if (p.rank(x) == 0) vertices_ok = vertices_ok && cr.index(c.sub.origin[x]) == 1;
    if (p.upper_covers(x).empty()) ++maximal;
  }
  r.add("every vertex has chain index 1", vertices_ok);
  r.expect_eq("maximal elements", Integer(2), Integer(maximal));
  r.add("forgetful map is an order isomorphism",
        is_order_isomorphism(p, cube_with_second_top(n), forgetful_map(cr, c)));
  const auto h = reduced_homology(order_complex(p).complex);
  bool sphere = static_cast<int>(h.size()) == n + 1;
  for (const auto& g : h) sphere = sphere && g.torsion.empty() && g.betti == (g.dim == n ? 1u : 0u);
  r.add("reduced homology is Z in degree " + std::to_string(n) + " only", sphere, "", format_homology(h));
  return r;
}

/// Order complex of Rees(cube_n, C_{n+1}) without its bottom and top, with
/// the top boundary map ready for cycle computations.
struct ReesCubeComplex {
  CubeRees cr;
  OrderComplex oc;
  SparseIntMatrix top_boundary;

  explicit ReesCubeComplex(int n) : cr(n), oc(order_complex(cr.poset())), top_boundary(oc.complex.boundary(n)) {}

  int n() const { return cr.n(); }
  std::size_t facet_count() const { return oc.complex.face_count(n()); }

  /// Facet index of a maximal chain given with or without bottom and top.
  int facet_of_chain(const ChainInPoset& chain) const {
    return oc.complex.index_of(oc.face_of_chain(chain));
  }
};

struct FundamentalCycle {
  std::vector<Integer> coefficients;  // indexed by ambient facet
  std::vector<int> support;           // facets of the order complex of C_sigma
  std::size_t kernel_dimension = 0;
  bool unit_coefficients = false;
  bool is_cycle = false;
};

/// Generator of the top homology of the order complex of C_sigma, written in
/// the ambient facet basis and normalized to +1 on the facet of m_sigma.
inline FundamentalCycle fundamental_cycle(const ReesCubeComplex& amb, const CSigma& c) {
  const int n = amb.n();
  FundamentalCycle fc;
  const auto local = order_complex(c.sub.poset);
  for (const Face& f : local.complex.faces(n)) {
    ChainInPoset chain;
    for (int v : f) chain.push_back(c.sub.origin[local.vertex_element[v]]);
    const int idx = amb.facet_of_chain(chain);
    if (idx < 0) throw std::logic_error("fundamental_cycle: chain of C_sigma is not an ambient facet");
    fc.support.push_back(idx);
  }
  std::sort(fc.support.begin(), fc.support.end());
  SparseIntMatrix restricted(amb.top_boundary.rows(), static_cast<int>(fc.support.size()));
  for (std::size_t j = 0; j < fc.support.size(); ++j)
    for (auto [row, v] : amb.top_boundary.column(fc.support[j])) restricted.add(row, static_cast<int>(j), v);
  const auto kernel = integer_kernel(restricted);
  fc.kernel_dimension = kernel.size();
  fc.coefficients.assign(amb.facet_count(), 0);
  if (kernel.size() != 1) return fc;

  ChainInPoset m(c.m_sigma.begin(), c.m_sigma.end());
  const int m_facet = amb.facet_of_chain(m);
  auto at = std::lower_bound(fc.support.begin(), fc.support.end(), m_facet);
  const Integer sign = at != fc.support.end() && *at == m_facet && kernel[0][at - fc.support.begin()] < 0 ? -1 : 1;
  fc.unit_coefficients = true;
  for (std::size_t j = 0; j < fc.support.size(); ++j) {
    fc.coefficients[fc.support[j]] = sign * kernel[0][j];
    fc.unit_coefficients = fc.unit_coefficients && abs(kernel[0][j]) == 1;
  }
  fc.is_cycle = true;
  for (const auto& x : amb.top_boundary.apply(fc.coefficients)) fc.is_cycle = fc.is_cycle && x == 0;
  return fc;
}

/// Fundamental cycles of every falling word stacked as rows, in increasing
/// total order, over the ambient facets.
struct CycleBasis {
  std::vector<BarredSignedPermutation> words;
  std::vector<FundamentalCycle> cycles;
  SparseIntMatrix matrix;
};

inline CycleBasis cycle_basis(const ReesCubeComplex& amb) {
  CycleBasis b;
  b.words = falling_words(amb.n());
  b.matrix = SparseIntMatrix(static_cast<int>(b.words.size()), static_cast<int>(amb.facet_count()));
  for (std::size_t s = 0; s < b.words.size(); ++s) {
    b.cycles.push_back(fundamental_cycle(amb, c_sigma(amb.cr, b.words[s])));
    for (int f : b.cycles.back().support)
      b.matrix.add(static_cast<int>(s), f, static_cast<std::int64_t>(b.cycles.back().coefficients[f]));
  }
  return b;
}

inline std::string torsion_string(const HomologyGroup& g) {
  std::string s;
  for (const auto& t : g.torsion) s += (s.empty() ? "Z/" : " + Z/") + t.str();
  return s.empty() ? "none" : s;
}

/// Reduced homology of the order complex of a bounded poset's proper part.
inline std::vector<HomologyGroup> proper_part_homology(const GradedPoset& p) {
  return reduced_homology(order_complex(p).complex);
}

/// H~_k = 0 below the top, H~_n free of rank n * D+-_{n-1}, no torsion, and
/// the reduced Euler characteristic equals the Mobius value.
inline Report rees_cube_homology_report(int n) {
  Report r;
  r.title = "homology of Rees(cube_" + std::to_string(n) + ", C_" + std::to_string(n + 1) + ")";
  CubeRees cr(n);
  const auto oc = order_complex(cr.poset());
  std::string faces;
  for (int d = 0; d <= oc.complex.dimension(); ++d)
    faces += (d ? "," : "") + std::to_string(oc.complex.face_count(d));
  r.add("face numbers f_0..f_" + std::to_string(oc.complex.dimension()) + " = " + faces, true);
  r.expect_eq("Euler characteristic equals Mobius value", mobius_cube_closed_form(n),
              oc.complex.reduced_euler_characteristic());
  const auto h = reduced_homology(oc.complex);
  const Integer rank = Integer(n) * signed_derangement_count(n - 1);
  for (const auto& g : h) {
    const std::string d = std::to_string(g.dim);
    r.expect_eq("rank H~_" + d, g.dim == n ? rank : Integer(0), Integer(g.betti));
    r.add("no torsion in H~_" + d, g.torsion.empty(), "none", torsion_string(g));
  }
  r.add("homology " + format_homology(h), true);
  return r;
}

/// m_tau in C_sigma forces tau <= sigma. Then the cycles are checked
/// to be unit-coefficient cycles whose minor on the chains m_tau is
/// triangular with unit diagonal, of full rank |F_n|, with all invariant
/// factors 1, matching the rank of the ambient top homology.
inline Report basis_rank_check(int n, bool ambient_homology = true) {
  Report r;
  r.title = "fundamental cycle basis n=" + std::to_string(n);
  ReesCubeComplex amb(n);
  const auto words = falling_words(n);
  const std::size_t count = words.size();
  r.expect_eq("|F_n| = n D+-_{n-1}", Integer(n) * signed_derangement_count(n - 1), Integer(count));

  std::vector<CSigma> cs;
  for (const auto& w : words) cs.push_back(c_sigma(amb.cr, w));
  std::vector<std::vector<ElementId>> chains;
  std::vector<int> chain_facet;
  for (const auto& w : words) {
    auto ch = word_to_chain(amb.cr, w);
    chains.emplace_back(ch.begin() + 1, ch.end() - 1);
    chain_facet.push_back(amb.facet_of_chain(ch));
  }
  std::size_t violations = 0, memberships = 0;
  std::string first_violation;
  for (std::size_t s = 0; s < count; ++s)
    for (std::size_t t = 0; t < count; ++t) {
      bool inside = true;
      for (ElementId x : chains[t]) inside = inside && cs[s].contains(x);
      if (!inside) continue;
      ++memberships;
      if (words[s] < words[t]) {
        if (violations++ == 0) first_violation = words[t].to_string() + " in C_sigma of " + words[s].to_string();
      }
    }
  r.add("chainorder: m_tau in C_sigma implies tau <= sigma (" + std::to_string(memberships) + " memberships)",
        violations == 0, "0 violations",
        std::to_string(violations) + " violations" + (first_violation.empty() ? "" : ", e.g. " + first_violation));

  SparseIntMatrix stacked(static_cast<int>(count), static_cast<int>(amb.facet_count()));
  std::size_t bad_kernel = 0, bad_units = 0, bad_cycle = 0;
  std::vector<FundamentalCycle> cycles;
  for (std::size_t s = 0; s < count; ++s) {
    cycles.push_back(fundamental_cycle(amb, cs[s]));
    const auto& fc = cycles.back();
    bad_kernel += fc.kernel_dimension == 1 ? 0 : 1;
    bad_units += fc.unit_coefficients ? 0 : 1;
    bad_cycle += fc.is_cycle ? 0 : 1;
    for (int f : fc.support) stacked.add(static_cast<int>(s), f, static_cast<std::int64_t>(fc.coefficients[f]));
  }
  r.expect_eq("each C_sigma has a one-dimensional top cycle space", Integer(0), Integer(bad_kernel));
  r.expect_eq("cycle coefficients are +-1 on the support", Integer(0), Integer(bad_units));
  r.expect_eq("boundary of each cycle vanishes", Integer(0), Integer(bad_cycle));

  std::size_t above_diagonal = 0, bad_diagonal = 0;
  for (std::size_t s = 0; s < count; ++s)
    for (std::size_t t = 0; t < count; ++t) {
      const Integer& v = cycles[s].coefficients[chain_facet[t]];
      if (t == s && abs(v) != 1) ++bad_diagonal;
      if (t > s && v != 0) ++above_diagonal;
    }
  r.expect_eq("rho_sigma(m_tau) = 0 for tau > sigma", Integer(0), Integer(above_diagonal));
  r.expect_eq("rho_sigma(m_sigma) = +-1", Integer(0), Integer(bad_diagonal));
  r.expect_eq("rational rank of the cycle matrix", Integer(count), Integer(rational_rank(stacked)));
  const auto inv = smith_invariants(stacked);
  bool all_one = inv.size() == count;
  for (const auto& x : inv) all_one = all_one && x == 1;
  r.add("invariant factors of the cycle matrix are all 1", all_one, std::to_string(count) + " ones",
        std::to_string(inv.size()) + " nonzero factors");
  if (ambient_homology) {
    const auto h = reduced_homology(amb.oc.complex);
    r.expect_eq("rank of ambient H~_n", Integer(count), Integer(h.back().betti));
  }
  return r;
}

/// Top homology of Rees^-(crosspolytope_n, C_n) against D+-_n and the Mobius value.
inline Report crosspolytope_homology_report(int n) {
  Report r;
  r.title = "homology of Rees^-(crosspolytope_" + std::to_string(n) + ", C_" + std::to_string(n) + ")";
  const GradedPoset p = rees_minus(crosspolytope_lattice(n), chain(n));
  const Integer mu = mobius(p, *p.bottom(), *p.top());
  r.expect_eq("|mu| = D+-_n", signed_derangement_count(n), abs(mu));
  const auto h = proper_part_homology(p);
  const int top = h.back().dim;
  for (const auto& g : h) {
    const std::string d = std::to_string(g.dim);
    r.expect_eq("rank H~_" + d, g.dim == top ? signed_derangement_count(n) : Integer(0), Integer(g.betti));
    r.add("no torsion in H~_" + d, g.torsion.empty(), "none", torsion_string(g));
  }
  r.add("homology " + format_homology(h), true);
  return r;
}

}  // namespace reesposet
