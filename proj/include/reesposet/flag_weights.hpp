#pragma once

#include "reesposet/isomorphism.hpp"
#include "reesposet/poset.hpp"
#include "reesposet/rees.hpp"
#include "reesposet/report.hpp"
#include "reesposet/tpoly.hpp"
#include "reesposet/zoo.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace reesposet {

/// w(S) = [s_1][s_2 - s_1 + 1]...[s_k - s_{k-1} + 1], w({}) = 1.
inline TPoly weight_w(const RankSet& s) {
  TPoly w = 1;
  int prev = 1;
  for (int r : s) {
    w *= t_analogue(r - prev + 1);
    prev = r;
  }
  return w;
}

/// v(S) as w(S + {n+1}) - w(S).
inline TPoly weight_v_difference(const RankSet& s, int n) {
  if (!s.within(n)) throw std::invalid_argument("weight_v: rank set exceeds n");
  return weight_w(s.with(n + 1)) - weight_w(s);
}

/// v(S) as t * w(S) * [(n+1) - s_k], and t*[n] for the empty set.
inline TPoly weight_v_product(const RankSet& s, int n) {
  if (!s.within(n)) throw std::invalid_argument("weight_v: rank set exceeds n");
  if (s.empty()) return TPoly::t() * t_analogue(n);
  return TPoly::t() * weight_w(s) * t_analogue(n + 1 - s.back());
}

/// v(S); the two defining expressions are computed and must agree.
inline TPoly weight_v(const RankSet& s, int n) {
  TPoly a = weight_v_difference(s, n);
  TPoly b = weight_v_product(s, n);
  if (a != b)
    throw std::logic_error("weight_v: definitions disagree for S = " + s.to_string() + ": " +
                           a.to_string() + " vs " + b.to_string());
  return a;
}

/// Right-hand side of the flag transfer: w(S) f_S(P), or w(S + {n+1}) f_S(P)
/// when with_coatom_rank. `pf` is indexed by RankSet::mask().
inline TPoly flag_f_rees(const std::vector<Integer>& pf, const RankSet& s, int n,
                         bool with_coatom_rank) {
  if (!s.within(n)) throw std::invalid_argument("flag_f_rees: rank set exceeds n");
  const auto m = s.mask();
  if (m >= pf.size()) throw std::invalid_argument("flag_f_rees: flag vector too short");
  TPoly w = with_coatom_rank ? weight_w(s.with(n + 1)) : weight_w(s);
  return w * TPoly(pf[m]);
}

/// Rank of P minus one: the n with P of rank n+1.
inline int rees_tree_n(const GradedPoset& p) {
  require_bounded(p, "rees weights");
  const int n = p.rank(*p.top()) - 1;
  if (n < 0) throw std::invalid_argument("rees weights: P must have rank at least 1");
  return n;
}

/// mu(Rees(P, T_{t,n+1})) = sum_S (-1)^{|S|} v(S) f_S(P) as a polynomial in t.
inline TPoly mobius_rees_formula(const GradedPoset& p) {
  const int n = rees_tree_n(p);
  auto f = flag_f_vector(p);
  TPoly mu;
  for (std::uint64_t m = 0; m < f.size(); ++m) {
    RankSet s = RankSet::from_mask(m);
    TPoly term = weight_v(s, n) * TPoly(f[m]);
    if (s.size() % 2 == 0)
      mu += term;
    else
      mu -= term;
  }
  return mu;
}

inline Integer mobius_rees_formula(const GradedPoset& p, int t) {
  return mobius_rees_formula(p).eval(t);
}

/// Rees(P, T_{t,n+1}) for P of rank n+1.
inline GradedPoset rees_with_tree(const GradedPoset& p, int t) {
  return rees_bounded(p, tary_tree(t, rees_tree_n(p) + 1));
}

/// Compares the chain counts of the constructed Rees(P, T_{t,n+1}) with
/// w(S) f_S(P) and w(S + {n+1}) f_S(P) for every S in {1..n}.
inline Report check_flag_transfer(const GradedPoset& p, const std::vector<int>& t_values,
                                  const std::string& name = "P") {
  Report r;
  r.title = "flag transfer " + name;
  const int n = rees_tree_n(p);
  auto pf = flag_f_vector(p);
  for (int t : t_values) {
    auto rees = rees_with_tree(p, t);
    for (std::uint64_t m = 0; m < pf.size(); ++m) {
      RankSet s = RankSet::from_mask(m);
      const std::string tag = "t=" + std::to_string(t) + " S=" + s.to_string();
      r.expect_eq(tag, flag_f_rees(pf, s, n, false).eval(t), flag_f(rees, s));
      r.expect_eq(tag + "+{" + std::to_string(n + 1) + "}", flag_f_rees(pf, s, n, true).eval(t),
                  flag_f(rees, s.with(n + 1)));
    }
  }
  return r;
}

/// Duality of the Rees Mobius function: v(S) = v(S^rev) for every S, equal
/// formula polynomials for P and P*, and equal oracle values on the
/// constructed posets for each t. Optionally records whether the two Rees
/// posets are isomorphic (check named "Rees posets isomorphic").
inline Report check_duality(const GradedPoset& p, const std::vector<int>& t_values,
                            const std::string& name = "P", bool test_isomorphism = false) {
  Report r;
  r.title = "duality " + name;
  const int n = rees_tree_n(p);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    RankSet s = RankSet::from_mask(m);
    r.expect_eq("v(" + s.to_string() + ") = v(" + s.reversed(n).to_string() + ")",
                weight_v(s, n), weight_v(s.reversed(n), n));
  }
  GradedPoset d = dual(p);
  TPoly mu = mobius_rees_formula(p);
  r.expect_eq("formula for P equals formula for P*", mu, mobius_rees_formula(d));
  for (int t : t_values) {
    auto rp = rees_with_tree(p, t);
    auto rd = rees_with_tree(d, t);
    const std::string tag = "t=" + std::to_string(t);
    r.expect_eq(tag + " oracle on Rees(P) equals oracle on Rees(P*)", rp.mobius(), rd.mobius());
    r.expect_eq(tag + " formula equals oracle", mu.eval(t), Integer(rp.mobius()));
    if (test_isomorphism)
      r.add(tag + " Rees posets isomorphic", true, "", isomorphic(rp, rd) ? "yes" : "no");
  }
  return r;
}

/// For P of odd rank, the Rees Mobius polynomial must vanish at t = -1
/// (divisibility by 1 + t) and be even at t = 1. Skipped for even rank.
inline Report check_parity_divisibility(const GradedPoset& p, const std::string& name = "P") {
  Report r;
  r.title = "divisibility " + name;
  const int n = rees_tree_n(p);
  if ((n + 1) % 2 == 0) {
    r.skipped = "rank " + std::to_string(n + 1) + " is even";
    return r;
  }
  TPoly mu = mobius_rees_formula(p);
  TPoly q;
  r.add("mu = " + mu.to_string() + " vanishes at t=-1", mu.eval(-1) == 0, "0",
        Report::show(mu.eval(-1)));
  r.add("1 + t divides mu", mu.divide_by_one_plus_t(q), "", q.to_string());
  Integer at1 = mu.eval(1);
  r.add("mu at t=1 is even", at1 % 2 == 0, "even", at1.str());
  return r;
}

}  // namespace reesposet
