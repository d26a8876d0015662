#pragma once

#include "reesposet/barred_word.hpp"
#include "reesposet/integer.hpp"
#include "reesposet/poset.hpp"
#include "reesposet/rees.hpp"
#include "reesposet/report.hpp"
#include "reesposet/zoo.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace reesposet {

/// Edge label (first, second) in {0, +-1, ..., +-n, n+1} x {0,1}, compared
/// in the product order.
struct EdgeLabel {
  int first = 0;
  int second = 0;
  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
  bool leq(const EdgeLabel& o) const { return first <= o.first && second <= o.second; }
  Letter letter() const { return {first, second == 1}; }
};

using EdgeLabeling = std::function<EdgeLabel(ElementId, ElementId)>;

/// Rees(cube_n, C_{n+1}) with lookups between element ids and (word, index)
/// pairs. The chain index is 1-based as in (x,i), 1 <= i <= stars(x) + 1.
class CubeRees {
 public:
  explicit CubeRees(int n) : n_(n), rees_(rees_bounded_full(cubical_lattice(n), chain(n + 1))) {
    const auto& p = rees_.poset;
    for (ElementId id = 0; id < static_cast<ElementId>(p.size()); ++id)
      if (rees_.pairs[id]) {
        auto [face, q] = *rees_.pairs[id];
        by_pair_[{cube_word(n, face), q + 1}] = id;
      }
  }

  int n() const { return n_; }
  const GradedPoset& poset() const { return rees_.poset; }
  const ReesPoset& rees() const { return rees_; }
  ElementId bottom() const { return *rees_.poset.bottom(); }
  ElementId top() const { return *rees_.poset.top(); }
  bool is_proper(ElementId x) const { return rees_.pairs.at(x).has_value(); }

  std::string word(ElementId x) const {
    if (!is_proper(x)) throw std::invalid_argument("bottom and top have no cube word");
    return cube_word(n_, rees_.pairs[x]->first);
  }
  int index(ElementId x) const {
    if (!is_proper(x)) throw std::invalid_argument("bottom and top have no chain index");
    return rees_.pairs[x]->second + 1;
  }
  std::optional<ElementId> find(const std::string& word, int index) const {
    auto it = by_pair_.find({word, index});
    if (it == by_pair_.end()) return std::nullopt;
    return it->second;
  }
  ElementId id(const std::string& word, int index) const {
    auto x = find(word, index);
    if (!x) throw std::invalid_argument("no element (" + word + "," + std::to_string(index) + ")");
    return *x;
  }

  /// The label of a Hasse edge lo < hi from the edge table. Throws
  /// std::logic_error if no row of the table applies.
  EdgeLabel edge_label(ElementId lo, ElementId hi) const {
    const auto& p = rees_.poset;
    auto malformed = [&](const char* why) {
      return std::logic_error("malformed edge " + p.label(lo) + " < " + p.label(hi) + ": " + why);
    };
    if (lo == bottom()) {
      if (!is_proper(hi) || p.rank(hi) != 1 || index(hi) != 1) throw malformed("not an atom (x,1)");
      return {0, 0};
    }
    if (hi == top()) {
      if (!is_proper(lo)) throw malformed("bottom below top");
      return {n_ + 1, 0};
    }
    if (!is_proper(lo) || !is_proper(hi)) throw malformed("improper endpoint");
    const std::string x = word(lo), y = word(hi);
    int position = 0;
    for (int a = 0; a < n_; ++a) {
      if (x[a] == y[a]) continue;
      if (x[a] == '*' || y[a] != '*' || position != 0) throw malformed("faces differ wrongly");
      position = a + 1;
    }
    if (position == 0) throw malformed("same face");
    const int step = index(hi) - index(lo);
    if (step != 0 && step != 1) throw malformed("chain index jumps");
    return {x[position - 1] == '1' ? position : -position, step};
  }

  EdgeLabeling labeling() const {
    return [this](ElementId lo, ElementId hi) { return edge_label(lo, hi); };
  }

 private:
  int n_;
  ReesPoset rees_;
  std::map<std::pair<std::string, int>, ElementId> by_pair_;
};

namespace detail {

// Labels of all Hasse edges, aligned with GradedPoset::lower_covers.
inline std::vector<std::vector<EdgeLabel>> label_lower_covers(const GradedPoset& p,
                                                              const EdgeLabeling& label) {
  std::vector<std::vector<EdgeLabel>> out(p.size());
  for (ElementId z = 0; z < static_cast<ElementId>(p.size()); ++z)
    for (ElementId w : p.lower_covers(z)) out[z].push_back(label(w, z));
  return out;
}

// For each z >= x, the number of saturated chains from x to z in which each
// pair of consecutive labels satisfies step_ok(previous, next).
template <class StepOk>
std::vector<std::int64_t> count_label_chains_from(
    const GradedPoset& p, ElementId x, const std::vector<std::vector<EdgeLabel>>& labels,
    StepOk&& step_ok) {
  const Bitset& up = p.up_set(x);
  // per element: (label of incoming edge, number of chains ending with it)
  std::vector<std::vector<std::pair<EdgeLabel, std::int64_t>>> ending(p.size());
  std::vector<std::int64_t> total(p.size(), 0);
  for (ElementId z : p.linear_extension()) {
    if (!up.test(z) || z == x) continue;
    const auto& below = p.lower_covers(z);
    for (std::size_t e = 0; e < below.size(); ++e) {
      const ElementId w = below[e];
      if (!up.test(w)) continue;
      const EdgeLabel& l = labels[z][e];
      std::int64_t c = 0;
      if (w == x) {
        c = 1;
      } else {
        for (auto& [prev, k] : ending[w])
          if (step_ok(prev, l)) c += k;
      }
      if (c) {
        ending[z].emplace_back(l, c);
        total[z] += c;
      }
    }
  }
  total[x] = 1;
  return total;
}

}  // namespace detail

/// Checks that every closed interval [x,y], x < y, has exactly one saturated
/// chain with weakly increasing labels. Lists up to `max_listed` offending
/// intervals.
inline Report verify_r_labeling(const GradedPoset& p, const EdgeLabeling& label,
                                std::size_t max_listed = 10) {
  Report r;
  r.title = "R-labeling";
  const auto labels = detail::label_lower_covers(p, label);
  auto rising = [](const EdgeLabel& a, const EdgeLabel& b) { return a.leq(b); };
  std::size_t intervals = 0, bad = 0;
  for (ElementId x = 0; x < static_cast<ElementId>(p.size()); ++x) {
    auto counts = detail::count_label_chains_from(p, x, labels, rising);
    for (ElementId y = 0; y < static_cast<ElementId>(p.size()); ++y) {
      if (y == x || !p.leq(x, y)) continue;
      ++intervals;
      if (counts[y] != 1) {
        if (++bad <= max_listed)
          r.add("interval [" + p.label(x) + ", " + p.label(y) + "]", false, "1 rising chain",
                std::to_string(counts[y]) + " rising chains");
      }
    }
  }
  r.add("every interval has exactly one rising chain (" + std::to_string(intervals) +
            " intervals)",
        bad == 0, "0 bad intervals", std::to_string(bad) + " bad intervals");
  return r;
}

/// Number of maximal chains all of whose consecutive labels form descents
/// (not weakly increasing).
inline std::int64_t count_falling_chains(const GradedPoset& p, const EdgeLabeling& label) {
  require_bounded(p, "count_falling_chains");
  auto falling = [](const EdgeLabel& a, const EdgeLabel& b) { return !a.leq(b); };
  return detail::count_label_chains_from(p, *p.bottom(), detail::label_lower_covers(p, label),
                                         falling)[*p.top()];
}

/// The word of labels along a maximal chain of Rees(cube_n, C_{n+1}).
inline BarredSignedPermutation chain_to_word(const CubeRees& cr, const ChainInPoset& m) {
  const int n = cr.n();
  if (static_cast<int>(m.size()) != n + 3 || m.front() != cr.bottom() || m.back() != cr.top())
    throw std::invalid_argument("chain_to_word: not a maximal chain");
  BarredWord w;
  for (std::size_t i = 0; i + 1 < m.size(); ++i) w.push_back(cr.edge_label(m[i], m[i + 1]).letter());
  return BarredSignedPermutation(std::move(w));
}

/// Maximal chain with label word pi: start at the vertex with 0 at position
/// |pi_k| when pi_k < 0 and 1 otherwise, star position |pi_k| at step k and
/// raise the chain index at barred letters.
inline ChainInPoset word_to_chain(const CubeRees& cr, const BarredSignedPermutation& pi) {
  const int n = cr.n();
  if (pi.n() != n) throw std::invalid_argument("word_to_chain: word length does not match n");
  std::string x(n, '0');
  for (int k = 1; k <= n; ++k) x[std::abs(pi[k].value) - 1] = pi[k].value < 0 ? '0' : '1';
  int index = 1;
  ChainInPoset m{cr.bottom(), cr.id(x, index)};
  for (int k = 1; k <= n; ++k) {
    x[std::abs(pi[k].value) - 1] = '*';
    if (pi[k].bar) ++index;
    m.push_back(cr.id(x, index));
  }
  m.push_back(cr.top());
  return m;
}

/// Falling test in terms of the word: at every position i = 0..n, an
/// unbarred pi_i needs pi_i > pi_{i+1}, and a barred pi_i followed by a
/// barred letter needs pi_i > pi_{i+1} (values compared with sign).
inline bool is_falling(const BarredSignedPermutation& pi) {
  const int n = pi.n();
  for (int i = 0; i <= n; ++i) {
    const Letter& a = pi[i];
    const Letter& b = pi[i + 1];
    const bool descent = a.value > b.value;
    if (!a.bar && !descent) return false;
    if (a.bar && b.bar && !descent) return false;
  }
  return true;
}

using Composition = std::vector<int>;

inline std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  if (n <= 0) return out;
  for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (n - 1)); ++cuts) {
    Composition c;
    int part = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (cuts & (std::uint64_t{1} << i)) {
        c.push_back(part);
        part = 1;
      } else {
        ++part;
      }
    }
    c.push_back(part);
    out.push_back(std::move(c));
  }
  return out;
}

/// All falling words for n, built block by block: the inner word splits into
/// blocks of unbarred letters followed by barred letters (every block except
/// the first starts unbarred), each block decreasing, the first block
/// negative. Sorted by the total order on falling words.
inline std::vector<BarredSignedPermutation> falling_words(int n) {
  if (n < 1) throw std::invalid_argument("falling_words: n must be at least 1");
  if (n > 9) throw std::invalid_argument("falling_words: n too large to enumerate");
  std::vector<BarredSignedPermutation> out;
  for (const Composition& c : compositions(n)) {
    const int k = static_cast<int>(c.size());
    // assignment of elements 1..n to blocks, as a block index per element
    std::vector<int> block_of(n, 0);
    std::function<void(int, std::vector<int>&)> assign = [&](int element,
                                                             std::vector<int>& room) {
      if (element == n) {
        std::vector<std::vector<int>> blocks(k);
        for (int e = 0; e < n; ++e) blocks[block_of[e]].push_back(e + 1);
        int free_letters = n - c[0];
        for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << free_letters); ++signs) {
          std::vector<std::vector<int>> signed_blocks(k);
          int bit = 0;
          for (int b = 0; b < k; ++b) {
            for (int e : blocks[b]) {
              int v = -e;
              if (b > 0 && (signs >> bit++ & 1)) v = e;
              signed_blocks[b].push_back(v);
            }
            std::sort(signed_blocks[b].rbegin(), signed_blocks[b].rend());
          }
          // bar splits: first block any of c_1 positions, others c_i - 1
          std::vector<int> unbarred(k, 0);
          std::function<void(int)> bars = [&](int b) {
            if (b == k) {
              BarredWord inner;
              for (int i = 0; i < k; ++i)
                for (int j = 0; j < c[i]; ++j) inner.push_back({signed_blocks[i][j], j >= unbarred[i]});
              out.push_back(BarredSignedPermutation::from_inner(inner));
              return;
            }
            for (int u = (b == 0 ? 0 : 1); u <= c[b] - 1; ++u) {
              unbarred[b] = u;
              bars(b + 1);
            }
          };
          bars(0);
        }
        return;
      }
      for (int b = 0; b < k; ++b) {
        if (room[b] == 0) continue;
        --room[b];
        block_of[element] = b;
        assign(element + 1, room);
        ++room[b];
      }
    };
    std::vector<int> room = c;
    assign(0, room);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every barred signed permutation of size n, filtered by is_falling. Used as
/// an oracle for small n.
inline std::vector<BarredSignedPermutation> falling_words_by_filter(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("falling_words_by_filter: n out of range");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  std::vector<BarredSignedPermutation> out;
  do {
    for (std::uint64_t flags = 0; flags < (std::uint64_t{1} << (2 * n)); ++flags) {
      BarredWord inner;
      for (int i = 0; i < n; ++i)
        inner.push_back({(flags >> (2 * i) & 1) ? -perm[i] : perm[i], (flags >> (2 * i + 1) & 1) != 0});
      auto pi = BarredSignedPermutation::from_inner(inner);
      if (is_falling(pi)) out.push_back(pi);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// (-1)^n sum_c 2^{n-c_1} multinomial(n; c) c_1 prod_{i>=2} (c_i - 1).
inline Integer mobius_by_compositions(int n) {
  if (n < 1) throw std::invalid_argument("mobius_by_compositions: n must be at least 1");
  Integer s = 0;
  for (const Composition& c : compositions(n)) {
    Integer term = pow2(n - c[0]) * multinomial(c) * c[0];
    for (std::size_t i = 1; i < c.size(); ++i) term *= c[i] - 1;
    s += term;
  }
  return sign_power(n) * s;
}

/// -1 + sum_{i=0}^n (-1)^{n-i} 2^{n-i} C(n,i) (i+1) (n-i)!
inline Integer mobius_cube_closed_form(int n) {
  if (n < 1) throw std::invalid_argument("mobius_cube_closed_form: n must be at least 1");
  Integer s = -1;
  for (int i = 0; i <= n; ++i)
    s += sign_power(n - i) * pow2(n - i) * binomial(n, i) * (i + 1) * factorial(n - i);
  return s;
}

/// 1 + sum_{k=0}^n C(n,k) (-1)^{k+1} k! (n-k+1) == 0
inline bool convolution_identity_check(int n) {
  if (n < 0) throw std::invalid_argument("convolution_identity_check: n must be nonnegative");
  Integer s = 1;
  for (int k = 0; k <= n; ++k) s += binomial(n, k) * sign_power(k + 1) * factorial(k) * (n - k + 1);
  return s == 0;
}

/// mu([x, top]) = (-1)^k (k-1)! for a proper element x of Rees(cube_n,
/// C_{n+1}) with k = rank(top) - rank(x); coatoms have k = 1.
inline Integer interval_mobius_corank(int k) {
  if (k < 1) throw std::invalid_argument("interval_mobius_corank: k must be at least 1");
  return sign_power(k) * factorial(k - 1);
}

/// Compares interval_mobius_corank against the oracle on every proper
/// element of Rees(cube_n, C_{n+1}).
inline Report check_corank_formula(const CubeRees& cr) {
  Report r;
  r.title = "corank Mobius values n=" + std::to_string(cr.n());
  const auto& p = cr.poset();
  const int top_rank = p.rank(cr.top());
  std::map<int, std::pair<std::size_t, std::size_t>> by_k;  // k -> (checked, mismatches)
  for (ElementId x = 0; x < static_cast<ElementId>(p.size()); ++x) {
    if (!cr.is_proper(x)) continue;
    const int k = top_rank - p.rank(x);
    auto& [checked, wrong] = by_k[k];
    ++checked;
    if (Integer(p.mobius(x, cr.top())) != interval_mobius_corank(k)) ++wrong;
  }
  for (auto& [k, cw] : by_k)
    r.add("k=" + std::to_string(k) + ": mu = " + interval_mobius_corank(k).str() + " on " +
              std::to_string(cw.first) + " elements",
          cw.second == 0, "0 mismatches", std::to_string(cw.second) + " mismatches");
  return r;
}

}  // namespace reesposet
