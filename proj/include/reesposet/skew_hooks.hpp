#pragma once

#include "reesposet/barred_word.hpp"
#include "reesposet/derange.hpp"
#include "reesposet/integer.hpp"
#include "reesposet/labeling.hpp"
#include "reesposet/report.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reesposet {

// ---------------------------------------------------------------- cycles

/// Permutation of {1..n} as disjoint cycles. Elements not listed are fixed.
struct PermutationCycles {
  int n = 0;
  std::vector<std::vector<int>> cycles;

  /// Each cycle rotated to start at its minimum, one-cycles dropped, cycles
  /// sorted by minimum.
  PermutationCycles canonical() const {
    PermutationCycles c{n, {}};
    for (auto cyc : cycles) {
      if (cyc.size() < 2) continue;
      std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
      c.cycles.push_back(std::move(cyc));
    }
    std::sort(c.cycles.begin(), c.cycles.end());
    return c;
  }

  /// One-line form: image[i-1] = pi(i).
  std::vector<int> one_line() const {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    for (const auto& cyc : cycles)
      for (std::size_t k = 0; k < cyc.size(); ++k) img[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
    return img;
  }

  static PermutationCycles from_one_line(const std::vector<int>& img) {
    const int n = static_cast<int>(img.size());
    PermutationCycles c{n, {}};
    std::vector<char> seen(n + 1, 0);
    for (int start = 1; start <= n; ++start) {
      if (seen[start]) continue;
      std::vector<int> cyc;
      for (int x = start; !seen[x]; x = img[x - 1]) {
        seen[x] = 1;
        cyc.push_back(x);
      }
      if (cyc.size() >= 2) c.cycles.push_back(std::move(cyc));
    }
    return c;
  }

  std::vector<int> fixed_points() const {
    std::vector<int> f;
    auto img = one_line();
    for (int i = 1; i <= n; ++i)
      if (img[i - 1] == i) f.push_back(i);
    return f;
  }

  /// "(16827)(3495)"; elements are separated by spaces when n >= 10.
  std::string to_string() const {
    if (cycles.empty()) return "()";
    std::string s;
    for (const auto& cyc : cycles) {
      s += "(";
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        if (k && n >= 10) s += " ";
        s += std::to_string(cyc[k]);
      }
      s += ")";
    }
    return s;
  }

  /// Parses "(135764928)" (one digit per element) or "(1 10 3)(2 4)". When
  /// n is 0 it is taken as the largest element listed.
  static PermutationCycles parse(const std::string& text, int n = 0) {
    PermutationCycles c{0, {}};
    std::size_t pos = 0;
    int largest = 0;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("cannot parse cycles \"" + text + "\": " + why);
    };
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        continue;
      }
      if (text[pos] != '(') fail("expected '('");
      const std::size_t close = text.find(')', pos);
      if (close == std::string::npos) fail("missing ')'");
      std::string body = text.substr(pos + 1, close - pos - 1);
      std::replace(body.begin(), body.end(), ',', ' ');
      std::vector<int> cyc;
      const bool spaced = body.find(' ') != std::string::npos;
      if (spaced) {
        std::istringstream in(body);
        std::string tok;
        while (in >> tok) {
          if (!std::all_of(tok.begin(), tok.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
            fail("bad element \"" + tok + "\"");
          cyc.push_back(std::stoi(tok));
        }
      } else {
        for (char ch : body) {
          if (!std::isdigit(static_cast<unsigned char>(ch))) fail("bad element");
          cyc.push_back(ch - '0');
        }
      }
      for (int x : cyc) {
        if (x < 1) fail("elements must be positive");
        largest = std::max(largest, x);
      }
      if (!cyc.empty()) c.cycles.push_back(std::move(cyc));
      pos = close + 1;
    }
    c.n = n ? n : largest;
    if (largest > c.n) fail("element larger than n");
    std::vector<char> seen(c.n + 1, 0);
    for (const auto& cyc : c.cycles)
      for (int x : cyc) {
        if (seen[x]) fail("element " + std::to_string(x) + " repeated");
        seen[x] = 1;
      }
    return c;
  }

  friend bool operator==(const PermutationCycles&, const PermutationCycles&) = default;
};

inline std::vector<std::vector<int>> fixed_point_free_permutations(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  do {
    bool fpf = true;
    for (int i = 0; i < n && fpf; ++i) fpf = img[i] != i + 1;
    if (fpf) out.push_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// ---------------------------------------------------------------- diagrams

/// u horizontal boxes beyond the corner, b boxes in the column (corner
/// included); the hook has u + b boxes.
struct Hook {
  int u = 0;
  int b = 1;
  int size() const { return u + b; }
  friend bool operator==(const Hook&, const Hook&) = default;
  friend auto operator<=>(const Hook&, const Hook&) = default;
};

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Union of hooks; hook i is a row of u_i + 1 boxes with a column of b_i
/// boxes hanging from its last box, and the last box of hook i touches the
/// first box of hook i+1 corner to corner.
struct SkewHookDiagram {
  std::vector<Hook> hooks;

  int size() const {
    int s = 0;
    for (const auto& h : hooks) s += h.size();
    return s;
  }

  void validate() const {
    for (std::size_t i = 0; i < hooks.size(); ++i) {
      if (hooks[i].b < 1) throw std::invalid_argument("hook with empty column");
      if (hooks[i].u < (i == 0 ? 0 : 1)) throw std::invalid_argument("hook with empty arm");
    }
  }

  /// Boxes in reading order: each hook's row left to right, then its column
  /// top to bottom (the corner is listed once).
  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    int row = 0, col = 0;
    for (const auto& h : hooks) {
      for (int j = 0; j < h.u; ++j) out.push_back({row, col + j});
      for (int j = 0; j < h.b; ++j) out.push_back({row + j, col + h.u});
      row += h.b;
      col += h.u + 1;
    }
    return out;
  }

  /// Row lengths lambda_i = (u_1 + ... + u_i + i)^{b_i}.
  std::vector<int> lambda() const {
    std::vector<int> out;
    int arm = 0;
    for (std::size_t i = 0; i < hooks.size(); ++i) {
      arm += hooks[i].u;
      out.insert(out.end(), hooks[i].b, arm + static_cast<int>(i) + 1);
    }
    return out;
  }

  /// mu_i = ((u_1+...+u_i+i-1)^{b_i-1}, u_1+...+u_i+i) for i < k and
  /// mu_k = (u_1+...+u_k+k-1)^{b_k-1}; as row lengths this is the removed
  /// part of every row after the first.
  std::vector<int> mu() const {
    std::vector<int> out;
    int arm = 0;
    const int k = static_cast<int>(hooks.size());
    for (int i = 0; i < k; ++i) {
      arm += hooks[i].u;
      out.insert(out.end(), hooks[i].b - 1, arm + i);
      if (i + 1 < k) out.push_back(arm + i + 1);
    }
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& h : hooks)
      s += (s.empty() ? "" : " ") + std::string("(") + std::to_string(h.u) + "," + std::to_string(h.b) + ")";
    return s;
  }

  friend bool operator==(const SkewHookDiagram&, const SkewHookDiagram&) = default;
  friend auto operator<=>(const SkewHookDiagram&, const SkewHookDiagram&) = default;
};

/// Splits a barred word into hooks: a run of unbarred letters followed by a
/// nonempty run of barred letters. Returns the hook shapes, or nothing if
/// the word ends with unbarred letters.
inline std::optional<SkewHookDiagram> hook_shape(const BarredWord& w) {
  SkewHookDiagram d;
  std::size_t i = 0;
  while (i < w.size()) {
    Hook h{0, 0};
    while (i < w.size() && !w[i].bar) ++h.u, ++i;
    while (i < w.size() && w[i].bar) ++h.b, ++i;
    if (h.b == 0) return std::nullopt;
    d.hooks.push_back(h);
  }
  return d;
}

/// Letters of `w` grouped by hook.
inline std::vector<BarredWord> hook_pieces(const BarredWord& w, const SkewHookDiagram& d) {
  std::vector<BarredWord> out;
  std::size_t pos = 0;
  for (const auto& h : d.hooks) {
    out.emplace_back(w.begin() + pos, w.begin() + pos + h.size());
    pos += h.size();
  }
  return out;
}

/// Hook shape of a falling word's inner letters.
inline SkewHookDiagram shape_of(const BarredSignedPermutation& sigma) {
  const auto& l = sigma.letters();
  auto d = hook_shape(BarredWord(l.begin() + 1, l.end() - 1));
  if (!d) throw std::invalid_argument("shape_of: " + sigma.to_string() + " does not end barred");
  return *d;
}

/// Rows strictly decreasing left to right and columns strictly decreasing top
/// to bottom. `labels[i]` sits in `cells[i]`.
inline bool is_standard_filling(const std::vector<Cell>& cells, const std::vector<int>& labels) {
  if (cells.size() != labels.size()) return false;
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = 0; b < cells.size(); ++b) {
      if (cells[a].row == cells[b].row && cells[a].col < cells[b].col && !(labels[a] > labels[b]))
        return false;
      if (cells[a].col == cells[b].col && cells[a].row < cells[b].row && !(labels[a] > labels[b]))
        return false;
    }
  return true;
}

/// Number of standard fillings of a skew shape with 1..|cells|, by placing
/// the labels from largest to smallest into cells whose left and upper
/// neighbours in the shape are already filled.
inline Integer count_standard_fillings(const std::vector<Cell>& cells) {
  const int m = static_cast<int>(cells.size());
  if (m > 14) throw std::invalid_argument("count_standard_fillings: too many cells");
  std::vector<std::vector<int>> before(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if ((cells[a].row == cells[b].row && cells[b].col < cells[a].col) ||
          (cells[a].col == cells[b].col && cells[b].row < cells[a].row))
        before[a].push_back(b);
  std::map<std::uint32_t, Integer> memo;
  std::function<Integer(std::uint32_t)> go = [&](std::uint32_t filled) -> Integer {
    if (filled == (std::uint32_t{1} << m) - 1) return 1;
    if (auto it = memo.find(filled); it != memo.end()) return it->second;
    Integer total = 0;
    for (int a = 0; a < m; ++a) {
      if (filled >> a & 1) continue;
      bool ready = true;
      for (int b : before[a]) ready &= (filled >> b & 1) != 0;
      if (ready) total += go(filled | (std::uint32_t{1} << a));
    }
    return memo[filled] = total;
  };
  return go(0);
}

/// Cells of the hook with a column of b boxes above the right end of a row
/// of u + 1 boxes, i.e. the shape ((u+1)^b) / (u^{b-1}).
inline std::vector<Cell> corner_hook_cells(int u, int b) {
  std::vector<Cell> out;
  for (int r = 0; r + 1 < b; ++r) out.push_back({r, u});
  for (int c = 0; c <= u; ++c) out.push_back({b - 1, c});
  return out;
}

// ---------------------------------------------------------------- bijection

namespace detail {

/// Splits a cycle starting at its minimum into blocks. In every maximal
/// decreasing run x_1 > ... > x_m a block starts at x_{m-1}, x_{m-3}, ...,
/// except where that would leave the minimum alone in the first block.
inline std::vector<std::vector<int>> cycle_blocks(const std::vector<int>& c) {
  const int len = static_cast<int>(c.size());
  std::vector<char> cut(len, 0);
  int s = 0;
  while (s < len) {
    int e = s;
    while (e + 1 < len && c[e] > c[e + 1]) ++e;
    for (int p = e - 1; p >= s; p -= 2)
      if (p != 1) cut[p] = 1;
    s = e + 1;
  }
  std::vector<std::vector<int>> blocks;
  for (int p = 0; p < len; ++p) {
    if (p == 0 || cut[p]) blocks.emplace_back();
    blocks.back().push_back(c[p]);
  }
  return blocks;
}

/// Block in decreasing order with the last j-1 letters barred, where the
/// lead element (the second one for the first block) is the j-th smallest.
inline BarredWord block_to_hook(const std::vector<int>& block, bool first) {
  const int lead = block.at(first ? 1 : 0);
  std::vector<int> sorted = block;
  std::sort(sorted.begin(), sorted.end());
  const int j = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), lead) - sorted.begin()) + 1;
  BarredWord hook;
  const int k = static_cast<int>(sorted.size());
  for (int idx = k - 1; idx >= 0; --idx) hook.push_back({sorted[idx], idx < j - 1});
  return hook;
}

/// Inverse of block_to_hook up to the first-two swap: with j barred letters
/// and sorted elements m_1 < ... < m_k, gives m_1 m_{j+1} m_2 ... m_k (or
/// m_1 m_k m_2 ... m_{k-1} when every letter is barred).
inline std::vector<int> hook_to_piece(const BarredWord& hook) {
  std::vector<int> m;
  int j = 0;
  for (const auto& l : hook) {
    m.push_back(l.value);
    j += l.bar ? 1 : 0;
  }
  std::sort(m.begin(), m.end());
  const int k = static_cast<int>(m.size());
  const int second = j == k ? k - 1 : j;
  std::vector<int> piece{m[0], m[second]};
  for (int idx = 1; idx < k; ++idx)
    if (idx != second) piece.push_back(m[idx]);
  return piece;
}

inline void require_unsigned_hook_word(const BarredWord& w, const std::string& what) {
  const int n = static_cast<int>(w.size());
  std::vector<char> seen(n + 1, 0);
  for (const auto& l : w) {
    if (l.value < 1 || l.value > n || seen[l.value])
      throw std::invalid_argument(what + ": " + format_barred_word(w) +
                                  " is not a barred permutation of 1.." + std::to_string(n));
    seen[l.value] = 1;
  }
}

}  // namespace detail

/// Fixed-point-free permutation to a barred word whose hooks all have size at
/// least two: each cycle is cut into blocks, each block becomes a
/// decreasing hook, the blocks of a cycle are reversed, and the cycles are
/// concatenated in standard order.
inline BarredWord cycles_to_diagram(const PermutationCycles& pi) {
  auto c = pi.canonical();
  if (!c.fixed_points().empty())
    throw std::invalid_argument("cycles_to_diagram: " + pi.to_string() + " has a fixed point");
  BarredWord word;
  for (const auto& cyc : c.cycles) {
    auto blocks = detail::cycle_blocks(cyc);
    std::vector<BarredWord> hooks;
    for (std::size_t b = 0; b < blocks.size(); ++b) hooks.push_back(detail::block_to_hook(blocks[b], b == 0));
    for (auto it = hooks.rbegin(); it != hooks.rend(); ++it) word.insert(word.end(), it->begin(), it->end());
  }
  return word;
}

/// Inverse of cycles_to_diagram. The word is cut after the hook holding the
/// smallest remaining element, repeatedly; each cut becomes a cycle.
inline PermutationCycles diagram_to_cycles(const BarredWord& w) {
  detail::require_unsigned_hook_word(w, "diagram_to_cycles");
  auto shape = hook_shape(w);
  if (!shape) throw std::invalid_argument("diagram_to_cycles: " + format_barred_word(w) + " ends unbarred");
  auto pieces = hook_pieces(w, *shape);
  for (const auto& p : pieces) {
    if (p.size() < 2)
      throw std::invalid_argument("diagram_to_cycles: hook of size one in " + format_barred_word(w));
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (p[i].value < p[i + 1].value)
        throw std::invalid_argument("diagram_to_cycles: hook not decreasing in " + format_barred_word(w));
  }
  PermutationCycles out{static_cast<int>(w.size()), {}};
  std::size_t start = 0;
  while (start < pieces.size()) {
    int smallest = INT32_MAX;
    for (std::size_t h = start; h < pieces.size(); ++h)
      for (const auto& l : pieces[h]) smallest = std::min(smallest, l.value);
    std::size_t end = start;
    while (std::none_of(pieces[end].begin(), pieces[end].end(),
                        [&](const Letter& l) { return l.value == smallest; }))
      ++end;
    std::vector<int> cycle;
    for (std::size_t h = end + 1; h-- > start;) {
      auto piece = detail::hook_to_piece(pieces[h]);
      if (h != end) std::swap(piece[0], piece[1]);
      cycle.insert(cycle.end(), piece.begin(), piece.end());
    }
    out.cycles.push_back(std::move(cycle));
    start = end + 1;
  }
  return out;
}

// ---------------------------------------------------------------- F_pi

/// One member (F_i, tau) of the family built from a permutation of [n-1].
struct FPair {
  int n = 0;
  int i = 0;
  std::vector<int> fixed;      // F, fixed points of the permutation
  std::vector<int> first;      // F_i, increasing
  PermutationCycles tau;       // on [n] - F_i, no one-cycles
};

/// The n pairs (F_i, tau), i = 1..n, for a permutation of [n-1] given in
/// one-line form.
inline std::vector<FPair> f_pi_family(const std::vector<int>& pi) {
  const int n = static_cast<int>(pi.size()) + 1;
  auto cycles = PermutationCycles::from_one_line(pi);
  cycles.n = n - 1;
  const auto fixed = cycles.fixed_points();
  std::vector<int> moved;
  for (int x = 1; x < n; ++x)
    if (!std::binary_search(fixed.begin(), fixed.end(), x)) moved.push_back(x);
  std::vector<FPair> out;
  for (int i = 1; i <= n; ++i) {
    FPair p;
    p.n = n;
    p.i = i;
    p.fixed = fixed;
    p.first = fixed;
    p.first.push_back(std::binary_search(fixed.begin(), fixed.end(), i) ? n : i);
    std::sort(p.first.begin(), p.first.end());
    std::vector<int> rest;
    for (int x = 1; x <= n; ++x)
      if (!std::binary_search(p.first.begin(), p.first.end(), x)) rest.push_back(x);
    // Psi sends the j-th smallest moved element to the j-th smallest of rest
    std::map<int, int> psi;
    for (std::size_t j = 0; j < moved.size(); ++j) psi[moved[j]] = rest[j];
    p.tau.n = n;
    for (const auto& cyc : cycles.cycles) {
      std::vector<int> mapped;
      for (int x : cyc) mapped.push_back(psi.at(x));
      p.tau.cycles.push_back(std::move(mapped));
    }
    p.tau = p.tau.canonical();
    out.push_back(std::move(p));
  }
  return out;
}

namespace detail {

/// Relabels a partial permutation by the order of its support (Phi), or back.
inline std::vector<int> support_of(const PermutationCycles& tau) {
  std::vector<int> s;
  for (const auto& c : tau.cycles) s.insert(s.end(), c.begin(), c.end());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace detail

/// Unsigned barred word of the pair: F_i decreasing as the first hook, barred
/// on i and everything below it when i is not fixed, on the j smallest
/// elements when i is the j-th fixed point; then the diagram of tau.
inline BarredWord f_pair_to_diagram(const FPair& p) {
  BarredWord w;
  const bool i_fixed = std::binary_search(p.fixed.begin(), p.fixed.end(), p.i);
  const int bars = i_fixed ? static_cast<int>(std::lower_bound(p.fixed.begin(), p.fixed.end(), p.i) -
                                              p.fixed.begin()) + 1
                           : static_cast<int>(std::upper_bound(p.first.begin(), p.first.end(), p.i) -
                                              p.first.begin());
  for (int idx = static_cast<int>(p.first.size()) - 1; idx >= 0; --idx)
    w.push_back({p.first[idx], idx < bars});
  auto support = detail::support_of(p.tau);
  if (support.empty()) return w;
  PermutationCycles phi{static_cast<int>(support.size()), {}};
  for (const auto& cyc : p.tau.cycles) {
    std::vector<int> mapped;
    for (int x : cyc)
      mapped.push_back(static_cast<int>(std::lower_bound(support.begin(), support.end(), x) - support.begin()) + 1);
    phi.cycles.push_back(std::move(mapped));
  }
  for (const auto& l : cycles_to_diagram(phi)) w.push_back({support[l.value - 1], l.bar});
  return w;
}

/// Recovers the permutation of [n-1] (one-line) and i from a diagram built by
/// f_pair_to_diagram.
inline std::pair<std::vector<int>, int> diagram_to_f_pair(const BarredWord& w) {
  detail::require_unsigned_hook_word(w, "diagram_to_f_pair");
  const int n = static_cast<int>(w.size());
  auto shape = hook_shape(w);
  if (!shape) throw std::invalid_argument("diagram_to_f_pair: word ends unbarred");
  auto pieces = hook_pieces(w, *shape);
  std::vector<int> first;
  for (const auto& l : pieces[0]) first.push_back(l.value);
  std::sort(first.begin(), first.end());
  const int bars = shape->hooks[0].b;
  const int i = first[bars - 1];
  const bool has_n = first.back() == n;
  std::vector<int> fixed = first;
  fixed.erase(std::find(fixed.begin(), fixed.end(), has_n && bars < static_cast<int>(first.size()) ? n : i));
  // the rest of the word is the diagram of tau on [n] - F_i
  BarredWord rest_word;
  for (std::size_t h = 1; h < pieces.size(); ++h) rest_word.insert(rest_word.end(), pieces[h].begin(), pieces[h].end());
  std::vector<int> rest;
  for (int x = 1; x <= n; ++x)
    if (!std::binary_search(first.begin(), first.end(), x)) rest.push_back(x);
  std::vector<int> pi(n - 1);
  std::iota(pi.begin(), pi.end(), 1);
  if (!rest_word.empty()) {
    BarredWord relabelled;
    for (const auto& l : rest_word)
      relabelled.push_back({static_cast<int>(std::lower_bound(rest.begin(), rest.end(), l.value) - rest.begin()) + 1, l.bar});
    auto phi = diagram_to_cycles(relabelled);
    std::vector<int> moved;
    for (int x = 1; x < n; ++x)
      if (!std::binary_search(fixed.begin(), fixed.end(), x)) moved.push_back(x);
    for (const auto& cyc : phi.cycles)
      for (std::size_t k = 0; k < cyc.size(); ++k) pi[moved[cyc[k] - 1] - 1] = moved[cyc[(k + 1) % cyc.size()] - 1];
  }
  return {pi, i};
}

/// Fills a hook shape with the given signed values in decreasing order.
inline BarredWord fill_decreasing(const SkewHookDiagram& shape, const std::vector<std::vector<int>>& values) {
  BarredWord w;
  for (std::size_t h = 0; h < shape.hooks.size(); ++h) {
    std::vector<int> v = values[h];
    std::sort(v.rbegin(), v.rend());
    for (int j = 0; j < shape.hooks[h].size(); ++j) w.push_back({v[j], j >= shape.hooks[h].u});
  }
  return w;
}

/// Visits every falling word produced from the pairs F_pi: the first hook is
/// signed negative, every other element gets either sign, and each hook is
/// refilled in decreasing order.
template <class Visit>
void for_each_falling_word_via_bijection(int n, Visit&& visit) {
  std::vector<int> pi(n - 1);
  std::iota(pi.begin(), pi.end(), 1);
  do {
    for (const auto& pair : f_pi_family(pi)) {
      BarredWord unsigned_word = f_pair_to_diagram(pair);
      auto shape = *hook_shape(unsigned_word);
      auto pieces = hook_pieces(unsigned_word, shape);
      const int free_count = n - static_cast<int>(pair.first.size());
      for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << free_count); ++signs) {
        std::vector<std::vector<int>> values(pieces.size());
        int bit = 0;
        for (std::size_t h = 0; h < pieces.size(); ++h)
          for (const auto& l : pieces[h])
            values[h].push_back(h == 0 || (signs >> bit++ & 1) ? -l.value : l.value);
        visit(BarredSignedPermutation::from_inner(fill_decreasing(shape, values)));
      }
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
}

inline std::vector<BarredSignedPermutation> falling_words_via_bijection(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("falling_words_via_bijection: n out of range");
  std::vector<BarredSignedPermutation> out;
  for_each_falling_word_via_bijection(n, [&](const BarredSignedPermutation& w) { out.push_back(w); });
  std::sort(out.begin(), out.end());
  return out;
}

/// n D^{+-}_{n-1}, summed over the pairs F_pi as 2^{n - |F_i|} signings each.
inline Integer count_falling_via_bijection(int n) {
  if (n < 1 || n > 10) throw std::invalid_argument("count_falling_via_bijection: n out of range");
  Integer total = 0;
  std::vector<int> pi(n - 1);
  std::iota(pi.begin(), pi.end(), 1);
  do {
    for (const auto& pair : f_pi_family(pi)) total += pow2(n - static_cast<int>(pair.first.size()));
  } while (std::next_permutation(pi.begin(), pi.end()));
  return total;
}

/// Diagrams of all fixed-point-free permutations of [n].
inline std::vector<BarredWord> jonsson_diagrams(int n) {
  std::vector<BarredWord> out;
  for (const auto& img : fixed_point_free_permutations(n))
    out.push_back(cycles_to_diagram(PermutationCycles::from_one_line(img)));
  return out;
}

/// Number of distinct unsigned falling diagrams with all hooks of size at
/// least two, i.e. D_n.
inline Integer jonsson_count(int n) {
  if (n < 1 || n > 10) throw std::invalid_argument("jonsson_count: n out of range");
  auto d = jonsson_diagrams(n);
  std::set<std::vector<std::pair<int, bool>>> distinct;
  for (const auto& w : d) {
    std::vector<std::pair<int, bool>> key;
    for (const auto& l : w) key.emplace_back(l.value, l.bar);
    distinct.insert(std::move(key));
  }
  return Integer(distinct.size());
}

// ---------------------------------------------------------------- reports

/// Roundtrips cycles -> diagram -> cycles for every fixed-point-free
/// permutation of [n], checks hook sizes and distinctness.
inline Report check_cycle_bijection(int n) {
  Report r;
  r.title = "cycle/diagram bijection n=" + std::to_string(n);
  std::size_t bad_roundtrip = 0, small_hooks = 0;
  std::string first_bad;
  std::set<std::string> images;
  const auto perms = fixed_point_free_permutations(n);
  for (const auto& img : perms) {
    auto pi = PermutationCycles::from_one_line(img);
    BarredWord w = cycles_to_diagram(pi);
    auto shape = hook_shape(w);
    bool sizes_ok = shape.has_value() && shape->hooks.front().u >= 1;
    if (shape)
      for (const auto& h : shape->hooks) sizes_ok &= h.size() >= 2;
    if (!sizes_ok) ++small_hooks;
    images.insert(format_barred_word(w));
    bool back = false;
    try {
      back = diagram_to_cycles(w) == pi.canonical();
    } catch (const std::exception&) {
    }
    if (!back && first_bad.empty()) first_bad = pi.to_string() + " -> " + format_barred_word(w);
    bad_roundtrip += back ? 0 : 1;
  }
  r.expect_eq("fixed-point-free permutations = D_n", derangement_count(n), Integer(perms.size()));
  r.add("roundtrip failures", bad_roundtrip == 0, "0",
        std::to_string(bad_roundtrip) + (first_bad.empty() ? "" : " (first: " + first_bad + ")"));
  r.add("diagrams with a hook of size one or a barred first letter", small_hooks == 0, "0",
        std::to_string(small_hooks));
  r.expect_eq("distinct diagrams", perms.size(), images.size());
  return r;
}

/// Checks the two worked examples of the cycle/diagram bijection.
inline Report check_bijection_examples() {
  Report r;
  r.title = "bijection worked examples";
  r.expect_eq("(135764928) forward", std::string("9 |8| |2| 6 |4| 7 5 3 |1|"),
              format_barred_word(cycles_to_diagram(PermutationCycles::parse("(135764928)"))));
  r.expect_eq("8 |7| |2| 6 |1| 9 |5| 4 |3| inverse", std::string("(16827)(3495)"),
              diagram_to_cycles(parse_barred_word("8 |7| |2| 6 |1| 9 |5| 4 |3|")).to_string());
  return r;
}

/// The F_pi words coincide with the falling words, and every pair is
/// recovered from its diagram.
inline Report check_f_pi_bijection(int n) {
  Report r;
  r.title = "F_pi construction n=" + std::to_string(n);
  std::size_t pairs = 0, unrecovered = 0;
  std::set<std::string> diagrams;
  std::vector<int> pi(n - 1);
  std::iota(pi.begin(), pi.end(), 1);
  do {
    for (const auto& pair : f_pi_family(pi)) {
      ++pairs;
      BarredWord w = f_pair_to_diagram(pair);
      diagrams.insert(format_barred_word(w));
      auto [back, i] = diagram_to_f_pair(w);
      if (back != pi || i != pair.i) ++unrecovered;
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  r.expect_eq("pairs = n!", factorial(n), Integer(pairs));
  r.expect_eq("distinct diagrams", pairs, diagrams.size());
  r.expect_eq("pairs not recovered from their diagram", std::size_t{0}, unrecovered);
  if (n <= 7) {
    auto via = falling_words_via_bijection(n);
    auto direct = falling_words(n);
    r.add("signed words equal the falling words", via == direct, std::to_string(direct.size()) + " words",
          std::to_string(via.size()) + " words");
  }
  r.expect_eq("count = n D+-_{n-1}", Integer(n) * signed_derangement_count(n - 1), count_falling_via_bijection(n));
  return r;
}

/// sum over the shapes of falling words of 2^{n - |first hook|} times the
/// number of standard fillings equals n D^{+-}_{n-1}.
inline Report representation_dimension_check(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("representation_dimension_check: need 1 <= n <= 7");
  Report r;
  r.title = "representation dimension n=" + std::to_string(n);
  std::set<SkewHookDiagram> shapes;
  for (const auto& w : falling_words(n)) shapes.insert(shape_of(w));
  Integer total = 0;
  for (const auto& s : shapes) {
    Integer fillings = count_standard_fillings(s.cells());
    std::vector<int> sizes;
    for (const auto& h : s.hooks) sizes.push_back(h.size());
    r.expect_eq("fillings of " + s.to_string() + " = multinomial of hook sizes", multinomial(sizes), fillings);
    total += pow2(n - s.hooks.front().size()) * fillings;
  }
  r.expect_eq("sum over " + std::to_string(shapes.size()) + " shapes = n D+-_{n-1}",
              Integer(n) * signed_derangement_count(n - 1), total);
  return r;
}

}  // namespace reesposet
