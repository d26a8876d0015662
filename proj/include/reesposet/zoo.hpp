#pragma once

#include "reesposet/poset.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace reesposet {

/// Total order on n elements, ranks 0..n-1, labelled 1..n.
inline GradedPoset chain(int n) {
  if (n < 1) throw std::invalid_argument("chain: n must be at least 1");
  std::vector<int> ranks;
  std::vector<Cover> covers;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    ranks.push_back(i);
    labels.push_back(std::to_string(i + 1));
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  GradedPoset p(std::move(ranks), std::move(covers), std::move(labels));
  require_graded(p, "chain");
  return p;
}

/// Rooted tree in which every non-leaf has t children, with n_plus_1 levels
/// (rank n_plus_1 - 1). The root is the minimum; ids are breadth first and a
/// node is labelled by its child-index path ("r" for the root).
inline GradedPoset tary_tree(int t, int n_plus_1) {
  if (t < 1) throw std::invalid_argument("tary_tree: t must be at least 1");
  if (n_plus_1 < 1) throw std::invalid_argument("tary_tree: need at least one level");
  std::vector<int> ranks{0};
  std::vector<Cover> covers;
  std::vector<std::string> labels{"r"};
  std::vector<ElementId> level{0};
  for (int depth = 1; depth < n_plus_1; ++depth) {
    std::vector<ElementId> next;
    for (ElementId parent : level)
      for (int c = 0; c < t; ++c) {
        auto id = static_cast<ElementId>(ranks.size());
        ranks.push_back(depth);
        labels.push_back(labels[parent] + std::to_string(c));
        covers.emplace_back(parent, id);
        next.push_back(id);
      }
    level = std::move(next);
  }
  GradedPoset p(std::move(ranks), std::move(covers), std::move(labels));
  require_graded(p, "tary_tree");
  return p;
}

/// Subsets of {1..n} under inclusion; the id of a subset is its bitmask.
inline GradedPoset boolean_algebra(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("boolean_algebra: n out of range");
  const ElementId size = ElementId{1} << n;
  std::vector<int> ranks(size);
  std::vector<std::string> labels(size);
  std::vector<Cover> covers;
  for (ElementId m = 0; m < size; ++m) {
    ranks[m] = __builtin_popcount(static_cast<unsigned>(m));
    std::string s = "{";
    for (int i = 0; i < n; ++i)
      if (m & (1 << i)) {
        if (s.size() > 1) s += ",";
        s += std::to_string(i + 1);
      }
    labels[m] = s + "}";
    for (int i = 0; i < n; ++i)
      if (!(m & (1 << i))) covers.emplace_back(m, m | (1 << i));
  }
  GradedPoset p(std::move(ranks), std::move(covers), std::move(labels));
  require_graded(p, "boolean_algebra");
  return p;
}

/// Words over {0,1,*} of length n, indexed lexicographically with 0 < 1 < *.
/// Element id of a word in cubical_lattice(n) is 1 + its index.
inline std::string cube_word(int n, ElementId id) {
  if (id < 1) throw std::invalid_argument("cube_word: id 0 is the empty face");
  std::string w(n, '0');
  ElementId index = id - 1;
  for (int pos = n - 1; pos >= 0; --pos) {
    w[pos] = "01*"[index % 3];
    index /= 3;
  }
  if (index != 0) throw std::out_of_range("cube_word: id too large");
  return w;
}

inline ElementId cube_id(const std::string& word) {
  ElementId index = 0;
  for (char c : word) {
    int d = c == '0' ? 0 : c == '1' ? 1 : c == '*' ? 2 : -1;
    if (d < 0) throw std::invalid_argument("cube word has letter other than 0, 1, *: " + word);
    index = index * 3 + d;
  }
  return index + 1;
}

/// Face lattice of the n-cube: an explicit empty face (id 0, label "0^") and
/// one element per {0,1,*} word, ranked by number of stars plus one. The
/// all-star word is the top.
inline GradedPoset cubical_lattice(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("cubical_lattice: n out of range");
  ElementId words = 1;
  for (int i = 0; i < n; ++i) words *= 3;
  std::vector<int> ranks(words + 1);
  std::vector<std::string> labels(words + 1);
  std::vector<Cover> covers;
  ranks[0] = 0;
  labels[0] = "0^";
  for (ElementId id = 1; id <= words; ++id) {
    std::string w = cube_word(n, id);
    labels[id] = w;
    ranks[id] = static_cast<int>(std::count(w.begin(), w.end(), '*')) + 1;
    if (ranks[id] == 1) covers.emplace_back(0, id);
    for (int pos = 0; pos < n; ++pos)
      if (w[pos] != '*') {
        std::string up = w;
        up[pos] = '*';
        covers.emplace_back(id, cube_id(up));
      }
  }
  GradedPoset p(std::move(ranks), std::move(covers), std::move(labels));
  require_graded(p, "cubical_lattice");
  return p;
}

/// Face lattice of the n-dimensional crosspolytope, built as the dual of the
/// cube lattice; an element keeps the label of the cube face it is dual to.
inline GradedPoset crosspolytope_lattice(int n) {
  GradedPoset p = dual(cubical_lattice(n));
  require_graded(p, "crosspolytope_lattice");
  return p;
}

/// Rank-3 poset with three atoms a,b,c and two coatoms d > a,b and e > b,c.
/// It is not isomorphic to its dual, which has two atoms.
inline GradedPoset asymmetric_rank3() {
  std::vector<int> ranks{0, 1, 1, 1, 2, 2, 3};
  std::vector<Cover> covers{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}, {4, 6}, {5, 6}};
  GradedPoset p(std::move(ranks), std::move(covers), {"0^", "a", "b", "c", "d", "e", "1^"});
  require_graded(p, "asymmetric_rank3");
  return p;
}

}  // namespace reesposet
