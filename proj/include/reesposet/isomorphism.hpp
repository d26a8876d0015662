#pragma once

#include "reesposet/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace reesposet {

namespace detail {

// Joint color refinement on two posets so that colors are comparable across
// them. Colors start from (rank, #upper covers, #lower covers) and are refined
// by the sorted colors of upper and lower covers until stable.
inline std::pair<std::vector<int>, std::vector<int>> refine_colors(const GradedPoset& a,
                                                                   const GradedPoset& b) {
  using Signature = std::vector<int>;
  auto initial = [](const GradedPoset& p, ElementId x) {
    return Signature{p.rank(x), static_cast<int>(p.upper_covers(x).size()),
                     static_cast<int>(p.lower_covers(x).size())};
  };
  std::vector<Signature> sa(a.size()), sb(b.size());
  for (ElementId x = 0; x < static_cast<ElementId>(a.size()); ++x) sa[x] = initial(a, x);
  for (ElementId x = 0; x < static_cast<ElementId>(b.size()); ++x) sb[x] = initial(b, x);

  auto compress = [](const std::vector<Signature>& s1, const std::vector<Signature>& s2,
                     std::vector<int>& c1, std::vector<int>& c2) {
    std::map<Signature, int> ids;
    for (auto& s : s1) ids.emplace(s, 0);
    for (auto& s : s2) ids.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    c1.resize(s1.size());
    c2.resize(s2.size());
    for (std::size_t i = 0; i < s1.size(); ++i) c1[i] = ids[s1[i]];
    for (std::size_t i = 0; i < s2.size(); ++i) c2[i] = ids[s2[i]];
    return next;
  };

  std::vector<int> ca, cb;
  int classes = compress(sa, sb, ca, cb);
  while (true) {
    auto signature = [](const GradedPoset& p, const std::vector<int>& c, ElementId x) {
      Signature s{c[x], -1};
      std::vector<int> ups, downs;
      for (ElementId y : p.upper_covers(x)) ups.push_back(c[y]);
      for (ElementId y : p.lower_covers(x)) downs.push_back(c[y]);
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      s.insert(s.end(), ups.begin(), ups.end());
      s.push_back(-1);
      s.insert(s.end(), downs.begin(), downs.end());
      return s;
    };
    for (ElementId x = 0; x < static_cast<ElementId>(a.size()); ++x) sa[x] = signature(a, ca, x);
    for (ElementId x = 0; x < static_cast<ElementId>(b.size()); ++x) sb[x] = signature(b, cb, x);
    std::vector<int> na, nb;
    int refined = compress(sa, sb, na, nb);
    ca = std::move(na);
    cb = std::move(nb);
    if (refined == classes) break;
    classes = refined;
  }
  return {ca, cb};
}

}  // namespace detail

/// Finds a rank-preserving order isomorphism a -> b, returned as the image of
/// each element of a. Color refinement prunes, backtracking decides.
inline std::optional<std::vector<ElementId>> find_isomorphism(const GradedPoset& a,
                                                              const GradedPoset& b) {
  if (a.size() != b.size() || a.covers().size() != b.covers().size()) return std::nullopt;
  auto [ca, cb] = detail::refine_colors(a, b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  const auto n = static_cast<ElementId>(a.size());
  std::vector<ElementId> order = a.linear_extension();
  if (static_cast<ElementId>(order.size()) != n) {
    order.clear();
    for (ElementId x = 0; x < n; ++x) order.push_back(x);
  }
  std::vector<ElementId> image(n, -1);
  std::vector<char> used(n, 0);

  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == order.size()) return true;
    const ElementId x = order[k];
    for (ElementId y = 0; y < n; ++y) {
      if (used[y] || cb[y] != ca[x]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const ElementId xp = order[j], yp = image[xp];
        ok = a.leq(xp, x) == b.leq(yp, y) && a.leq(x, xp) == b.leq(y, yp);
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = 1;
      if (extend(k + 1)) return true;
      used[y] = 0;
      image[x] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

inline bool isomorphic(const GradedPoset& a, const GradedPoset& b) {
  return find_isomorphism(a, b).has_value();
}

/// True iff `map` is a bijection a -> b with x <= y exactly when map(x) <= map(y).
inline bool is_order_isomorphism(const GradedPoset& a, const GradedPoset& b,
                                 const std::vector<ElementId>& map) {
  if (a.size() != b.size() || map.size() != a.size()) return false;
  std::vector<char> hit(b.size(), 0);
  for (ElementId y : map) {
    if (y < 0 || y >= static_cast<ElementId>(b.size()) || hit[y]) return false;
    hit[y] = 1;
  }
  for (ElementId x = 0; x < static_cast<ElementId>(a.size()); ++x)
    for (ElementId y = 0; y < static_cast<ElementId>(a.size()); ++y)
      if (a.leq(x, y) != b.leq(map[x], map[y])) return false;
  return true;
}

}  // namespace reesposet
