#pragma once

#include "reesposet/poset.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reesposet {

struct ReesPoset {
  GradedPoset poset;
  /// (element of P, element of Q) for each element; empty for an adjoined
  /// bottom or top.
  std::vector<std::optional<std::pair<ElementId, ElementId>>> pairs;

  std::optional<ElementId> find(ElementId p, ElementId q) const {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (pairs[i] && pairs[i]->first == p && pairs[i]->second == q)
        return static_cast<ElementId>(i);
    return std::nullopt;
  }
};

namespace detail {

// Pairs (a,b) with prank(a) >= rank_Q(b), ordered by a <= a', b <= b' and
// prank(a') - prank(a) >= rank_Q(b') - rank_Q(b). `prank` is the rank used in
// the inequality, `out_rank` the rank given to the pair. If `bounded`, a new
// bottom (id 0) and top (last id) are adjoined.
inline ReesPoset build_rees(const GradedPoset& p, const std::vector<ElementId>& p_elems,
                            const std::vector<int>& prank, const std::vector<int>& out_rank,
                            const GradedPoset& q, bool bounded) {
  std::vector<std::pair<ElementId, ElementId>> cells;
  for (std::size_t i = 0; i < p_elems.size(); ++i)
    for (ElementId b = 0; b < static_cast<ElementId>(q.size()); ++b)
      if (prank[i] >= q.rank(b)) cells.emplace_back(static_cast<ElementId>(i), b);

  const ElementId offset = bounded ? 1 : 0;
  const auto total = static_cast<ElementId>(cells.size()) + 2 * offset;
  std::vector<int> ranks(total);
  std::vector<std::string> labels(total);
  ReesPoset out;
  out.pairs.resize(total);
  int max_rank = 0;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    auto [i, b] = cells[k];
    const ElementId id = static_cast<ElementId>(k) + offset;
    ranks[id] = out_rank[i];
    max_rank = std::max(max_rank, ranks[id]);
    labels[id] = "(" + p.label(p_elems[i]) + "," + q.label(b) + ")";
    out.pairs[id] = std::make_pair(p_elems[i], b);
  }
  if (bounded) {
    ranks[0] = 0;
    labels[0] = "0^";
    ranks[total - 1] = max_rank + 1;
    labels[total - 1] = "1^";
  }
  auto leq = [&](ElementId x, ElementId y) {
    if (x == y) return true;
    if (bounded) {
      if (x == 0 || y == total - 1) return true;
      if (y == 0 || x == total - 1) return false;
    }
    auto [i, b] = cells[x - offset];
    auto [j, c] = cells[y - offset];
    return p.leq(p_elems[i], p_elems[j]) && q.leq(b, c) &&
           prank[j] - prank[i] >= q.rank(c) - q.rank(b);
  };
  out.poset = GradedPoset::from_order(std::move(ranks), leq, std::move(labels));
  return out;
}

}  // namespace detail

/// P*Q: pairs (a,b) with rank(a) >= rank(b), ranked by rank(a).
inline ReesPoset rees_product_full(const GradedPoset& p, const GradedPoset& q) {
  require_graded(p, "rees_product");
  require_graded(q, "rees_product");
  std::vector<ElementId> elems;
  for (ElementId a = 0; a < static_cast<ElementId>(p.size()); ++a) elems.push_back(a);
  std::vector<int> r(p.ranks().begin(), p.ranks().end());
  auto out = detail::build_rees(p, elems, r, r, q, false);
  require_graded(out.poset, "rees_product result");
  return out;
}

inline GradedPoset rees_product(const GradedPoset& p, const GradedPoset& q) {
  return rees_product_full(p, q).poset;
}

/// ((P - bottom) * Q) with a new bottom and top. Inside the product P - bottom
/// is ranked by rank_P - 1; the pair (x,b) gets rank rank_P(x). P needs a
/// bottom but not a top.
inline ReesPoset rees_bounded_full(const GradedPoset& p, const GradedPoset& q) {
  require_graded(p, "rees_bounded");
  require_graded(q, "rees_bounded");
  if (!p.bottom()) throw std::invalid_argument("rees_bounded: P has no bottom element");
  if (q.elements_of_rank(0).empty())
    throw std::invalid_argument("rees_bounded: Q has no rank-0 element to pair with atoms of P");
  std::vector<ElementId> elems;
  std::vector<int> prank, out_rank;
  for (ElementId a = 0; a < static_cast<ElementId>(p.size()); ++a) {
    if (a == *p.bottom()) continue;
    elems.push_back(a);
    prank.push_back(p.rank(a) - 1);
    out_rank.push_back(p.rank(a));
  }
  if (elems.empty()) throw std::invalid_argument("rees_bounded: P has only its bottom");
  auto out = detail::build_rees(p, elems, prank, out_rank, q, true);
  auto report = validate_graded(out.poset);
  if (!report.ok())
    throw std::logic_error("rees_bounded: result is not graded: " + report.problems.front());
  return out;
}

inline GradedPoset rees_bounded(const GradedPoset& p, const GradedPoset& q) {
  return rees_bounded_full(p, q).poset;
}

/// Rees(P - top, Q).
inline ReesPoset rees_minus_full(const GradedPoset& p, const GradedPoset& q) {
  if (!p.top()) throw std::invalid_argument("rees_minus: P has no top element");
  std::vector<ElementId> keep;
  for (ElementId a = 0; a < static_cast<ElementId>(p.size()); ++a)
    if (a != *p.top()) keep.push_back(a);
  auto truncated = induced_subposet(p, keep, 0);
  auto out = rees_bounded_full(truncated.poset, q);
  for (auto& pr : out.pairs)
    if (pr) pr->first = truncated.origin[pr->first];
  return out;
}

inline GradedPoset rees_minus(const GradedPoset& p, const GradedPoset& q) {
  return rees_minus_full(p, q).poset;
}

}  // namespace reesposet
