#pragma once

#include "reesposet/integer.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace reesposet {

using ElementId = std::int32_t;
using Cover = std::pair<ElementId, ElementId>;
using Bitset = boost::dynamic_bitset<>;

/// Strictly increasing set of positive ranks, e.g. the rank set of a chain
/// strictly between the bottom and top of a bounded poset.
class RankSet {
 public:
  RankSet() = default;
  explicit RankSet(std::vector<int> ranks) : ranks_(std::move(ranks)) {
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
      if (ranks_[i] < 1) throw std::invalid_argument("rank set entries must be positive");
      if (i > 0 && ranks_[i] <= ranks_[i - 1])
        throw std::invalid_argument("rank set entries must be strictly increasing");
    }
  }

  /// Bit i of the mask stands for rank i+1.
  static RankSet from_mask(std::uint64_t mask) {
    std::vector<int> r;
    for (int i = 0; i < 64; ++i)
      if (mask & (std::uint64_t{1} << i)) r.push_back(i + 1);
    return RankSet(std::move(r));
  }

  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (int r : ranks_) {
      if (r > 64) throw std::out_of_range("rank set entry too large for a mask");
      m |= std::uint64_t{1} << (r - 1);
    }
    return m;
  }

  const std::vector<int>& values() const { return ranks_; }
  std::size_t size() const { return ranks_.size(); }
  bool empty() const { return ranks_.empty(); }
  int back() const { return ranks_.back(); }
  auto begin() const { return ranks_.begin(); }
  auto end() const { return ranks_.end(); }

  /// Appends a rank larger than every current entry.
  RankSet with(int r) const {
    auto v = ranks_;
    v.push_back(r);
    return RankSet(std::move(v));
  }

  /// {n+1-s : s in S}, the rank set of the same chain read in the dual poset.
  RankSet reversed(int n) const {
    std::vector<int> v;
    for (auto it = ranks_.rbegin(); it != ranks_.rend(); ++it) v.push_back(n + 1 - *it);
    return RankSet(std::move(v));
  }

  bool within(int n) const { return ranks_.empty() || ranks_.back() <= n; }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(ranks_[i]);
    }
    return s + "}";
  }

  friend bool operator==(const RankSet&, const RankSet&) = default;

 private:
  std::vector<int> ranks_;
};

namespace detail {
struct MobiusCache {
  std::mutex mutex;
  std::unordered_map<ElementId, std::vector<std::int64_t>> rows;
};
}  // namespace detail

/// A finite poset given by its Hasse covers and a rank function.
///
/// Elements are the integers 0..size()-1. The order relation is the
/// reflexive-transitive closure of the covers and is materialized as one
/// bitset per element in each direction. Gradedness is not enforced here;
/// see validate_graded().
class GradedPoset {
 public:
  GradedPoset() : cache_(std::make_shared<detail::MobiusCache>()) {}

  GradedPoset(std::vector<int> ranks, std::vector<Cover> covers,
              std::vector<std::string> labels = {})
      : rank_(std::move(ranks)), labels_(std::move(labels)),
        cache_(std::make_shared<detail::MobiusCache>()) {
    const auto n = static_cast<ElementId>(rank_.size());
    for (int r : rank_)
      if (r < 0) throw std::invalid_argument("ranks must be nonnegative");
    if (labels_.empty()) {
      labels_.reserve(rank_.size());
      for (ElementId i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
    }
    if (labels_.size() != rank_.size())
      throw std::invalid_argument("label count does not match element count");
    up_.assign(rank_.size(), {});
    down_.assign(rank_.size(), {});
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    for (auto [lo, hi] : covers) {
      if (lo < 0 || hi < 0 || lo >= n || hi >= n)
        throw std::invalid_argument("cover refers to unknown element");
      if (lo == hi) throw std::invalid_argument("cover from an element to itself");
      up_[lo].push_back(hi);
      down_[hi].push_back(lo);
    }
    covers_ = std::move(covers);
    build_closure();
    build_topological_order();
    find_bounds();
  }

  /// Builds the poset whose order is `leq` (assumed reflexive, transitive and
  /// antisymmetric) by transitive reduction.
  template <class Leq>
  static GradedPoset from_order(std::vector<int> ranks, Leq&& leq,
                                std::vector<std::string> labels = {}) {
    const std::size_t n = ranks.size();
    std::vector<Bitset> above(n, Bitset(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (x != y && leq(static_cast<ElementId>(x), static_cast<ElementId>(y))) above[x].set(y);
    std::vector<Cover> covers;
    for (std::size_t x = 0; x < n; ++x) {
      Bitset reachable_in_two(n);
      for (auto z = above[x].find_first(); z != Bitset::npos; z = above[x].find_next(z))
        reachable_in_two |= above[z];
      Bitset direct = above[x] - reachable_in_two;
      for (auto y = direct.find_first(); y != Bitset::npos; y = direct.find_next(y))
        covers.emplace_back(static_cast<ElementId>(x), static_cast<ElementId>(y));
    }
    return GradedPoset(std::move(ranks), std::move(covers), std::move(labels));
  }

  std::size_t size() const { return rank_.size(); }
  int rank(ElementId x) const { return rank_.at(x); }
  const std::vector<int>& ranks() const { return rank_; }
  int height() const {
    return rank_.empty() ? 0 : *std::max_element(rank_.begin(), rank_.end());
  }
  const std::string& label(ElementId x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<ElementId>& upper_covers(ElementId x) const { return up_.at(x); }
  const std::vector<ElementId>& lower_covers(ElementId x) const { return down_.at(x); }
  /// All covers, sorted lexicographically.
  const std::vector<Cover>& covers() const { return covers_; }

  bool leq(ElementId x, ElementId y) const { return up_set_.at(x).test(y); }
  bool less(ElementId x, ElementId y) const { return x != y && leq(x, y); }
  /// {y : x <= y}
  const Bitset& up_set(ElementId x) const { return up_set_.at(x); }
  /// {y : y <= x}
  const Bitset& down_set(ElementId x) const { return down_set_.at(x); }

  std::optional<ElementId> bottom() const { return bottom_; }
  std::optional<ElementId> top() const { return top_; }
  bool bounded() const { return bottom_.has_value() && top_.has_value(); }
  bool acyclic() const { return topo_.size() == size(); }

  /// Elements ordered by (rank, id) subject to the covers; empty if the
  /// covers contain a cycle.
  const std::vector<ElementId>& linear_extension() const { return topo_; }

  std::vector<ElementId> elements_of_rank(int r) const {
    std::vector<ElementId> out;
    for (ElementId x = 0; x < static_cast<ElementId>(size()); ++x)
      if (rank_[x] == r) out.push_back(x);
    return out;
  }

  void check_element(ElementId x) const {
    if (x < 0 || x >= static_cast<ElementId>(size()))
      throw std::out_of_range("unknown element id " + std::to_string(x));
  }

  /// Mobius function of the closed interval [x,y] by the recursion
  /// mu(x,x) = 1, sum_{x<=z<=y} mu(x,z) = 0. Rows mu(x,.) are memoized.
  std::int64_t mobius(ElementId x, ElementId y) const {
    check_element(x);
    check_element(y);
    if (!leq(x, y))
      throw std::invalid_argument("mobius: element " + std::to_string(x) +
                                  " is not below element " + std::to_string(y));
    return mobius_row(x)[y];
  }

  /// mu(bottom, top); requires a bounded poset.
  std::int64_t mobius() const {
    if (!bounded()) throw std::invalid_argument("mobius: poset has no bottom and top");
    return mobius(*bottom_, *top_);
  }

 private:
  const std::vector<std::int64_t>& mobius_row(ElementId x) const {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->rows.find(x); it != cache_->rows.end()) return it->second;
    if (!acyclic()) throw std::logic_error("mobius: covers contain a cycle");
    std::vector<std::int64_t> row(size(), 0);
    const Bitset& ux = up_set_[x];
    for (ElementId z : topo_) {
      if (!ux.test(z)) continue;
      if (z == x) {
        row[z] = 1;
        continue;
      }
      Bitset between = ux & down_set_[z];
      between.reset(z);
      std::int64_t s = 0;
      for (auto w = between.find_first(); w != Bitset::npos; w = between.find_next(w)) s += row[w];
      row[z] = -s;
    }
    return cache_->rows.emplace(x, std::move(row)).first->second;
  }

  void build_closure() {
    const std::size_t n = size();
    up_set_.assign(n, Bitset(n));
    down_set_.assign(n, Bitset(n));
    std::vector<ElementId> stack;
    for (std::size_t x = 0; x < n; ++x) {
      Bitset& seen = up_set_[x];
      seen.set(x);
      stack.assign(1, static_cast<ElementId>(x));
      while (!stack.empty()) {
        ElementId v = stack.back();
        stack.pop_back();
        for (ElementId w : up_[v])
          if (!seen.test(w)) {
            seen.set(w);
            stack.push_back(w);
          }
      }
    }
    for (std::size_t x = 0; x < n; ++x)
      for (auto y = up_set_[x].find_first(); y != Bitset::npos; y = up_set_[x].find_next(y))
        down_set_[y].set(x);
  }

  void build_topological_order() {
    const std::size_t n = size();
    std::vector<std::size_t> indegree(n);
    for (std::size_t x = 0; x < n; ++x) indegree[x] = down_[x].size();
    using Key = std::pair<int, ElementId>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
    for (std::size_t x = 0; x < n; ++x)
      if (indegree[x] == 0) ready.emplace(rank_[x], static_cast<ElementId>(x));
    topo_.clear();
    while (!ready.empty()) {
      auto [r, x] = ready.top();
      ready.pop();
      topo_.push_back(x);
      for (ElementId y : up_[x])
        if (--indegree[y] == 0) ready.emplace(rank_[y], y);
    }
  }

  void find_bounds() {
    const std::size_t n = size();
    bottom_.reset();
    top_.reset();
    if (n == 0 || !acyclic()) return;
    for (std::size_t x = 0; x < n; ++x) {
      if (up_set_[x].count() == n) bottom_ = static_cast<ElementId>(x);
      if (down_set_[x].count() == n) top_ = static_cast<ElementId>(x);
    }
  }

  std::vector<int> rank_;
  std::vector<std::string> labels_;
  std::vector<std::vector<ElementId>> up_, down_;
  std::vector<Cover> covers_;
  std::vector<Bitset> up_set_, down_set_;
  std::vector<ElementId> topo_;
  std::optional<ElementId> bottom_, top_;
  std::shared_ptr<detail::MobiusCache> cache_;
};

struct GradedReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Checks acyclicity, that every cover raises the rank by exactly one, that
/// minimal elements have rank 0 and that all maximal elements share the top
/// rank. Lists every violation.
inline GradedReport validate_graded(const GradedPoset& p) {
  GradedReport report;
  const auto n = static_cast<ElementId>(p.size());
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = x + 1; y < n; ++y)
      if (p.leq(x, y) && p.leq(y, x))
        report.problems.push_back("elements " + std::to_string(x) + " and " + std::to_string(y) +
                                  " lie on a cycle of covers");
  for (auto [lo, hi] : p.covers())
    if (p.rank(hi) != p.rank(lo) + 1)
      report.problems.push_back("cover " + std::to_string(lo) + " < " + std::to_string(hi) +
                                " goes from rank " + std::to_string(p.rank(lo)) + " to rank " +
                                std::to_string(p.rank(hi)));
  const int h = p.height();
  for (ElementId x = 0; x < n; ++x) {
    if (p.lower_covers(x).empty() && p.rank(x) != 0)
      report.problems.push_back("minimal element " + std::to_string(x) + " has rank " +
                                std::to_string(p.rank(x)));
    if (p.upper_covers(x).empty() && p.rank(x) != h)
      report.problems.push_back("maximal element " + std::to_string(x) + " has rank " +
                                std::to_string(p.rank(x)) + ", expected " + std::to_string(h));
  }
  return report;
}

inline void require_graded(const GradedPoset& p, const char* context) {
  auto report = validate_graded(p);
  if (!report.ok())
    throw std::invalid_argument(std::string(context) + ": poset is not graded: " +
                                report.problems.front());
}

inline void require_bounded(const GradedPoset& p, const char* context) {
  if (!p.bounded())
    throw std::invalid_argument(std::string(context) + ": poset needs a bottom and a top");
}

inline std::int64_t mobius(const GradedPoset& p, ElementId x, ElementId y) {
  return p.mobius(x, y);
}

/// mu(x,y) from the dual recursion mu(y,y) = 1, sum_{x<=z<=y} mu(z,y) = 0,
/// i.e. back substitution for one column of the inverse zeta matrix.
inline std::int64_t mobius_by_zeta_inversion(const GradedPoset& p, ElementId x, ElementId y) {
  p.check_element(x);
  p.check_element(y);
  if (!p.leq(x, y)) throw std::invalid_argument("mobius: x is not below y");
  const auto& order = p.linear_extension();
  if (order.size() != p.size()) throw std::logic_error("mobius: covers contain a cycle");
  std::vector<std::int64_t> col(p.size(), 0);
  Bitset interval = p.up_set(x) & p.down_set(y);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    ElementId z = *it;
    if (!interval.test(z)) continue;
    if (z == y) {
      col[z] = 1;
      continue;
    }
    Bitset above = interval & p.up_set(z);
    above.reset(z);
    std::int64_t s = 0;
    for (auto w = above.find_first(); w != Bitset::npos; w = above.find_next(w)) s += col[w];
    col[z] = -s;
  }
  return col[x];
}

/// Philip Hall's theorem: mu(x,y) = sum_k (-1)^k c_k, where c_k counts
/// chains x = z_0 < z_1 < ... < z_k = y.
inline Integer mobius_by_chain_count(const GradedPoset& p, ElementId x, ElementId y) {
  p.check_element(x);
  p.check_element(y);
  if (!p.leq(x, y)) throw std::invalid_argument("mobius: x is not below y");
  if (x == y) return 1;
  const auto& order = p.linear_extension();
  Bitset interval = p.up_set(x) & p.down_set(y);
  const std::size_t len = static_cast<std::size_t>(interval.count());
  // chains[z][k] = number of chains x = z_0 < ... < z_k = z
  std::vector<std::vector<Integer>> chains(p.size());
  chains[x].assign(len + 1, 0);
  chains[x][0] = 1;
  for (ElementId z : order) {
    if (!interval.test(z) || z == x) continue;
    chains[z].assign(len + 1, 0);
    Bitset below = interval & p.down_set(z);
    below.reset(z);
    for (auto w = below.find_first(); w != Bitset::npos; w = below.find_next(w))
      for (std::size_t k = 0; k < len; ++k)
        if (chains[w][k] != 0) chains[z][k + 1] += chains[w][k];
  }
  Integer mu = 0;
  for (std::size_t k = 1; k <= len; ++k) mu += (k % 2 == 0) ? chains[y][k] : -chains[y][k];
  return mu;
}

/// Number of chains bottom < x_1 < ... < x_k < top with rank(x_i) = s_i.
inline Integer flag_f(const GradedPoset& p, const RankSet& s) {
  require_bounded(p, "flag_f");
  const int top_rank = p.rank(*p.top());
  if (!s.within(top_rank - 1))
    throw std::invalid_argument("flag_f: rank set " + s.to_string() + " exceeds proper ranks 1.." +
                                std::to_string(top_rank - 1));
  std::vector<Integer> count(p.size(), 0);
  std::vector<ElementId> layer{*p.bottom()};
  count[*p.bottom()] = 1;
  auto advance = [&](const std::vector<ElementId>& next) {
    for (ElementId z : next) {
      Integer c = 0;
      for (ElementId w : layer)
        if (p.less(w, z)) c += count[w];
      count[z] = c;
    }
    layer = next;
  };
  for (int r : s) advance(p.elements_of_rank(r));
  advance({*p.top()});
  return count[*p.top()];
}

/// All flag numbers f_S for S a subset of {1..h-1}, indexed by RankSet::mask().
inline std::vector<Integer> flag_f_vector(const GradedPoset& p) {
  require_bounded(p, "flag_f_vector");
  const int n = p.rank(*p.top()) - 1;
  if (n < 0) return {1};
  if (n > 24) throw std::invalid_argument("flag_f_vector: rank too large");
  std::vector<Integer> out(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < out.size(); ++m) out[m] = flag_f(p, RankSet::from_mask(m));
  return out;
}

using ChainInPoset = std::vector<ElementId>;

/// Depth-first enumeration of the maximal chains bottom < ... < top, taking
/// upper covers in increasing id order. The callback sees each chain in turn.
template <class Fn>
void for_each_maximal_chain(const GradedPoset& p, Fn&& fn) {
  require_bounded(p, "maximal_chains");
  ChainInPoset chain{*p.bottom()};
  const ElementId top = *p.top();
  std::vector<std::vector<ElementId>> sorted_up(p.size());
  for (ElementId x = 0; x < static_cast<ElementId>(p.size()); ++x) {
    sorted_up[x] = p.upper_covers(x);
    std::sort(sorted_up[x].begin(), sorted_up[x].end());
  }
  std::function<void()> walk = [&] {
    ElementId x = chain.back();
    if (x == top) {
      fn(static_cast<const ChainInPoset&>(chain));
      return;
    }
    for (ElementId y : sorted_up[x]) {
      chain.push_back(y);
      walk();
      chain.pop_back();
    }
  };
  walk();
}

inline std::vector<ChainInPoset> maximal_chains(const GradedPoset& p) {
  std::vector<ChainInPoset> out;
  for_each_maximal_chain(p, [&](const ChainInPoset& c) { out.push_back(c); });
  return out;
}

/// Covers reversed and rank(x) replaced by height - rank(x). Ids and labels
/// are kept, so dual(dual(p)) reproduces p exactly.
inline GradedPoset dual(const GradedPoset& p) {
  const int h = p.height();
  std::vector<int> ranks;
  ranks.reserve(p.size());
  for (int r : p.ranks()) ranks.push_back(h - r);
  std::vector<Cover> covers;
  covers.reserve(p.covers().size());
  for (auto [lo, hi] : p.covers()) covers.emplace_back(hi, lo);
  return GradedPoset(std::move(ranks), std::move(covers), p.labels());
}

struct Subposet {
  GradedPoset poset;
  std::vector<ElementId> origin;  // new id -> id in the parent poset
};

/// Subposet induced on `elements` (any order; duplicates ignored), with ranks
/// lowered by `rank_shift`. New ids follow increasing parent id.
inline Subposet induced_subposet(const GradedPoset& p, std::vector<ElementId> elements,
                                 int rank_shift) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<int> ranks;
  std::vector<std::string> labels;
  for (ElementId x : elements) {
    p.check_element(x);
    ranks.push_back(p.rank(x) - rank_shift);
    labels.push_back(p.label(x));
  }
  auto sub = GradedPoset::from_order(
      std::move(ranks), [&](ElementId a, ElementId b) { return p.leq(elements[a], elements[b]); },
      std::move(labels));
  return Subposet{std::move(sub), std::move(elements)};
}

inline Subposet closed_interval_with_origin(const GradedPoset& p, ElementId x, ElementId y) {
  p.check_element(x);
  p.check_element(y);
  if (!p.leq(x, y)) throw std::invalid_argument("closed_interval: x is not below y");
  Bitset in = p.up_set(x) & p.down_set(y);
  std::vector<ElementId> elems;
  for (auto z = in.find_first(); z != Bitset::npos; z = in.find_next(z))
    elems.push_back(static_cast<ElementId>(z));
  return induced_subposet(p, std::move(elems), p.rank(x));
}

inline GradedPoset closed_interval(const GradedPoset& p, ElementId x, ElementId y) {
  return closed_interval_with_origin(p, x, y).poset;
}

/// The open interval (x,y); its minimal elements get rank 0.
inline GradedPoset open_interval(const GradedPoset& p, ElementId x, ElementId y) {
  p.check_element(x);
  p.check_element(y);
  if (!p.leq(x, y)) throw std::invalid_argument("open_interval: x is not below y");
  Bitset in = p.up_set(x) & p.down_set(y);
  in.reset(x);
  in.reset(y);
  std::vector<ElementId> elems;
  for (auto z = in.find_first(); z != Bitset::npos; z = in.find_next(z))
    elems.push_back(static_cast<ElementId>(z));
  return induced_subposet(p, std::move(elems), p.rank(x) + 1).poset;
}

}  // namespace reesposet
