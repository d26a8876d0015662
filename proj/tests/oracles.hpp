#pragma once

// Brute-force reference computations used as test oracles. They take the
// order as a plain predicate and never touch GradedPoset internals.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Leq = std::function<bool(int, int)>;

/// mu(x,y) from the definition, memoized over the interval.
inline std::int64_t mobius(int n, const Leq& leq, int x, int y) {
  std::map<int, std::int64_t> memo;
  std::function<std::int64_t(int)> mu = [&](int z) -> std::int64_t {
    if (z == x) return 1;
    if (auto it = memo.find(z); it != memo.end()) return it->second;
    std::int64_t s = 0;
    for (int w = 0; w < n; ++w)
      if (w != z && leq(x, w) && leq(w, z)) s += mu(w);
    return memo[z] = -s;
  };
  return mu(y);
}

/// Chains bottom < x_1 < ... < x_k < top with rank(x_i) = ranks[i], by
/// plain recursion over all elements.
inline std::int64_t chain_count(int n, const Leq& leq, const std::vector<int>& rank, int bottom,
                                int top, const std::vector<int>& ranks) {
  std::function<std::int64_t(int, std::size_t)> go = [&](int last, std::size_t k) -> std::int64_t {
    if (k == ranks.size()) return (last != top && leq(last, top)) ? 1 : 0;
    std::int64_t c = 0;
    for (int z = 0; z < n; ++z)
      if (rank[z] == ranks[k] && z != last && leq(last, z) && z != top) c += go(z, k + 1);
    return c;
  };
  return go(bottom, 0);
}

inline std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Permanent of a small integer matrix by summing over all permutations.
inline std::int64_t permanent(const std::vector<std::vector<std::int64_t>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::int64_t total = 0;
  do {
    std::int64_t prod = 1;
    for (int i = 0; i < n; ++i) prod *= a[i][perm[i]];
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Permanent of the n x n matrix with 1 on the diagonal and 2 elsewhere.
inline std::int64_t signed_derangement_permanent(int n) {
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 2));
  for (int i = 0; i < n; ++i) a[i][i] = 1;
  return permanent(a);
}

}  // namespace oracle
