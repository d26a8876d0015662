#pragma once

#include "reesposet/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace reesposet {

struct Triplet {
  int row = 0;
  int col = 0;
  std::int64_t value = 0;
  friend bool operator==(const Triplet&, const Triplet&) = default;
  friend auto operator<=>(const Triplet&, const Triplet&) = default;
};

/// Integer matrix stored by columns; each column is sorted by row with no
/// zero entries.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  /// Adds `value` to entry (row, col).
  void add(int row, int col, std::int64_t value) {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
      throw std::out_of_range("SparseIntMatrix: entry out of range");
    auto& c = data_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row,
                               [](const auto& e, int r) { return e.first < r; });
    if (it != c.end() && it->first == row) {
      it->second += value;
      if (it->second == 0) c.erase(it);
    } else if (value != 0) {
      c.insert(it, {row, value});
    }
  }

  std::int64_t at(int row, int col) const {
    const auto& c = data_.at(col);
    auto it = std::lower_bound(c.begin(), c.end(), row,
                               [](const auto& e, int r) { return e.first < r; });
    return it != c.end() && it->first == row ? it->second : 0;
  }

  const std::vector<std::pair<int, std::int64_t>>& column(int col) const { return data_.at(col); }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : data_) n += c.size();
    return n;
  }

  /// Entries sorted by (row, col).
  std::vector<Triplet> triplets() const {
    std::vector<Triplet> t;
    for (int c = 0; c < cols_; ++c)
      for (auto [r, v] : data_[c]) t.push_back({r, c, v});
    std::sort(t.begin(), t.end());
    return t;
  }

  /// this * other
  SparseIntMatrix multiply(const SparseIntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("SparseIntMatrix: shape mismatch");
    SparseIntMatrix out(rows_, other.cols_);
    for (int c = 0; c < other.cols_; ++c) {
      std::map<int, std::int64_t> acc;
      for (auto [k, v] : other.data_[c])
        for (auto [r, w] : data_[k]) acc[r] += v * w;
      for (auto [r, v] : acc)
        if (v != 0) out.data_[c].push_back({r, v});
    }
    return out;
  }

  /// Product with a column vector.
  std::vector<Integer> apply(const std::vector<Integer>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("SparseIntMatrix: vector size");
    std::vector<Integer> y(rows_, 0);
    for (int c = 0; c < cols_; ++c)
      if (x[c] != 0)
        for (auto [r, v] : data_[c]) y[r] += x[c] * v;
    return y;
  }

  bool is_zero() const { return nonzeros() == 0; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> data_;
};

using DenseMatrix = std::vector<std::vector<Integer>>;

inline DenseMatrix to_dense(const SparseIntMatrix& m) {
  DenseMatrix d(m.rows(), std::vector<Integer>(m.cols(), 0));
  for (int c = 0; c < m.cols(); ++c)
    for (auto [r, v] : m.column(c)) d[r][c] = v;
  return d;
}

inline DenseMatrix identity_matrix(int n) {
  DenseMatrix d(n, std::vector<Integer>(n, 0));
  for (int i = 0; i < n; ++i) d[i][i] = 1;
  return d;
}

inline DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  DenseMatrix out(n, std::vector<Integer>(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("multiply: shape mismatch");
    for (std::size_t l = 0; l < k; ++l)
      if (a[i][l] != 0)
        for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
  }
  return out;
}

/// U * A * V = D with D diagonal, d_1 | d_2 | ..., d_i >= 0. `diagonal` has
/// min(rows, cols) entries; U and V are filled only when requested.
struct SNFResult {
  std::vector<Integer> diagonal;
  std::size_t rank = 0;
  std::optional<DenseMatrix> u;
  std::optional<DenseMatrix> v;

  /// Diagonal entries greater than one.
  std::vector<Integer> torsion() const {
    std::vector<Integer> t;
    for (const auto& d : diagonal)
      if (d > 1) t.push_back(d);
    return t;
  }
};

/// Smith normal form by repeated pivoting on the entry of least absolute
/// value.
inline SNFResult smith_normal_form(DenseMatrix a, bool transforms = false) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (const auto& r : a)
    if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("smith_normal_form: ragged matrix");
  DenseMatrix u, v;
  if (transforms) {
    u = identity_matrix(rows);
    v = identity_matrix(cols);
  }
  auto swap_rows = [&](int i, int j) {
    std::swap(a[i], a[j]);
    if (transforms) std::swap(u[i], u[j]);
  };
  auto swap_cols = [&](int i, int j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    if (transforms)
      for (auto& r : v) std::swap(r[i], r[j]);
  };
  // row_i -= q * row_t
  auto sub_row = [&](int i, int t, const Integer& q) {
    for (int j = 0; j < cols; ++j)
      if (a[t][j] != 0) a[i][j] -= q * a[t][j];
    if (transforms)
      for (int j = 0; j < rows; ++j)
        if (u[t][j] != 0) u[i][j] -= q * u[t][j];
  };
  auto sub_col = [&](int j, int t, const Integer& q) {
    for (int i = 0; i < rows; ++i)
      if (a[i][t] != 0) a[i][j] -= q * a[i][t];
    if (transforms)
      for (int i = 0; i < cols; ++i)
        if (v[i][t] != 0) v[i][j] -= q * v[i][t];
  };

  // nearest-integer quotient keeps remainders at most |p|/2
  auto quotient = [](const Integer& x, const Integer& p) {
    Integer q = x / p;
    Integer r = x - q * p;
    if (2 * abs(r) > abs(p)) q += (r > 0) == (p > 0) ? 1 : -1;
    return q;
  };

  const int steps = std::min(rows, cols);
  SNFResult res;
  for (int t = 0; t < steps; ++t) {
    for (;;) {
      int pi = -1, pj = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi < 0 || abs(a[i][j]) < abs(a[pi][pj]))) pi = i, pj = j;
      if (pi < 0) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clear = true;
      for (int i = t + 1; i < rows; ++i)
        if (a[i][t] != 0) {
          sub_row(i, t, quotient(a[i][t], a[t][t]));
          clear = clear && a[i][t] == 0;
        }
      for (int j = t + 1; j < cols; ++j)
        if (a[t][j] != 0) {
          sub_col(j, t, quotient(a[t][j], a[t][t]));
          clear = clear && a[t][j] == 0;
        }
      if (!clear) continue;
      // the pivot must divide the rest of the matrix
      int bad = -1;
      for (int i = t + 1; i < rows && bad < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      sub_row(t, bad, Integer(-1));
    }
    if (a[t][t] == 0) break;
    if (a[t][t] < 0) {
      for (int j = 0; j < cols; ++j) a[t][j] = -a[t][j];
      if (transforms)
        for (int j = 0; j < rows; ++j) u[t][j] = -u[t][j];
    }
  }
  for (int t = 0; t < steps; ++t) {
    res.diagonal.push_back(a[t][t]);
    if (a[t][t] != 0) ++res.rank;
  }
  if (transforms) {
    res.u = std::move(u);
    res.v = std::move(v);
  }
  return res;
}

/// Nonzero invariant factors of a sparse matrix. Unit pivots are eliminated
/// sparsely (each leaves a factor 1); whatever remains is finished densely.
inline std::vector<Integer> smith_invariants(const SparseIntMatrix& m) {
  std::vector<std::map<int, std::int64_t>> row(m.rows());
  std::vector<std::set<int>> col_rows(m.cols());
  for (int c = 0; c < m.cols(); ++c)
    for (auto [r, v] : m.column(c)) {
      row[r][c] = v;
      col_rows[c].insert(r);
    }
  std::set<std::pair<std::size_t, int>> by_length;
  for (int r = 0; r < m.rows(); ++r)
    if (!row[r].empty()) by_length.insert({row[r].size(), r});
  auto set_row_length = [&](int r, std::size_t old_len) {
    by_length.erase({old_len, r});
    if (!row[r].empty()) by_length.insert({row[r].size(), r});
  };

  std::size_t ones = 0;
  for (;;) {
    int pr = -1, pc = -1;
    std::size_t best = SIZE_MAX;
    for (auto [len, r] : by_length) {
      for (auto [c, v] : row[r])
        if ((v == 1 || v == -1) && col_rows[c].size() < best) {
          best = col_rows[c].size();
          pr = r;
          pc = c;
        }
      if (pr >= 0 && len > 1) break;
    }
    if (pr < 0) break;
    const std::int64_t p = row[pr].at(pc);
    const auto pivot_row = row[pr];
    std::vector<int> targets(col_rows[pc].begin(), col_rows[pc].end());
    for (int i : targets) {
      if (i == pr) continue;
      const std::size_t old_len = row[i].size();
      const std::int64_t f = row[i].at(pc) * p;
      for (auto [c, v] : pivot_row) {
        std::int64_t prod, next;
        if (__builtin_mul_overflow(f, v, &prod) || __builtin_sub_overflow(row[i][c], prod, &next))
          throw std::overflow_error("smith_invariants: 64-bit overflow in sparse elimination");
        if (next == 0) {
          row[i].erase(c);
          col_rows[c].erase(i);
        } else {
          row[i][c] = next;
          col_rows[c].insert(i);
        }
      }
      set_row_length(i, old_len);
    }
    for (auto [c, v] : pivot_row) col_rows[c].erase(pr);
    const std::size_t old_len = row[pr].size();
    row[pr].clear();
    set_row_length(pr, old_len);
    ++ones;
  }

  std::vector<int> live_rows, live_cols;
  for (int r = 0; r < m.rows(); ++r)
    if (!row[r].empty()) live_rows.push_back(r);
  for (int c = 0; c < m.cols(); ++c)
    if (!col_rows[c].empty()) live_cols.push_back(c);
  std::vector<Integer> out(ones, Integer(1));
  if (!live_rows.empty()) {
    DenseMatrix d(live_rows.size(), std::vector<Integer>(live_cols.size(), 0));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (auto [c, v] : row[live_rows[i]])
        d[i][std::lower_bound(live_cols.begin(), live_cols.end(), c) - live_cols.begin()] = v;
    for (auto& x : smith_normal_form(std::move(d)).diagonal)
      if (x != 0) out.push_back(x);
  }
  return out;
}

namespace detail {

inline Integer row_content(const std::map<int, Integer>& r) {
  Integer g = 0;
  for (const auto& [c, v] : r) g = gcd(g, abs(v));
  return g;
}

/// Fraction-free reduced row echelon form: each pivot column has a single
/// nonzero entry, in its pivot row. Returns (pivot column, row) pairs.
inline std::vector<std::pair<int, std::map<int, Integer>>> integer_rref(const SparseIntMatrix& m) {
  std::vector<std::map<int, Integer>> rows(m.rows());
  for (int c = 0; c < m.cols(); ++c)
    for (auto [r, v] : m.column(c)) rows[r][c] = v;
  std::vector<std::pair<int, std::map<int, Integer>>> pivots;
  std::vector<char> used(m.rows(), 0);
  std::vector<std::vector<int>> rows_with(m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : rows[r]) rows_with[c].push_back(r);
  for (int c = 0; c < m.cols(); ++c) {
    int pr = -1;
    for (int r : rows_with[c])
      if (!used[r] && rows[r].count(c) && (pr < 0 || rows[r].size() < rows[pr].size())) pr = r;
    if (pr < 0) continue;
    used[pr] = 1;
    const auto prow = rows[pr];
    const Integer& p = prow.at(c);
    auto eliminate = [&](std::map<int, Integer>& target) {
      auto it = target.find(c);
      if (it == target.end()) return false;
      const Integer f = it->second;
      for (auto& [k, v] : target) v *= p;
      for (const auto& [k, v] : prow) {
        Integer& slot = target[k];
        slot -= f * v;
      }
      for (auto jt = target.begin(); jt != target.end();) jt = jt->second == 0 ? target.erase(jt) : std::next(jt);
      Integer g = row_content(target);
      if (g > 1)
        for (auto& [k, v] : target) v /= g;
      return true;
    };
    for (int r : rows_with[c])
      if (r != pr && !used[r] && eliminate(rows[r]))
        for (const auto& [k, v] : rows[r]) rows_with[k].push_back(r);
    for (auto& [pc, prw] : pivots) eliminate(prw);
    pivots.push_back({c, prow});
  }
  return pivots;
}

}  // namespace detail

/// Rank over the rationals, by fraction-free elimination.
inline std::size_t rational_rank(const SparseIntMatrix& m) { return detail::integer_rref(m).size(); }

/// Basis of the rational null space of m, each vector scaled to a primitive
/// integer vector. When the kernel has rank one the vector generates the
/// integer kernel.
inline std::vector<std::vector<Integer>> integer_kernel(const SparseIntMatrix& m) {
  auto pivots = detail::integer_rref(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (const auto& [c, r] : pivots) is_pivot[c] = 1;
  std::vector<std::vector<Integer>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Integer scale = 1;
    for (const auto& [c, r] : pivots)
      if (r.count(f)) scale = lcm(scale, abs(r.at(c)));
    std::vector<Integer> x(m.cols(), 0);
    x[f] = scale;
    for (const auto& [c, r] : pivots)
      if (auto it = r.find(f); it != r.end()) x[c] = -it->second * scale / r.at(c);
    Integer g = 0;
    for (const auto& v : x) g = gcd(g, abs(v));
    for (auto& v : x) v /= g;
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace reesposet
