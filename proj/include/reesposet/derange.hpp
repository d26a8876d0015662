#pragma once

#include "reesposet/integer.hpp"
#include "reesposet/report.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace reesposet {

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// D_n by D_n = (n-1)(D_{n-1} + D_{n-2}), D_0 = 1, D_1 = 0.
inline Integer derangement_count(int n) {
  if (n < 0) throw std::invalid_argument("derangement_count: n must be nonnegative");
  Integer a = 1, b = 0;  // D_0, D_1
  if (n == 0) return a;
  for (int k = 2; k <= n; ++k) {
    Integer c = Integer(k - 1) * (a + b);
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

namespace detail {

inline void require_square(const IntegerMatrix& a) {
  for (const auto& row : a)
    if (row.size() != a.size()) throw std::invalid_argument("permanent: matrix is not square");
}

inline Integer permanent_expand(const IntegerMatrix& a, int row, std::vector<char>& used) {
  const int n = static_cast<int>(a.size());
  if (row == n) return 1;
  Integer total = 0;
  for (int j = 0; j < n; ++j) {
    if (used[j] || a[row][j] == 0) continue;
    used[j] = 1;
    total += a[row][j] * permanent_expand(a, row + 1, used);
    used[j] = 0;
  }
  return total;
}

}  // namespace detail

/// Permanent as the sum over all permutations, expanded row by row.
inline Integer permanent_direct(const IntegerMatrix& a) {
  detail::require_square(a);
  std::vector<char> used(a.size(), 0);
  return detail::permanent_expand(a, 0, used);
}

/// Ryser's formula, walking column subsets in Gray-code order so each step
/// adds or removes one column from the row sums.
inline Integer permanent_ryser(const IntegerMatrix& a) {
  detail::require_square(a);
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  if (n > 30) throw std::invalid_argument("permanent_ryser: n too large");
  std::vector<Integer> row_sum(n, 0);
  Integer total = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int col = __builtin_ctzll(k);
    const std::uint64_t next = k ^ (k >> 1);
    const bool added = (next >> col) & 1;
    for (int i = 0; i < n; ++i) row_sum[i] += added ? a[i][col] : Integer(-a[i][col]);
    gray = next;
    Integer prod = 1;
    for (int i = 0; i < n && prod != 0; ++i) prod *= row_sum[i];
    const int size = __builtin_popcountll(gray);
    if ((n - size) % 2 == 0)
      total += prod;
    else
      total -= prod;
  }
  return total;
}

inline Integer permanent(const IntegerMatrix& a) {
  return a.size() <= 10 ? permanent_direct(a) : permanent_ryser(a);
}

/// n x n matrix with `diag` on the diagonal and `off` elsewhere.
inline IntegerMatrix constant_matrix(int n, int diag, int off) {
  IntegerMatrix a(n, std::vector<Integer>(n, Integer(off)));
  for (int i = 0; i < n; ++i) a[i][i] = diag;
  return a;
}

/// D_n^{+-} as the permanent of the matrix with 1 on the diagonal, 2 elsewhere.
inline Integer signed_derangement_count(int n) {
  if (n < 0) throw std::invalid_argument("signed_derangement_count: n must be nonnegative");
  return permanent(constant_matrix(n, 1, 2));
}

/// Counts signed permutations pi of [n] with no i such that pi_i = +i by
/// listing all 2^n n! of them.
inline Integer signed_derangement_oracle(int n) {
  if (n < 0 || n > 8) throw std::invalid_argument("signed_derangement_oracle: need 0 <= n <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::int64_t count = 0;
  do {
    for (std::uint32_t signs = 0; signs < (1u << n); ++signs) {
      bool fixed = false;
      for (int i = 0; i < n && !fixed; ++i) {
        const int v = (signs >> i & 1) ? -perm[i] : perm[i];
        fixed = v == i + 1;
      }
      count += fixed ? 0 : 1;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Enclosure [value - error, value + error] of a positive real number, with
/// exact rational endpoints.
struct CertifiedValue {
  Rational value;
  Rational error;
};

/// sum_{k=0}^{terms-1} x^k / k! for x in [-1, 0), with the alternating
/// series remainder bound |x|^terms / terms!.
inline CertifiedValue exp_negative(const Rational& x, int terms) {
  if (x >= 0 || x < -1) throw std::invalid_argument("exp_negative: need -1 <= x < 0");
  Rational sum = 0, term = 1;
  for (int k = 0; k < terms; ++k) {
    sum += term;
    term *= x / Rational(k + 1);
  }
  return {sum, abs(term)};
}

/// 1/sqrt(e) with error below 2^-200.
inline CertifiedValue inv_sqrt_e() { return exp_negative(Rational(-1, 2), 60); }
inline CertifiedValue inv_e() { return exp_negative(Rational(-1), 60); }

inline CertifiedValue scale(const CertifiedValue& c, const Integer& factor) {
  return {c.value * Rational(factor), c.error * Rational(factor)};
}

/// Nearest integer to the enclosed value, or nothing if the enclosure comes
/// within `margin` of a half-integer.
inline std::optional<Integer> certified_round(const CertifiedValue& c, const Rational& margin = 0) {
  Rational shifted = c.value + Rational(1, 2);
  Integer fl = numerator(shifted) / denominator(shifted);
  if (shifted < 0 && Rational(fl) != shifted) fl -= 1;
  Rational frac = shifted - Rational(fl);
  if (frac - c.error <= margin || frac + c.error >= Rational(1) - margin) return std::nullopt;
  return fl;
}

/// Decimal rendering with `digits` digits after the point (truncated).
inline std::string rational_to_decimal(const Rational& r, int digits) {
  Rational a = abs(r);
  Integer scaled = numerator(a) * pow(Integer(10), digits) / denominator(a);
  std::string s = scaled.str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return (r < 0 ? "-" : "") + s;
}

struct NearestIntegerRow {
  int n = 0;
  Integer exact;             // D_n^{+-}
  CertifiedValue power_form;  // 2^n n! / sqrt(e)
  std::optional<Integer> power_round;
  std::optional<CertifiedValue> shifted_form;  // 2^{n-1} (n-1)! / sqrt(e), n >= 1
  std::optional<Integer> shifted_round;
};

inline std::vector<NearestIntegerRow> nearest_integer_rows(int n_max) {
  std::vector<NearestIntegerRow> rows;
  const CertifiedValue c = inv_sqrt_e();
  for (int n = 0; n <= n_max; ++n) {
    NearestIntegerRow row;
    row.n = n;
    row.exact = signed_derangement_count(n);
    row.power_form = scale(c, pow2(n) * factorial(n));
    row.power_round = certified_round(row.power_form);
    if (n >= 1) {
      row.shifted_form = scale(c, pow2(n - 1) * factorial(n - 1));
      row.shifted_round = certified_round(*row.shifted_form);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Checks D_n = round(n!/e) for n >= 1, D_n^{+-} = round(2^n n!/sqrt e) for
/// n >= 0, and reports which index the form round(2^{n-1}(n-1)!/sqrt e)
/// matches. Every real value is enclosed with error below 1e-6 and shown to
/// lie away from a half-integer before rounding.
inline Report nearest_integer_checks(int n_max) {
  Report r;
  r.title = "nearest-integer formulas";
  const Rational tolerance(1, 1000000);
  const CertifiedValue e1 = inv_e();
  for (int n = 1; n <= n_max; ++n) {
    CertifiedValue v = scale(e1, factorial(n));
    auto rounded = certified_round(v);
    r.add("D_" + std::to_string(n) + " nearest to n!/e", v.error < tolerance && rounded &&
              *rounded == derangement_count(n),
          derangement_count(n).str(), rounded ? rounded->str() : "uncertified");
  }
  std::vector<int> index_shift_only;
  for (const auto& row : nearest_integer_rows(n_max)) {
    const std::string n = std::to_string(row.n);
    r.add("D+-_" + n + " nearest to 2^n n!/sqrt(e) = " + rational_to_decimal(row.power_form.value, 6),
          row.power_form.error < tolerance && row.power_round && *row.power_round == row.exact,
          row.exact.str(), row.power_round ? row.power_round->str() : "uncertified");
    if (row.n == 0) continue;
    const Integer previous = signed_derangement_count(row.n - 1);
    const bool certified = row.shifted_form->error < tolerance && row.shifted_round.has_value();
    r.add("2^(n-1) (n-1)!/sqrt(e) at n=" + n + " = " +
              rational_to_decimal(row.shifted_form->value, 6) + " rounds to D+-_" +
              std::to_string(row.n - 1),
          certified && *row.shifted_round == previous, previous.str(),
          row.shifted_round ? row.shifted_round->str() : "uncertified");
    if (certified && *row.shifted_round != row.exact) index_shift_only.push_back(row.n);
  }
  std::string listed;
  for (int n : index_shift_only) listed += (listed.empty() ? "" : ",") + std::to_string(n);
  r.add("2^(n-1) (n-1)!/sqrt(e) differs from D+-_n (indexing mismatch) at n in {" + listed + "}",
        true);
  return r;
}

}  // namespace reesposet
