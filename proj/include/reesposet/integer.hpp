#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace reesposet {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// n! / (parts[0]! parts[1]! ...). The parts must sum to n.
inline Integer multinomial(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial with negative part");
    n += p;
  }
  Integer r = factorial(n);
  for (int p : parts) r /= factorial(p);
  return r;
}

inline Integer pow2(int k) {
  if (k < 0) throw std::invalid_argument("negative power of two");
  Integer r = 1;
  r <<= k;
  return r;
}

inline Integer sign_power(int k) { return (k % 2 == 0) ? Integer(1) : Integer(-1); }

inline std::int64_t to_int64(const Integer& v) {
  if (v > Integer(INT64_MAX) || v < Integer(INT64_MIN))
    throw std::overflow_error("integer does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

inline std::string to_string(const Integer& v) { return v.str(); }

}  // namespace reesposet
