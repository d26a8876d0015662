#pragma once

#include "reesposet/integer.hpp"

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace reesposet {

/// Polynomial in t with exact integer coefficients, stored low to high with
/// no trailing zeros (the zero polynomial has no coefficients).
class TPoly {
 public:
  TPoly() = default;
  TPoly(int c) : TPoly(Integer(c)) {}
  TPoly(Integer c) {
    coeffs_.push_back(std::move(c));
    trim();
  }
  TPoly(std::initializer_list<int> coeffs) {
    for (int c : coeffs) coeffs_.emplace_back(c);
    trim();
  }
  explicit TPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static TPoly t() { return TPoly({0, 1}); }

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Integer coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Integer(0);
  }

  Integer eval(const Integer& t) const {
    Integer r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * t + *it;
    return r;
  }

  TPoly& operator+=(const TPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  TPoly& operator-=(const TPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator-(const TPoly& a) { return TPoly() - a; }
  friend TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return TPoly(std::move(c));
  }
  TPoly& operator*=(const TPoly& o) { return *this = *this * o; }

  /// Exact division by the monic polynomial 1 + t; returns false and leaves
  /// `quotient` unspecified if there is a remainder.
  bool divide_by_one_plus_t(TPoly& quotient) const {
    if (is_zero()) {
      quotient = {};
      return true;
    }
    // synthetic division by (t + 1), highest degree first
    std::vector<Integer> q(coeffs_.size() - 1);
    Integer carry = 0;
    for (int i = degree(); i >= 1; --i) {
      carry = coeffs_[i] - carry;
      q[i - 1] = carry;
    }
    Integer remainder = coeffs_[0] - carry;
    quotient = TPoly(std::move(q));
    return remainder == 0;
  }

  friend bool operator==(const TPoly& a, const TPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      const Integer& c = coeffs_[i];
      if (c == 0) continue;
      Integer mag = c < 0 ? Integer(-c) : c;
      if (s.empty())
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      if (mag != 1 || i == 0) s += mag.str();
      if (i >= 1) s += "t";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Integer> coeffs_;
};

/// [k] = 1 + t + ... + t^{k-1}; [0] = 0.
inline TPoly t_analogue(int k) {
  if (k < 0) throw std::invalid_argument("t_analogue of a negative number");
  return TPoly(std::vector<Integer>(static_cast<std::size_t>(k), Integer(1)));
}

}  // namespace reesposet
