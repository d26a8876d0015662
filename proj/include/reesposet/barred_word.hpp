#pragma once

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace reesposet {

/// One letter of a barred (signed) word: a signed integer and a bar flag.
struct Letter {
  int value = 0;
  bool bar = false;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using BarredWord = std::vector<Letter>;

/// Text form: letters separated by spaces, a barred letter written |x|,
/// e.g. "0 -3 |-4| 2 |-1| 5".
inline std::string format_barred_word(const BarredWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    std::string v = std::to_string(w[i].value);
    s += w[i].bar ? "|" + v + "|" : v;
  }
  return s;
}

inline BarredWord parse_barred_word(const std::string& text) {
  BarredWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    Letter l;
    if (tok.size() >= 2 && tok.front() == '|' && tok.back() == '|') {
      l.bar = true;
      tok = tok.substr(1, tok.size() - 2);
    }
    std::size_t used = 0;
    try {
      l.value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size())
      throw std::invalid_argument("cannot parse letter \"" + tok + "\" in barred word");
    w.push_back(l);
  }
  return w;
}

/// Double augmented barred signed permutation 0 pi_1 ... pi_n n+1. Inner
/// letters have magnitudes forming a permutation of 1..n and may carry a
/// sign and a bar; the end letters carry neither.
class BarredSignedPermutation {
 public:
  BarredSignedPermutation() = default;
  explicit BarredSignedPermutation(BarredWord letters) : letters_(std::move(letters)) { validate(); }

  /// Builds 0 pi_1 ... pi_n n+1 from the inner letters.
  static BarredSignedPermutation from_inner(const BarredWord& inner) {
    BarredWord w{{0, false}};
    w.insert(w.end(), inner.begin(), inner.end());
    w.push_back({static_cast<int>(inner.size()) + 1, false});
    return BarredSignedPermutation(std::move(w));
  }

  /// Accepts the full augmented word, or just the inner letters.
  static BarredSignedPermutation parse(const std::string& text) {
    BarredWord w = parse_barred_word(text);
    const int n = static_cast<int>(w.size()) - 2;
    if (n >= 1 && w.front() == Letter{0, false} && w.back() == Letter{n + 1, false})
      return BarredSignedPermutation(std::move(w));
    return from_inner(w);
  }

  int n() const { return static_cast<int>(letters_.size()) - 2; }
  const BarredWord& letters() const { return letters_; }
  const Letter& operator[](int i) const { return letters_.at(i); }
  std::string to_string() const { return format_barred_word(letters_); }

  int bar_count() const {
    int c = 0;
    for (const auto& l : letters_) c += l.bar ? 1 : 0;
    return c;
  }

  friend bool operator==(const BarredSignedPermutation&, const BarredSignedPermutation&) = default;

  /// Total order on falling words: at the first inner position where the bar
  /// patterns differ the barred word is larger; with equal bar patterns the
  /// signed values are compared lexicographically.
  friend bool operator<(const BarredSignedPermutation& a, const BarredSignedPermutation& b) {
    const int n = std::min(a.n(), b.n());
    if (a.n() != b.n()) return a.n() < b.n();
    for (int i = 1; i <= n; ++i)
      if (a[i].bar != b[i].bar) return b[i].bar;
    for (int i = 1; i <= n; ++i)
      if (a[i].value != b[i].value) return a[i].value < b[i].value;
    return false;
  }

 private:
  void validate() const {
    const int n = static_cast<int>(letters_.size()) - 2;
    if (n < 0) throw std::invalid_argument("barred signed permutation too short");
    if (letters_.front() != Letter{0, false})
      throw std::invalid_argument("barred signed permutation must start with unbarred 0");
    if (letters_.back() != Letter{n + 1, false})
      throw std::invalid_argument("barred signed permutation must end with unbarred n+1");
    std::vector<char> seen(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
      const int a = std::abs(letters_[i].value);
      if (a < 1 || a > n || seen[a])
        throw std::invalid_argument("inner letters of " + format_barred_word(letters_) +
                                    " are not a signed permutation of 1.." + std::to_string(n));
      seen[a] = 1;
    }
  }

  BarredWord letters_;
};

}  // namespace reesposet
