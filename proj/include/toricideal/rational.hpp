#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision integers and always-reduced rationals.
 *
 * Integer is GMP's mpz_class. Rat wraps mpq_class and keeps it canonical
 * (gcd(|num|, den) = 1, den > 0) after every operation, so equality is
 * structural. Avoid `auto` on mpz/mpq expressions: gmpxx returns
 * expression templates that dangle.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace toricideal {

using Integer = mpz_class;

class Rat {
 public:
  Rat() = default;
  Rat(int n) : value_(n) {}   // NOLINT(google-explicit-constructor)
  Rat(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(const Integer& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  explicit Rat(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Largest integer <= this.
  Integer floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
  }
  /// Smallest integer >= this.
  Integer ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
  }

  /// Always "p/q", with q = 1 for integers.
  std::string str() const { return num().get_str() + "/" + den().get_str(); }

  /// Accepts "p", "p/q", with optional sign on p. Throws std::invalid_argument.
  static Rat parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return s;
    };
    auto parse_int = [](std::string_view s, bool allow_sign) {
      if (s.empty()) throw std::invalid_argument("empty integer");
      std::size_t i = 0;
      if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
      if (i == s.size()) throw std::invalid_argument("bad integer '" + std::string(s) + "'");
      for (std::size_t k = i; k < s.size(); ++k) {
        if (s[k] < '0' || s[k] > '9') {
          throw std::invalid_argument("bad integer '" + std::string(s) + "'");
        }
      }
      std::string digits(s[0] == '+' ? s.substr(1) : s);
      return Integer(digits, 10);
    };
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text, true));
    Integer num = parse_int(trim(text.substr(0, slash)), true);
    Integer den = parse_int(trim(text.substr(slash + 1)), false);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rat(num, den);
  }

  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.value_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class value_{0};
};

inline Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd_int(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm_int(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Fits in a signed 64-bit value.
inline bool fits_int64(const Integer& a) {
  return mpz_sizeinbase(a.get_mpz_t(), 2) <= 62;
}

inline std::int64_t to_int64(const Integer& a) {
  if (!fits_int64(a)) throw std::overflow_error("integer does not fit in 64 bits");
  return static_cast<std::int64_t>(a.get_si());
}

}  // namespace toricideal
