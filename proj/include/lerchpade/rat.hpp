#pragma once

// Exact rational scalars. Every value is kept in lowest terms with a
// positive denominator; arithmetic never rounds.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "lerchpade/errors.hpp"

namespace lerchpade {

using Int = mpz_class;

class Rat {
 public:
  Rat() = default;

  template <std::integral I>
  Rat(I v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rat(const Int& v) : q_(v) {}  // NOLINT(google-explicit-constructor)

  Rat(const Int& num, const Int& den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Accepts "n" or "n/d" with optional sign, decimal digits only.
  static Rat parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    auto parse_int = [](std::string_view s) {
      if (s.empty()) throw InvalidInput("empty integer in rational literal");
      std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
      if (start == s.size()) throw InvalidInput("bad integer literal '" + std::string(s) + "'");
      for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
          throw InvalidInput("bad integer literal '" + std::string(s) + "'");
      }
      std::string digits(s.front() == '+' ? s.substr(1) : s);
      return Int(digits, 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    return Rat(parse_int(trim(text.substr(0, slash))), parse_int(trim(text.substr(slash + 1))));
  }

  const mpq_class& mpq() const { return q_; }
  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Serialized as "num/den", denominators of 1 included.
  std::string str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

  /// Shortest form: "n" for integers, "n/d" otherwise.
  std::string short_str() const { return q_.get_str(); }

  double to_double() const { return q_.get_d(); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw InvalidInput("division by zero rational");
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.short_str(); }

 private:
  mpq_class q_;
};

inline bool is_zero(const Rat& r) { return r.is_zero(); }

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

/// r^e for any integer e; negative exponents require r != 0.
inline Rat pow(const Rat& r, long e) {
  if (e < 0) {
    if (r.is_zero()) throw InvalidInput("zero raised to a negative power");
    return Rat(1) / pow(r, -e);
  }
  Int n, d;
  mpz_pow_ui(n.get_mpz_t(), r.num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), r.den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rat(n, d);
}

inline Int factorial(unsigned long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// (-1)^e as a Rat.
inline Rat sign_power(long e) { return (e % 2 == 0) ? Rat(1) : Rat(-1); }

}  // namespace lerchpade
