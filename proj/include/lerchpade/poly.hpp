#pragma once

// Dense univariate polynomials over an exact coefficient ring. The
// coefficient type is normally Rat, but Poly<Poly<Rat>> (a polynomial in t
// whose coefficients are polynomials in z) and Poly<EpsPoly> are used for
// the difference quotients and the collision tests.

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lerchpade/errors.hpp"
#include "lerchpade/rat.hpp"

namespace lerchpade {

enum class Var { t, z, eps, x };

inline const char* var_name(Var v) {
  switch (v) {
    case Var::t: return "t";
    case Var::z: return "z";
    case Var::eps: return "eps";
    case Var::x: return "x";
  }
  return "?";
}

inline constexpr int kZeroDegree = -1;

namespace detail {
// Unqualified call so that is_zero overloads for later coefficient types
// are found by argument-dependent lookup.
template <class T>
bool coeff_is_zero(const T& a) { return is_zero(a); }
}  // namespace detail

template <class C>
class Poly {
 public:
  using coeff_type = C;

  Poly() = default;
  explicit Poly(Var v) : var_(v) {}
  Poly(C constant, Var v = Var::t) : var_(v) {  // NOLINT(google-explicit-constructor)
    c_.push_back(std::move(constant));
    trim();
  }
  Poly(std::vector<C> coeffs, Var v) : c_(std::move(coeffs)), var_(v) { trim(); }

  static Poly monomial(C coeff, int k, Var v = Var::t) {
    std::vector<C> c(static_cast<std::size_t>(k) + 1, zero_like(coeff));
    c[static_cast<std::size_t>(k)] = std::move(coeff);
    return Poly(std::move(c), v);
  }

  /// The polynomial (var - root).
  static Poly linear(const C& root, Var v = Var::t) {
    return Poly(std::vector<C>{-root, one_like(root)}, v);
  }

  Var var() const { return var_; }
  Poly with_var(Var v) const { Poly p = *this; p.var_ = v; return p; }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<C>& coeffs() const { return c_; }

  /// Coefficient of var^k; zero outside the stored range.
  C coeff(int k) const {
    if (k < 0 || k > degree()) return C{};
    return c_[static_cast<std::size_t>(k)];
  }
  const C& operator[](std::size_t k) const { return c_[k]; }

  const C& leading() const {
    if (c_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
    return c_.back();
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_from(o));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_from(o));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.var_);
    std::vector<C> r(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0] * b.c_[0]));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r), a.var_);
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Scale by anything a coefficient can be multiplied with (Rat, C).
  template <class S>
  Poly scaled(const S& s) const {
    Poly r = *this;
    for (auto& a : r.c_) a = a * s;
    r.trim();
    return r;
  }

  /// Multiply by var^k.
  Poly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<C> r(static_cast<std::size_t>(k), zero_like(c_[0]));
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(std::move(r), var_);
  }

  /// Horner evaluation; the result type follows C * S.
  template <class S>
  auto eval(const S& at) const {
    using R = decltype(std::declval<C>() * std::declval<S>());
    if (c_.empty()) return R{};
    R acc = R(c_.back());
    for (int k = degree() - 1; k >= 0; --k) acc = acc * at + R(c_[static_cast<std::size_t>(k)]);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(var_);
    std::vector<C> r;
    r.reserve(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) r.push_back(c_[k] * Rat(static_cast<long>(k)));
    return Poly(std::move(r), var_);
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
      const C& a = p.c_[static_cast<std::size_t>(k)];
      if (detail::coeff_is_zero(a)) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << a << ")";
      if (k >= 1) os << "*" << var_name(p.var_);
      if (k >= 2) os << "^" << k;
    }
    return os;
  }

 private:
  static C zero_like(const C& sample) { return sample * Rat(0); }
  static C one_like(const C& sample) { return zero_like(sample) + C(Rat(1)); }
  static C zero_from(const Poly& p) { return p.c_.empty() ? C{} : zero_like(p.c_[0]); }

  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
  Var var_ = Var::t;
};

template <class C>
bool is_zero(const Poly<C>& p) { return p.is_zero(); }

using RatPoly = Poly<Rat>;

template <class C>
Poly<C> pow(const Poly<C>& base, unsigned e) {
  Poly<C> result(C(Rat(1)), base.var());
  Poly<C> b = base;
  while (e > 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return result;
}

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {RatPoly(a.var()), a};
  std::vector<Rat> q(static_cast<std::size_t>(da - db) + 1);
  const Rat lead = b.leading();
  for (int k = da; k >= db; --k) {
    const Rat f = rem[static_cast<std::size_t>(k)] / lead;
    q[static_cast<std::size_t>(k - db)] = f;
    if (f.is_zero()) continue;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= f * b[static_cast<std::size_t>(i)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(q), a.var()), RatPoly(std::move(rem), a.var())};
}

/// Division known to be exact; throws if a remainder appears.
inline RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw VerificationFailure("exact_div", "nonzero remainder in polynomial division");
  return q;
}

inline Rat exact_div(const Rat& a, const Rat& b) { return a / b; }

/// Substitute var := q inside p (composition p(q)).
inline RatPoly compose(const RatPoly& p, const RatPoly& q) {
  RatPoly acc(q.var());
  for (int k = p.degree(); k >= 0; --k) acc = acc * q + RatPoly(p[static_cast<std::size_t>(k)], q.var());
  return acc;
}

/// Sum of absolute values of the coefficients.
inline Rat l1_norm(const RatPoly& p) {
  Rat s;
  for (const auto& a : p.coeffs()) s += abs(a);
  return s;
}

/// Maximum absolute value of the coefficients.
inline Rat max_norm(const RatPoly& p) {
  Rat s;
  for (const auto& a : p.coeffs()) s = std::max(s, abs(a));
  return s;
}

/// Exact interpolation through (xs[i], ys[i]) in Newton form.
inline RatPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys, Var v = Var::x) {
  if (xs.size() != ys.size()) throw InvalidInput("interpolate: size mismatch");
  const std::size_t n = xs.size();
  std::vector<Rat> dd = ys;
  for (std::size_t lvl = 1; lvl < n; ++lvl) {
    for (std::size_t i = n - 1; i >= lvl; --i) {
      const Rat gap = xs[i] - xs[i - lvl];
      if (gap.is_zero()) throw InvalidInput("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  }
  RatPoly acc(v);
  for (std::size_t i = n; i-- > 0;) acc = acc * RatPoly::linear(xs[i], v) + RatPoly(dd[i], v);
  return acc;
}

}  // namespace lerchpade
