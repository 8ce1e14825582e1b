#pragma once

// Shifted differential and integral operators acting coefficientwise on the
// monomial basis, and the Pade kernel maps phi_{alpha,x,s}.
//
//   S_{n,x}:  t^k -> (k+x+1)_n / n! * t^k
//   Prim_x:   t^k -> t^k / (k+x+1)
//   Deri_x:   t^k -> (k+x+1) t^k          (= S_{1,x})
//   phi:      t^k -> alpha^{k+1} / (k+x+1)^s
//
// All maps are templated over the coefficient ring so that they also act on
// polynomials in t whose coefficients are polynomials in z or in eps.

#include <vector>

#include "lerchpade/arith.hpp"
#include "lerchpade/errors.hpp"
#include "lerchpade/poly.hpp"
#include "lerchpade/rat.hpp"

namespace lerchpade {

/// A shift x that is not a negative integer, so k + x + 1 != 0 for k >= 0.
class ShiftParam {
 public:
  ShiftParam() = default;
  ShiftParam(const Rat& x) : x_(x) {  // NOLINT(google-explicit-constructor)
    if (x.is_integer() && x.sign() < 0) throw InvalidInput("shift " + x.short_str() + " is a negative integer");
  }
  const Rat& value() const { return x_; }
  friend bool operator==(const ShiftParam&, const ShiftParam&) = default;

 private:
  Rat x_;
};

/// k + x + 1.
inline Rat shift_divisor(int k, const ShiftParam& x) { return Rat(k + 1) + x.value(); }

/// Multiply the coefficient of t^k by w(k) for every k.
template <class C, class Weight>
Poly<C> map_monomials(const Poly<C>& p, Weight w) {
  std::vector<C> out;
  out.reserve(p.size());
  for (int k = 0; k <= p.degree(); ++k) out.push_back(p[static_cast<std::size_t>(k)] * w(k));
  return Poly<C>(std::move(out), p.var());
}

template <class C>
Poly<C> apply_S(unsigned n, const ShiftParam& x, const Poly<C>& p) {
  const Rat inv_fact = Rat(1) / Rat(factorial(n));
  return map_monomials(p, [&](int k) { return rising_factorial(shift_divisor(k, x), n) * inv_fact; });
}

template <class C>
Poly<C> apply_prim(const ShiftParam& x, const Poly<C>& p) {
  return map_monomials(p, [&](int k) { return Rat(1) / shift_divisor(k, x); });
}

/// Prim_x applied s times.
template <class C>
Poly<C> apply_prim_power(const ShiftParam& x, unsigned s, const Poly<C>& p) {
  return map_monomials(p, [&](int k) { return pow(shift_divisor(k, x), -static_cast<long>(s)); });
}

template <class C>
Poly<C> apply_deri(const ShiftParam& x, const Poly<C>& p) {
  return map_monomials(p, [&](int k) { return shift_divisor(k, x); });
}

/// phi_{alpha,x,s}(p) = sum_k p_k alpha^{k+1} / (k+x+1)^s. The result lives
/// in the coefficient ring of p; alpha may itself be a ring element (EpsPoly).
template <class C, class A>
C apply_phi(const A& alpha, const ShiftParam& x, unsigned s, const Poly<C>& p) {
  if (detail::coeff_is_zero(alpha)) throw InvalidInput("phi requires a nonzero alpha");
  C acc = C{};
  A power = alpha;
  for (int k = 0; k <= p.degree(); ++k) {
    const C& c = p[static_cast<std::size_t>(k)];
    if (!detail::coeff_is_zero(c)) {
      acc = acc + c * power * pow(shift_divisor(k, x), -static_cast<long>(s));
    }
    power = power * alpha;
  }
  return acc;
}

/// Coefficients b_l (l = 0..n) with [t^m] o S_{n,x} = sum_l b_l S_{1,x}^l o [t^m].
/// Applied to t^j both sides give t^{j+m} times, respectively,
/// (j+x+1)_n/n! and sum_l b_l (j+m+x+1)^l; so b is the coefficient vector
/// of y -> (y-m)_n/n!, recovered here by exact interpolation in y.
inline std::vector<Rat> s1_power_coefficients(unsigned n, unsigned m, const ShiftParam& x) {
  std::vector<Rat> ys, vals;
  const Rat inv_fact = Rat(1) / Rat(factorial(n));
  for (unsigned j = 0; j <= n; ++j) {
    ys.push_back(Rat(static_cast<long>(j + m + 1)) + x.value());
    vals.push_back(rising_factorial(shift_divisor(static_cast<int>(j), x), n) * inv_fact);
  }
  RatPoly b = interpolate(ys, vals, Var::x);
  std::vector<Rat> out;
  for (unsigned l = 0; l <= n; ++l) out.push_back(b.coeff(static_cast<int>(l)));
  return out;
}

}  // namespace lerchpade
