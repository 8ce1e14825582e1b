#pragma once

// Arithmetic helpers: rising factorials, lcm of arithmetic progressions,
// the prime-power correction mu(x), heights and common denominators.

#include <vector>

#include "lerchpade/bigfloat.hpp"
#include "lerchpade/errors.hpp"
#include "lerchpade/rat.hpp"

namespace lerchpade {

/// a (a+1) ... (a+n-1); the empty product for n = 0.
inline Rat rising_factorial(const Rat& a, unsigned long n) {
  Rat r(1);
  for (unsigned long i = 0; i < n; ++i) r *= a + Rat(static_cast<long>(i));
  return r;
}

/// lcm of the nonzero members of a, a+b, ..., a+bN.
inline Int lcm_dN(const Int& a, const Int& b, unsigned long N) {
  if (b == 0) throw InvalidInput("lcm_dN: b must be positive");
  if (a < 0 || b < 0) throw InvalidInput("lcm_dN: a must be nonnegative and b positive");
  Int l = 1;
  Int term = a;
  for (unsigned long k = 0; k <= N; ++k) {
    if (term != 0) l = lcm(l, term);
    term += b;
  }
  return l;
}

/// Distinct prime divisors of a positive integer, ascending.
inline std::vector<Int> prime_divisors(Int v) {
  if (v <= 0) throw InvalidInput("prime_divisors expects a positive integer");
  std::vector<Int> ps;
  for (Int p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      ps.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) ps.push_back(v);
  return ps;
}

/// log mu(x) = sum over primes q | den(x) of (q/(q-1)) log q.
inline BigFloat log_mu(const Rat& x, long prec) {
  BigFloat s(Rat(0), prec);
  for (const Int& q : prime_divisors(x.den())) {
    s += BigFloat(Rat(q, q - 1), prec) * log_rat(Rat(q), prec);
  }
  return s;
}

/// Coprime integer representative of a projective point with rational coordinates.
inline std::vector<Int> primitive_integer_vector(const std::vector<Rat>& coords) {
  Int den = 1;
  bool any = false;
  for (const auto& c : coords) {
    den = lcm(den, c.den());
    any = any || !c.is_zero();
  }
  if (!any) throw InvalidInput("projective point with all coordinates zero");
  std::vector<Int> ints;
  Int g = 0;
  for (const auto& c : coords) {
    Int v = c.num() * (den / c.den());
    g = gcd(g, v);
    ints.push_back(v);
  }
  for (auto& v : ints) v /= g;
  return ints;
}

/// Largest absolute coordinate after clearing denominators and the common gcd.
inline Int projective_height_exp(const std::vector<Rat>& coords) {
  Int m = 0;
  for (const auto& v : primitive_integer_vector(coords)) {
    Int a = abs(v);
    if (a > m) m = a;
  }
  return m;
}

/// Absolute logarithmic Weil height of a rational projective point.
inline BigFloat projective_height(const std::vector<Rat>& coords, long prec) {
  return log_rat(Rat(projective_height_exp(coords)), prec);
}

/// Smallest positive integer clearing every denominator.
inline Int denominator_lcm(const std::vector<Rat>& values) {
  Int l = 1;
  for (const auto& v : values) l = lcm(l, v.den());
  return l;
}

}  // namespace lerchpade
