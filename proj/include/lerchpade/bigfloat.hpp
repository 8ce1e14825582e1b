#pragma once

// Arbitrary-precision reals with a rigorous absolute error radius.
//
// A BigFloat is a midpoint m (MPFR, working precision p) and a radius r
// (MPFR, 64 bits, always rounded up) such that the true value lies in
// [m - r, m + r]. Every operation rounds the midpoint to nearest and then
// widens the radius by the propagated input error plus one ulp of the
// midpoint whenever MPFR reports an inexact result.

#include <mpfr.h>

#include <cstdlib>
#include <memory>
#include <string>
#include <utility>

#include "lerchpade/errors.hpp"
#include "lerchpade/rat.hpp"

namespace lerchpade {

inline constexpr long kDefaultPrecision = 128;

class Mpfr {
 public:
  explicit Mpfr(long prec) { mpfr_init2(v_, static_cast<mpfr_prec_t>(prec)); mpfr_set_zero(v_, 1); }
  Mpfr(const Mpfr& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Mpfr& operator=(const Mpfr& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Mpfr(Mpfr&& o) noexcept : Mpfr(o) {}
  Mpfr& operator=(Mpfr&& o) noexcept { return *this = static_cast<const Mpfr&>(o); }
  ~Mpfr() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  long prec() const { return static_cast<long>(mpfr_get_prec(v_)); }

 private:
  mpfr_t v_;
};

class BigFloat {
 public:
  static constexpr long kRadiusPrecision = 64;

  explicit BigFloat(long prec = kDefaultPrecision) : mid_(check_prec(prec)), rad_(kRadiusPrecision) {}

  BigFloat(const Rat& q, long prec) : BigFloat(prec) {
    int t = mpfr_set_q(mid_.get(), q.mpq().get_mpq_t(), MPFR_RNDN);
    if (t != 0) add_ulp();
  }

  static BigFloat from_long(long v, long prec) { return BigFloat(Rat(v), prec); }

  static BigFloat pi(long prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.mid_.get(), MPFR_RNDN);
    r.add_ulp();
    return r;
  }

  long prec() const { return mid_.prec(); }
  const Mpfr& mid() const { return mid_; }
  const Mpfr& rad() const { return rad_; }

  double mid_double() const { return mpfr_get_d(mid_.get(), MPFR_RNDN); }
  double rad_double() const { return mpfr_get_d(rad_.get(), MPFR_RNDU); }

  /// Lower and upper ends of the enclosure, rounded outward.
  double lower_double() const {
    Mpfr t(prec());
    mpfr_sub(t.get(), mid_.get(), rad_.get(), MPFR_RNDD);
    return mpfr_get_d(t.get(), MPFR_RNDD);
  }
  double upper_double() const {
    Mpfr t(prec());
    mpfr_add(t.get(), mid_.get(), rad_.get(), MPFR_RNDU);
    return mpfr_get_d(t.get(), MPFR_RNDU);
  }

  bool definitely_positive() const { return lower_sign() > 0; }
  bool definitely_negative() const {
    Mpfr t(prec());
    mpfr_add(t.get(), mid_.get(), rad_.get(), MPFR_RNDU);
    return mpfr_sgn(t.get()) < 0;
  }
  bool contains_zero() const { return !definitely_positive() && !definitely_negative(); }

  /// True when the radius is at most 2^e.
  bool radius_below_pow2(long e) const {
    return mpfr_cmp_si_2exp(rad_.get(), 1, static_cast<mpfr_exp_t>(e)) <= 0;
  }

  /// Midpoint in scientific notation with `digits` significant digits.
  std::string to_string(int digits = 30) const { return format(mid_, digits, MPFR_RNDN); }
  std::string rad_string(int digits = 6) const { return format(rad_, digits, MPFR_RNDU); }

  BigFloat operator-() const {
    BigFloat r = *this;
    mpfr_neg(r.mid_.get(), mid_.get(), MPFR_RNDN);
    return r;
  }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    int t = mpfr_add(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
    mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    if (t != 0) r.add_ulp();
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return a + (-b); }

  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    int t = mpfr_mul(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
    Mpfr am(kRadiusPrecision), bm(kRadiusPrecision), acc(kRadiusPrecision);
    mpfr_abs(am.get(), a.mid_.get(), MPFR_RNDU);
    mpfr_abs(bm.get(), b.mid_.get(), MPFR_RNDU);
    mpfr_mul(r.rad_.get(), am.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_mul(acc.get(), bm.get(), a.rad_.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), r.rad_.get(), acc.get(), MPFR_RNDU);
    mpfr_mul(acc.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), r.rad_.get(), acc.get(), MPFR_RNDU);
    if (t != 0) r.add_ulp();
    return r;
  }

  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    // |A/B - a/b| <= (|a| rb + |b| ra) / (|b| (|b| - rb)) for |A-a|<=ra, |B-b|<=rb.
    Mpfr bl(kRadiusPrecision);
    mpfr_abs(bl.get(), b.mid_.get(), MPFR_RNDD);
    mpfr_sub(bl.get(), bl.get(), b.rad_.get(), MPFR_RNDD);
    if (mpfr_sgn(bl.get()) <= 0) throw InvalidInput("BigFloat division by an interval containing zero");
    BigFloat r(std::max(a.prec(), b.prec()));
    int t = mpfr_div(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
    Mpfr am(kRadiusPrecision), bm(kRadiusPrecision), acc(kRadiusPrecision), den(kRadiusPrecision);
    mpfr_abs(am.get(), a.mid_.get(), MPFR_RNDU);
    mpfr_abs(bm.get(), b.mid_.get(), MPFR_RNDU);
    mpfr_mul(r.rad_.get(), am.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_mul(acc.get(), bm.get(), a.rad_.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), r.rad_.get(), acc.get(), MPFR_RNDU);
    mpfr_abs(den.get(), b.mid_.get(), MPFR_RNDD);
    mpfr_mul(den.get(), den.get(), bl.get(), MPFR_RNDD);
    mpfr_div(r.rad_.get(), r.rad_.get(), den.get(), MPFR_RNDU);
    if (t != 0) r.add_ulp();
    return r;
  }

  BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
  BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
  BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }

  friend BigFloat log(const BigFloat& x) {
    // |log X - log x| <= r / (x - r) on [x - r, x + r] with x - r > 0.
    Mpfr lo(kRadiusPrecision);
    mpfr_sub(lo.get(), x.mid_.get(), x.rad_.get(), MPFR_RNDD);
    if (mpfr_sgn(lo.get()) <= 0) throw InvalidInput("log of a BigFloat that is not certainly positive");
    BigFloat r(x.prec());
    int t = mpfr_log(r.mid_.get(), x.mid_.get(), MPFR_RNDN);
    mpfr_div(r.rad_.get(), x.rad_.get(), lo.get(), MPFR_RNDU);
    if (t != 0) r.add_ulp();
    return r;
  }

  friend BigFloat exp(const BigFloat& x) {
    // |exp X - exp x| <= exp(x) (exp(r) - 1).
    BigFloat r(x.prec());
    int t = mpfr_exp(r.mid_.get(), x.mid_.get(), MPFR_RNDN);
    Mpfr up(kRadiusPrecision), em1(kRadiusPrecision);
    mpfr_exp(up.get(), x.mid_.get(), MPFR_RNDU);
    mpfr_expm1(em1.get(), x.rad_.get(), MPFR_RNDU);
    mpfr_mul(r.rad_.get(), up.get(), em1.get(), MPFR_RNDU);
    if (t != 0) r.add_ulp();
    return r;
  }

  friend BigFloat abs(const BigFloat& x) {
    BigFloat r = x;
    mpfr_abs(r.mid_.get(), x.mid_.get(), MPFR_RNDN);
    return r;
  }

  /// Widen the radius by a nonnegative rational amount (for truncation tails).
  void widen(const Rat& extra) {
    if (extra.sign() < 0) throw InvalidInput("negative widening");
    Mpfr e(kRadiusPrecision);
    mpfr_set_q(e.get(), extra.mpq().get_mpq_t(), MPFR_RNDU);
    mpfr_add(rad_.get(), rad_.get(), e.get(), MPFR_RNDU);
  }

  /// Union-style check: do the two enclosures overlap?
  friend bool overlaps(const BigFloat& a, const BigFloat& b) { return (a - b).contains_zero(); }

  /// Upper end |mid| + rad of the enclosure of |x|, exactly as a rational.
  Rat abs_upper_rat() const {
    Mpfr t(prec() + kRadiusPrecision);
    mpfr_abs(t.get(), mid_.get(), MPFR_RNDU);
    mpfr_add(t.get(), t.get(), rad_.get(), MPFR_RNDU);
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), t.get());
    return Rat(q);
  }

  /// Upper bound of |x| as a double rounded up.
  double abs_upper_double() const {
    Mpfr t(kRadiusPrecision);
    mpfr_abs(t.get(), mid_.get(), MPFR_RNDU);
    mpfr_add(t.get(), t.get(), rad_.get(), MPFR_RNDU);
    return mpfr_get_d(t.get(), MPFR_RNDU);
  }

 private:
  static long check_prec(long prec) {
    if (prec < MPFR_PREC_MIN || prec > 1L << 20) throw InvalidInput("precision out of range");
    return prec;
  }

  int lower_sign() const {
    Mpfr t(prec());
    mpfr_sub(t.get(), mid_.get(), rad_.get(), MPFR_RNDD);
    return mpfr_sgn(t.get());
  }

  void add_ulp() {
    if (mpfr_zero_p(mid_.get()) || !mpfr_number_p(mid_.get())) return;
    Mpfr u(kRadiusPrecision);
    mpfr_set_ui_2exp(u.get(), 1, mpfr_get_exp(mid_.get()) - static_cast<mpfr_exp_t>(prec()), MPFR_RNDU);
    mpfr_add(rad_.get(), rad_.get(), u.get(), MPFR_RNDU);
  }

  static std::string format(const Mpfr& v, int digits, mpfr_rnd_t rnd) {
    char* buf = nullptr;
    std::string fmt = "%." + std::to_string(digits > 0 ? digits - 1 : 0) + "R*e";
    mpfr_asprintf(&buf, fmt.c_str(), rnd, v.get());
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

  Mpfr mid_;
  Mpfr rad_;
};

inline BigFloat log_rat(const Rat& q, long prec) {
  if (q.sign() <= 0) throw InvalidInput("log of a nonpositive rational");
  return log(BigFloat(q, prec));
}

/// Precision from the environment variable, falling back to the default.
inline long precision_from_env(const char* var = "LERCHPADE_PRECISION") {
  const char* v = std::getenv(var);
  if (v == nullptr || *v == '\0') return kDefaultPrecision;
  char* end = nullptr;
  long p = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || p < 16) throw InvalidInput(std::string(var) + " must be an integer >= 16");
  return p;
}

}  // namespace lerchpade
