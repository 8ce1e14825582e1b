#pragma once

// High-precision evaluation of Phi_s(x, z) and of Lerch functions with
// periodic coefficients, numerical checks of the remainder bounds, and an
// exhaustive small-height search for linear forms in the Lerch values.

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "lerchpade/arith.hpp"
#include "lerchpade/bigfloat.hpp"
#include "lerchpade/criterion.hpp"
#include "lerchpade/errors.hpp"
#include "lerchpade/operators.hpp"
#include "lerchpade/pade.hpp"
#include "lerchpade/poly.hpp"
#include "lerchpade/rat.hpp"

namespace lerchpade {

/// Number of bits of 1/eps needed so that a target precision is met.
inline long guard_bits(long prec) { return prec + 32; }

/// Phi_s(x, z) = sum_{k>=0} z^{k+1} / (k+x+1)^s for rational |z| < 1.
/// The partial sum is accumulated in interval arithmetic and the tail is
/// bounded by |z|^{K+2} / ((K+x+2)^s (1-|z|)).
inline BigFloat eval_lerch(const Rat& x, unsigned s, const Rat& z, long prec) {
  const ShiftParam sx(x);
  if (!(abs(z) < Rat(1))) throw InvalidInput("eval_lerch requires |z| < 1");
  const long wp = guard_bits(prec);
  if (z.is_zero()) return BigFloat(Rat(0), wp);
  const Rat az = abs(z);
  // Smallest K with |z|^{K+2}/(1-|z|) below 2^{-(prec+8)}, ignoring the helpful (K+x+2)^s.
  const double lz = std::log2(az.to_double());
  long K = static_cast<long>(std::ceil((static_cast<double>(prec + 8) - std::log2((Rat(1) - az).to_double())) / -lz));
  K = std::max<long>(K, 1);
  const BigFloat zb(z, wp);
  BigFloat power = zb;
  BigFloat sum(Rat(0), wp);
  for (long k = 0; k <= K; ++k) {
    const Rat div = pow(shift_divisor(static_cast<int>(k), sx), static_cast<long>(s));
    sum += power / BigFloat(div, wp);
    power = power * zb;
  }
  Rat tail = pow(az, K + 2) / (Rat(1) - az);
  const Rat tdiv = pow(shift_divisor(static_cast<int>(K + 1), sx), static_cast<long>(s));
  if (tdiv.sign() > 0 && tdiv >= Rat(1)) tail /= tdiv;
  sum.widen(tail);
  return sum;
}

// ---------------------------------------------------------------- periodic

struct PeriodicSpec {
  RatPoly b;  // denominator, simple nonzero rational roots
  RatPoly w;  // numerator, deg w < deg b
};

/// Positive divisors of |v| (v != 0), ascending.
inline std::vector<Int> positive_divisors(Int v) {
  if (v < 0) v = -v;
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      small.push_back(d);
      if (d * d != v) large.push_back(v / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// All rational roots of p (p(0) != 0 assumed), ascending, without multiplicity.
inline std::vector<Rat> rational_roots(const RatPoly& p) {
  if (p.degree() < 1) return {};
  Int den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, c.den());
  const Int a0 = (p[0] * Rat(den)).num();
  const Int an = (p.leading() * Rat(den)).num();
  if (a0 == 0) throw InvalidInput("polynomial has the root 0");
  std::vector<Rat> roots;
  for (const Int& u : positive_divisors(a0))
    for (const Int& v : positive_divisors(an))
      for (int sgn : {1, -1}) {
        const Rat r = Rat(u * sgn, v);
        if (p.eval(r).is_zero() && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

struct PartialFractions {
  std::vector<Rat> roots;   // alpha_i
  std::vector<Rat> gammas;  // gamma_i = w(alpha_i) / b'(alpha_i)
};

inline PartialFractions partial_fractions(const PeriodicSpec& spec) {
  if (spec.b.degree() < 1) throw InvalidInput("b must have positive degree");
  if (spec.w.degree() >= spec.b.degree()) throw InvalidInput("deg w must be smaller than deg b");
  PartialFractions pf;
  pf.roots = rational_roots(spec.b);
  if (static_cast<int>(pf.roots.size()) != spec.b.degree())
    throw InvalidInput("b must split into distinct rational linear factors");
  const RatPoly db = spec.b.derivative();
  for (const Rat& a : pf.roots) {
    const Rat d = db.eval(a);
    if (d.is_zero()) throw InvalidInput("b has a repeated root");
    pf.gammas.push_back(spec.w.eval(a) / d);
  }
  return pf;
}

/// f_{b,w,x,s}(beta) = sum_k a_k beta^{-k-1} / (k+x+1)^s where
/// w(z)/b(z) = sum_k a_k z^{-k-1}; equal to sum_i (gamma_i/alpha_i) Phi_s(x, alpha_i/beta).
inline BigFloat eval_periodic(const PeriodicSpec& spec, const Rat& x, unsigned s, const Rat& beta, long prec) {
  const PartialFractions pf = partial_fractions(spec);
  BigFloat total(Rat(0), guard_bits(prec));
  for (std::size_t i = 0; i < pf.roots.size(); ++i) {
    const Rat ratio = pf.roots[i] / beta;
    if (!(abs(ratio) < Rat(1))) throw InvalidInput("eval_periodic requires |alpha_i| < |beta| for every root");
    total += BigFloat(pf.gammas[i] / pf.roots[i], guard_bits(prec)) * eval_lerch(x, s, ratio, prec);
  }
  return total;
}

// ---------------------------------------------------------------- remainder bound

struct RemainderCell {
  unsigned l;
  Cell cell;
  BigFloat R;          // enclosure of R_{l,i,s}(beta)
  BigFloat log_abs_R;  // log of the upper end of |R|
  BigFloat bound;      // right-hand side of the inequality
  bool holds = false;
  bool routes_agree = false;  // series route vs P_l(beta) Phi - P_lis(beta)
};

struct RemainderReport {
  std::string instance;
  Rat beta;
  bool pass = false;
  std::vector<RemainderCell> cells;
};

/// Right-hand side of the archimedean remainder estimate, with o(1) = 0:
/// rho m (n+1) log||alpha|| + (n+1) log(||alpha||/|beta|) + log(|beta|/(|beta|-||alpha||)) + n * bracket.
inline BigFloat remainder_bound_rhs(const Instance& inst, const Rat& beta, long prec) {
  Rat na;
  for (const auto& a : inst.alphas()) na = std::max(na, abs(a));
  const Rat ab = abs(beta);
  const long n = inst.n();
  auto R = [&](const Rat& r) { return BigFloat(r, prec); };
  return R(Rat(static_cast<long>(inst.rho_m()) * (n + 1))) * log_rat(na, prec) + R(Rat(n + 1)) * log_rat(na / ab, prec) +
         log_rat(ab / (ab - na), prec) + R(Rat(n)) * archimedean_bracket(inst.rho(), inst.m(), prec);
}

/// R(beta) = sum_{k>=n} phi(t^k P_l) / beta^{k+1}: the prefix k <= K is
/// summed in interval arithmetic from g_q = alpha^{q+1}/(q+x+1)^s, and the
/// tail is bounded by ||P_l||_1 max(1,|alpha|)^{deg P_l} |alpha/beta|^{K+2} / (1 - |alpha/beta|).
inline BigFloat remainder_value(const RatPoly& P, const Rat& alpha, const ShiftParam& x, unsigned s, unsigned n,
                                const Rat& beta, long prec) {
  const Rat q = abs(alpha / beta);
  if (!(q < Rat(1))) throw InvalidInput("remainder_value requires |alpha| < |beta|");
  const long wp = guard_bits(prec) + 2 * static_cast<long>(P.degree()) * 8;
  const Rat coef_bound = l1_norm(P) * pow(std::max(Rat(1), abs(alpha)), P.degree());
  // K with coef_bound * q^{K+2} / (1-q) < 2^{-(prec+16)}.
  const double lq = std::log2(q.to_double());
  const double need = static_cast<double>(prec + 16) + std::log2(std::max(1.0, coef_bound.to_double())) -
                      std::log2((Rat(1) - q).to_double());
  long K = std::max<long>(static_cast<long>(n) + 1, static_cast<long>(std::ceil(need / -lq)));
  const int deg = P.degree();
  const BigFloat ab(alpha / beta, wp);
  // phi(t^k P) / beta^{k+1} = sum_j c_j beta^j (alpha/beta)^{k+j+1} / (k+j+x+1)^s
  std::vector<BigFloat> h;  // h_q = (alpha/beta)^{q+1}/(q+x+1)^s, q = 0..K+deg
  BigFloat power = ab;
  for (long qq = 0; qq <= K + deg; ++qq) {
    h.push_back(power / BigFloat(pow(shift_divisor(static_cast<int>(qq), x), static_cast<long>(s)), wp));
    power = power * ab;
  }
  std::vector<BigFloat> cb;  // c_j beta^j
  for (int j = 0; j <= deg; ++j) cb.push_back(BigFloat(P[static_cast<std::size_t>(j)] * pow(beta, j), wp));
  BigFloat sum(Rat(0), wp);
  for (long k = n; k <= K; ++k) {
    BigFloat term(Rat(0), wp);
    for (int j = 0; j <= deg; ++j)
      if (!P[static_cast<std::size_t>(j)].is_zero()) term += cb[static_cast<std::size_t>(j)] * h[static_cast<std::size_t>(k + j)];
    sum += term;
  }
  sum.widen(coef_bound * pow(q, K + 2) / (Rat(1) - q));
  return sum;
}

inline RemainderReport remainder_bound_check(const Instance& inst, const Rat& beta, long prec) {
  Rat na;
  for (const auto& a : inst.alphas()) na = std::max(na, abs(a));
  if (!(na < abs(beta))) throw InvalidInput("remainder bound requires max|alpha_i| < |beta|");
  RemainderReport rep;
  rep.instance = inst.describe();
  rep.beta = beta;
  const BigFloat rhs = remainder_bound_rhs(inst, beta, prec);
  std::map<Cell, BigFloat> phi_cache;
  bool all = true;
  for (unsigned l = 0; l <= inst.rho_m(); ++l) {
    const RatPoly P = build_P(l, inst);
    // Enough bits to absorb the cancellation in P_l(beta) Phi - P_lis(beta).
    const long mag_bits = static_cast<long>(std::ceil(std::log2(std::max(1.0, l1_norm(P).to_double())) +
                                                      P.degree() * std::log2(std::max(1.0, abs(beta).to_double()))));
    const long wp2 = prec + mag_bits + 64;
    for (const Cell& c : cells(inst)) {
      const Rat& alpha = inst.alpha(c.i);
      const ShiftParam& x = inst.shift(c.j).x;
      RemainderCell rc{l, c, remainder_value(P, alpha, x, c.s, inst.n(), beta, prec), BigFloat(prec), rhs, false, false};
      // log of the upper end |mid| + rad of the enclosure, so the comparison is sound.
      const Rat upper = rc.R.abs_upper_rat();
      if (upper.is_zero()) throw VerificationFailure("remainder_bound", "remainder enclosure collapsed to zero");
      rc.log_abs_R = log_rat(upper, prec);
      rc.holds = (rc.bound - rc.log_abs_R).definitely_positive();
      // Second route: P_l(beta) Phi_s(x, alpha/beta) - P_lis(beta).
      auto it = phi_cache.find(c);
      if (it == phi_cache.end()) it = phi_cache.emplace(c, eval_lerch(x.value(), c.s, alpha / beta, wp2)).first;
      const RatPoly Pn = build_P_lis_from(P, c, inst);
      const BigFloat second = BigFloat(P.eval(beta), wp2) * it->second - BigFloat(Pn.eval(beta), wp2);
      rc.routes_agree = overlaps(second, rc.R);
      all = all && rc.holds && rc.routes_agree;
      rep.cells.push_back(std::move(rc));
    }
    phi_cache.clear();
  }
  rep.pass = all;
  return rep;
}

// ---------------------------------------------------------------- linear forms

struct HeightLevel {
  long height;        // max |lambda_i| over primitive vectors at this level
  BigFloat min_form;  // min |lambda_0 + sum lambda_v theta_v|
  std::vector<long> argmin;
  BigFloat bound;     // C * H * H^{-mu}
  bool exceeds = false;
};

struct LinearFormReport {
  long cap = 0;
  long vectors = 0;
  BigFloat mu, C;
  std::vector<BigFloat> thetas;
  BigFloat min_form;
  std::vector<long> argmin;
  bool all_positive = false;
  std::vector<HeightLevel> levels;
};

namespace detail {

inline long vector_gcd(const std::vector<long>& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, std::labs(x));
  return g;
}

inline long vector_height(const std::vector<long>& v) {
  long h = 0;
  for (long x : v) h = std::max(h, std::labs(x));
  return h;
}

struct Candidate {
  double value;
  std::vector<long> lambda;
};

}  // namespace detail

/// Exhaustive search over integer vectors lambda != 0 with |lambda_i| <= cap.
/// Values are screened in double precision with a rigorous-enough margin and
/// every near-minimal candidate (per primitive height level) is re-evaluated
/// in interval arithmetic.
inline LinearFormReport bruteforce_linear_form_min(const CriterionInput& in, const Rat& epsilon, long cap, long prec,
                                                    unsigned threads = 0) {
  if (cap < 1 || cap > 50) throw InvalidInput("height cap must be in [1, 50]");
  if (in.rho_m() + 1 > 4) throw InvalidInput("linear-form search supports rho*m + 1 <= 4");
  const CriterionReport cr = compute_measure(in, epsilon);
  LinearFormReport rep;
  rep.cap = cap;
  rep.mu = cr.mu_exponent;
  rep.C = cr.C_constant;
  Instance probe(in.alphas, in.shifts, 1);
  std::vector<double> th{1.0};
  rep.thetas.clear();
  for (const Cell& c : cells(probe)) {
    BigFloat v = eval_lerch(probe.shift(c.j).x.value(), c.s, probe.alpha(c.i) / in.beta, prec);
    rep.thetas.push_back(v);
    th.push_back(v.mid_double());
  }
  const std::size_t dim = th.size();
  const double margin_unit = 1e-13;

  // Per (height level), keep every candidate within a margin of the best seen.
  using Levels = std::map<long, std::vector<detail::Candidate>>;
  auto scan = [&](long first_lo, long first_hi) {
    Levels lv;
    std::map<long, double> best;
    std::vector<long> lam(dim);
    long count = 0;
    for (long a0 = first_lo; a0 <= first_hi; ++a0) {
      lam[0] = a0;
      std::vector<long> rest(dim - 1, -cap);
      while (true) {
        for (std::size_t i = 1; i < dim; ++i) lam[i] = rest[i - 1];
        const long h = detail::vector_height(lam);
        if (h > 0) {
          ++count;
          if (detail::vector_gcd(lam) == 1) {
            double f = 0.0, scale = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
              f += static_cast<double>(lam[i]) * th[i];
              scale += std::fabs(static_cast<double>(lam[i]) * th[i]);
            }
            const double af = std::fabs(f);
            const double margin = margin_unit * (1.0 + scale);
            auto bit = best.find(h);
            if (bit == best.end() || af < bit->second) {
              best[h] = af;
              auto& vec = lv[h];
              vec.erase(std::remove_if(vec.begin(), vec.end(),
                                       [&](const detail::Candidate& c) { return c.value > af + 2 * margin; }),
                        vec.end());
              vec.push_back({af, lam});
            } else if (af <= bit->second + 2 * margin) {
              lv[h].push_back({af, lam});
            }
          }
        }
        std::size_t pos = 0;
        while (pos < rest.size() && rest[pos] == cap) rest[pos++] = -cap;
        if (pos == rest.size()) break;
        ++rest[pos];
      }
    }
    return std::make_pair(lv, count);
  };

  unsigned nt = threads ? threads : std::max(1U, std::min(8U, std::thread::hardware_concurrency()));
  const long span = 2 * cap + 1;
  nt = static_cast<unsigned>(std::min<long>(nt, span));
  std::vector<std::future<std::pair<Levels, long>>> futs;
  for (unsigned t = 0; t < nt; ++t) {
    const long lo = -cap + span * t / nt;
    const long hi = -cap + span * (t + 1) / nt - 1;
    futs.push_back(std::async(std::launch::async, scan, lo, hi));
  }
  Levels merged;
  for (auto& f : futs) {
    auto [lv, count] = f.get();
    rep.vectors += count;
    for (auto& [h, vec] : lv) merged[h].insert(merged[h].end(), vec.begin(), vec.end());
  }

  auto exact_form = [&](const std::vector<long>& lam) {
    BigFloat f(Rat(lam[0]), prec);
    for (std::size_t i = 1; i < dim; ++i) f += BigFloat(Rat(lam[i]), prec) * rep.thetas[i - 1];
    return abs(f);
  };
  rep.all_positive = true;
  bool first = true;
  for (auto& [h, vec] : merged) {
    double best = vec.front().value;
    for (const auto& c : vec) best = std::min(best, c.value);
    HeightLevel level{h, BigFloat(prec), {}, BigFloat(prec), false};
    bool have = false;
    for (const auto& c : vec) {
      double scale = 0.0;
      for (std::size_t i = 0; i < dim; ++i) scale += std::fabs(static_cast<double>(c.lambda[i]) * th[i]);
      if (c.value > best + 2 * margin_unit * (1.0 + scale)) continue;
      BigFloat f = exact_form(c.lambda);
      if (!have || (f.mid_double() < level.min_form.mid_double()) ||
          (f.mid_double() == level.min_form.mid_double() && c.lambda < level.argmin)) {
        level.min_form = f;
        level.argmin = c.lambda;
        have = true;
      }
    }
    const BigFloat H(Rat(h), prec);
    level.bound = rep.C * H * exp(-(rep.mu * log(H)));
    level.exceeds = (level.min_form - level.bound).definitely_positive();
    rep.all_positive = rep.all_positive && level.min_form.definitely_positive();
    if (first || level.min_form.mid_double() < rep.min_form.mid_double()) {
      rep.min_form = level.min_form;
      rep.argmin = level.argmin;
      first = false;
    }
    rep.levels.push_back(std::move(level));
  }
  return rep;
}

/// |lambda_0 + sum lambda_v theta_v| for an explicit integer vector.
inline BigFloat linear_form_value(const CriterionInput& in, const std::vector<long>& lambda, long prec) {
  Instance probe(in.alphas, in.shifts, 1);
  const auto cs = cells(probe);
  if (lambda.size() != cs.size() + 1) throw InvalidInput("lambda has the wrong length");
  BigFloat f(Rat(lambda[0]), prec);
  for (std::size_t v = 0; v < cs.size(); ++v)
    f += BigFloat(Rat(lambda[v + 1]), prec) *
         eval_lerch(probe.shift(cs[v].j).x.value(), cs[v].s, probe.alpha(cs[v].i) / in.beta, prec);
  return f;
}

}  // namespace lerchpade
