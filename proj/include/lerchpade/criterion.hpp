#pragma once

// The effective linear-independence criterion over Q at the archimedean
// place: the quantity V, the measure exponent mu and constant C, the
// lcm growth diagnostic, and the threshold tables of the number-field
// example with g, p, q parameters.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lerchpade/arith.hpp"
#include "lerchpade/bigfloat.hpp"
#include "lerchpade/errors.hpp"
#include "lerchpade/pade.hpp"
#include "lerchpade/rat.hpp"

namespace lerchpade {

struct CriterionInput {
  std::vector<Rat> alphas;
  std::vector<Shift> shifts;
  Rat beta;
  long precision = kDefaultPrecision;

  unsigned rho() const {
    unsigned r = 0;
    for (const auto& s : shifts) r += s.r;
    return r;
  }
  unsigned m() const { return static_cast<unsigned>(alphas.size()); }
  unsigned rho_m() const { return rho() * m(); }
  Rat norm_alpha() const {
    Rat mx;
    for (const auto& a : alphas) mx = std::max(mx, abs(a));
    return mx;
  }
  /// b = max_j den(x_j).
  Int b() const {
    Int mx = 1;
    for (const auto& s : shifts) mx = std::max(mx, s.x.value().den());
    return mx;
  }
  unsigned max_r() const {
    unsigned mx = 0;
    for (const auto& s : shifts) mx = std::max(mx, s.r);
    return mx;
  }

  /// Checks the data hypotheses (via Instance) and ||alpha|| < |beta|.
  void validate() const {
    Instance probe(alphas, shifts, 1);
    if (!(norm_alpha() < abs(beta))) throw InvalidInput("criterion requires max|alpha_i| < |beta|");
  }
};

struct Term {
  std::string name;
  BigFloat value;  // signed contribution to the total
};

struct CriterionReport {
  BigFloat V, A, U, c_x_v0, mu_exponent, C_constant;
  bool has_measure = false;
  std::string verdict;
  std::vector<Term> terms;
};

/// rho m log 2 + rho (log(rho m + 1) + rho m log((rho m + 1)/(rho m))).
inline BigFloat archimedean_bracket(unsigned rho, unsigned m, long prec) {
  const long rm = static_cast<long>(rho) * m;
  const BigFloat two_log = log_rat(Rat(2), prec);
  BigFloat inner = log_rat(Rat(rm + 1), prec) + BigFloat(Rat(rm), prec) * log_rat(Rat(rm + 1, rm), prec);
  return BigFloat(Rat(rm), prec) * two_log + BigFloat(Rat(static_cast<long>(rho)), prec) * inner;
}

inline CriterionReport compute_V(const CriterionInput& in) {
  in.validate();
  const long prec = in.precision;
  const BigFloat rm(Rat(static_cast<long>(in.rho_m())), prec);
  std::vector<Rat> point{Rat(1)};
  point.insert(point.end(), in.alphas.begin(), in.alphas.end());
  point.push_back(in.beta);
  const Rat norm_ab = std::max(in.norm_alpha(), abs(in.beta));

  CriterionReport rep;
  rep.terms.push_back({"log|beta|", log_rat(abs(in.beta), prec)});
  rep.terms.push_back({"-rho*m*h(1:alpha:beta)", -(rm * projective_height(point, prec))});
  rep.terms.push_back({"-rho*m*log||alpha||", -(rm * log_rat(in.norm_alpha(), prec))});
  rep.terms.push_back({"+rho*m*log||(alpha,beta)||", rm * log_rat(norm_ab, prec)});
  BigFloat mu_sum(Rat(0), prec);
  for (const auto& s : in.shifts) mu_sum += BigFloat(Rat(static_cast<long>(s.r)), prec) * log_mu(s.x.value(), prec);
  rep.terms.push_back({"-sum_j r_j*log(mu(x_j))", -mu_sum});
  rep.c_x_v0 = archimedean_bracket(in.rho(), in.m(), prec);
  rep.terms.push_back({"-[rho*m*log2+rho*(log(rho*m+1)+rho*m*log((rho*m+1)/(rho*m)))]", -rep.c_x_v0});
  rep.terms.push_back({"-max_j(r_j)*b*rho*m",
                       -BigFloat(Rat(static_cast<long>(in.max_r())) * Rat(in.b()) * Rat(static_cast<long>(in.rho_m())), prec)});
  BigFloat v(Rat(0), prec);
  for (const auto& t : rep.terms) v += t.value;
  rep.V = v;
  rep.verdict = v.definitely_positive() ? "independent-if-V-positive" : "inconclusive";
  return rep;
}

inline CriterionReport compute_measure(const CriterionInput& in, const Rat& epsilon) {
  CriterionReport rep = compute_V(in);
  const long prec = in.precision;
  if (epsilon.sign() <= 0) throw InvalidInput("epsilon must be positive");
  const BigFloat gap = rep.V - BigFloat(epsilon, prec);
  if (!gap.definitely_positive()) throw InvalidInput("epsilon must be smaller than V (and V must be positive)");
  const BigFloat rm(Rat(static_cast<long>(in.rho_m())), prec);
  // Local height at the archimedean place: log max(1, |alpha_i|, |beta|).
  const Rat local = std::max({Rat(1), in.norm_alpha(), abs(in.beta)});
  rep.A = log_rat(abs(in.beta), prec) - BigFloat(Rat(static_cast<long>(in.rho_m() + 1)), prec) * log_rat(in.norm_alpha(), prec) -
          rep.c_x_v0;
  rep.U = rm * log_rat(local, prec) + rep.c_x_v0;
  const BigFloat AU = rep.A + rep.U;
  rep.mu_exponent = AU / gap;
  rep.C_constant = exp(-((log_rat(Rat(2), prec) / gap + BigFloat(Rat(1), prec)) * AU));
  rep.has_measure = true;
  return rep;
}

/// log D_n / n with D_n = lcm_j lcm(a_j, a_j + b_j, ..., a_j + b_j (rho m (n+1) + 1)).
inline BigFloat log_Dn_over_n(const std::vector<Shift>& shifts, unsigned rho_m, unsigned n, long prec) {
  Int D = 1;
  const unsigned long N = static_cast<unsigned long>(rho_m) * (n + 1) + 1;
  for (const auto& s : shifts) D = lcm(D, lcm_dN(s.x.value().num(), s.x.value().den(), N));
  return log_rat(Rat(D), prec) / BigFloat(Rat(static_cast<long>(n)), prec);
}

// ---------------------------------------------------------------- tables

/// Sum of the subtracted terms in the lower bound for V in the example with
/// parameters (g, p, q); the bound is positive once (1/g) log|beta_M|
/// exceeds it, so the returned threshold on log|beta_M| is g times it.
inline BigFloat table_subtrahend(long g, long p, long q, long prec) {
  auto R = [&](const Rat& r) { return BigFloat(r, prec); };
  const BigFloat log2 = log_rat(Rat(2), prec);
  const Rat pq100(100 * p * q);
  BigFloat s = R(pq100 / Rat(g)) * (R(Rat(g - 1)) * log2 + log_rat(Rat(2520), prec));
  s += R(Rat(10 * p)) * log_rat(Rat(p), prec);
  s += R(pq100) * log2 + R(Rat(100)) * (log_rat(pq100 + Rat(1), prec) + R(pq100) * log_rat((pq100 + Rat(1)) / pq100, prec));
  s += R(Rat(1000 * p * q));
  return s;
}

/// The first subtracted term, (100pq/g)((g-1) log 2 + log 2520).
inline BigFloat table_first_term(long g, long p, long q, long prec) {
  return BigFloat(Rat(100 * p * q, g), prec) *
         (BigFloat(Rat(g - 1), prec) * log_rat(Rat(2), prec) + log_rat(Rat(2520), prec));
}

inline BigFloat table_threshold(long g, long p, long q, long prec) {
  if (g < 2 || p < 2 || q < 1) throw InvalidInput("table_threshold needs g >= 2, p >= 2, q >= 1");
  return BigFloat(Rat(g), prec) * table_subtrahend(g, p, q, prec);
}

inline constexpr std::array<long, 5> kTableG{2, 3, 4, 5, 6};
inline constexpr std::array<long, 4> kTableP{2, 3, 5, 7};
inline constexpr std::array<long, 4> kTableQ{1, 2, 3, 4};

/// Published log(M) thresholds indexed [g-2][p-row][q-1].
inline constexpr long kPublishedTable[5][4][4] = {
    {{3158, 5816, 8449, 11072}, {4509, 8466, 12398, 16320}, {7192, 13748, 20278, 26798}, {9868, 19021, 28150, 37268}},
    {{4427, 8104, 11744, 15368}, {6298, 11769, 17202, 22620}, {10013, 19071, 28092, 37097}, {13717, 26362, 38969, 51562}},
    {{5695, 10391, 15038, 19664}, {8087, 15071, 22006, 28920}, {12834, 24394, 35905, 47395}, {17565, 33702, 49789, 65855}},
    {{6964, 12679, 18332, 23960}, {9876, 18374, 26809, 35219}, {15655, 29718, 43719, 57694}, {21414, 41042, 60608, 80148}},
    {{8233, 14967, 21627, 28256}, {11665, 21676, 31613, 41519}, {18476, 35041, 51532, 67992}, {25263, 48382, 71427, 94441}},
};

struct TableRow {
  long g, p, q, published_value;
  BigFloat computed;
  BigFloat difference;  // computed - published_value
};

inline std::vector<TableRow> table_rows(long prec) {
  std::vector<TableRow> rows;
  for (std::size_t gi = 0; gi < kTableG.size(); ++gi)
    for (std::size_t pi = 0; pi < kTableP.size(); ++pi)
      for (std::size_t qi = 0; qi < kTableQ.size(); ++qi) {
        const long g = kTableG[gi], p = kTableP[pi], q = kTableQ[qi];
        BigFloat t = table_threshold(g, p, q, prec);
        const long published = kPublishedTable[gi][pi][qi];
        BigFloat diff = t - BigFloat(Rat(published), prec);
        rows.push_back({g, p, q, published, t, diff});
      }
  return rows;
}

}  // namespace lerchpade
