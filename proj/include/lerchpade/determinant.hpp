#pragma once

// The determinant machinery behind the non-vanishing of the Pade system:
// the constant Delta, its factorisation c * det(u) = c * E * det(w), the
// alpha-polynomial C_{u,m} with its collision order and homogeneity, the
// m=2 recursion for the constant c_{n,u,m}, and the closed forms of the
// Hermite-type determinants det(M), det(N), det(H).

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lerchpade/eps_poly.hpp"
#include "lerchpade/errors.hpp"
#include "lerchpade/matrix.hpp"
#include "lerchpade/operators.hpp"
#include "lerchpade/pade.hpp"
#include "lerchpade/poly.hpp"
#include "lerchpade/rat.hpp"

namespace lerchpade {

inline int sign_of_ratio(const Rat& a, const Rat& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  return a.sign() * b.sign();
}

// ---------------------------------------------------------------- Delta

/// det(p_0(z), ..., p_{rho m}(z)) with p_l = (P_l; P_{l,i,s}) in row order.
/// Must be a nonzero constant; returns it.
inline Rat delta_det(const Instance& inst) {
  const PadeSystem sys = build_system(inst);
  const auto cs = cells(inst);
  const std::size_t N = inst.rho_m() + 1;
  Matrix<RatPoly> mat(N, std::vector<RatPoly>(N));
  for (std::size_t l = 0; l < N; ++l) {
    mat[0][l] = sys.P[l];
    for (std::size_t r = 0; r < cs.size(); ++r) mat[r + 1][l] = sys.Pnum.at({static_cast<unsigned>(l), cs[r]});
  }
  const RatPoly det = bareiss_det(mat);
  if (det.degree() > 0) {
    std::ostringstream os;
    os << "determinant has degree " << det.degree() << " in z for " << inst.describe();
    throw VerificationFailure("delta_constant", os.str());
  }
  if (det.is_zero()) throw VerificationFailure("delta_nonzero", "determinant vanishes for " + inst.describe());
  return det[0];
}

// ---------------------------------------------------------------- chain

/// H(T) = (1/n!) prod_{l=1}^n (T - l) at a rational point.
inline Rat H_value(unsigned n, const Rat& T) {
  Rat p(1);
  for (unsigned l = 1; l <= n; ++l) p *= T - Rat(static_cast<long>(l));
  return p / Rat(factorial(n));
}

/// H_{x_j}(0) = prod_k H(x_k - x_j)^{r_k}.
inline Rat H_x_at_zero(const Instance& inst, unsigned j) {
  Rat p(1);
  for (const auto& sh : inst.shifts()) p *= pow(H_value(inst.n(), sh.x.value() - inst.shift(j).x.value()), sh.r);
  return p;
}

/// E = prod_{j, s_j} H_{x_j}(0)^m.
inline Rat E_factor(const Instance& inst) {
  Rat e(1);
  for (unsigned j = 1; j <= inst.d(); ++j) e *= pow(H_x_at_zero(inst, j), static_cast<long>(inst.shift(j).r * inst.m()));
  return e;
}

struct DetChainReport {
  std::string instance;
  Rat delta, c_leading, det_u, E, det_w;
  bool delta_matches = false;  // |delta| == |c det_u|
  bool det_u_matches = false;  // |det_u| == |E det_w|
  int sign_delta = 0;          // sign of delta / (c det_u)
  int sign_u = 0;              // sign of det_u / (E det_w)
  bool pass() const { return delta_matches && det_u_matches; }
};

/// Matrix with rows indexed by cells and columns l = 0..rho m - 1 whose
/// entries are phi_{alpha_i,x_j,s}(t^n f_l(t)).
template <class F>
Matrix<Rat> phi_matrix(const Instance& inst, F&& f_of_l) {
  const auto cs = cells(inst);
  Matrix<Rat> mat(cs.size(), std::vector<Rat>(inst.rho_m()));
  for (unsigned l = 0; l < inst.rho_m(); ++l) {
    const RatPoly f = f_of_l(l).shifted(static_cast<int>(inst.n()));
    for (std::size_t r = 0; r < cs.size(); ++r)
      mat[r][l] = apply_phi(inst.alpha(cs[r].i), inst.shift(cs[r].j).x, cs[r].s, f);
  }
  return mat;
}

inline DetChainReport chain_check(const Instance& inst) {
  DetChainReport rep;
  rep.instance = inst.describe();
  rep.delta = delta_det(inst);
  rep.c_leading = build_P(inst.rho_m(), inst).leading();
  rep.det_u = bareiss_det(phi_matrix(inst, [&](unsigned l) { return build_P_t(l, inst); }));
  rep.det_w = bareiss_det(phi_matrix(inst, [&](unsigned l) { return build_A(l, inst); }));
  rep.E = E_factor(inst);
  rep.delta_matches = abs(rep.delta) == abs(rep.c_leading * rep.det_u);
  rep.det_u_matches = abs(rep.det_u) == abs(rep.E * rep.det_w);
  rep.sign_delta = sign_of_ratio(rep.delta, rep.c_leading * rep.det_u);
  rep.sign_u = sign_of_ratio(rep.det_u, rep.E * rep.det_w);
  return rep;
}

// ---------------------------------------------------------------- C_{u,m}

inline constexpr unsigned kMaxPermutationSize = 6;

/// Degree of homogeneity of C_{u,m} in alpha.
inline long homogeneity_degree(unsigned u, const Instance& inst) {
  const long rho = inst.rho(), m = inst.m(), n = inst.n();
  long pairs = 0;
  for (unsigned a = 0; a < inst.d(); ++a) {
    const long ra = inst.shifts()[a].r;
    pairs += ra * (ra - 1) / 2;
    for (unsigned b = a + 1; b < inst.d(); ++b) pairs += ra * static_cast<long>(inst.shifts()[b].r);
  }
  return rho * m * (static_cast<long>(u) + 1) + rho * rho * m * m * n + rho * rho * (m * (m - 1) / 2) + m * pairs;
}

/// Exponent of prod_i alpha_i dividing C_{u,m}.
inline long monomial_exponent(unsigned u, const Instance& inst) {
  const long rho = inst.rho();
  return rho * (static_cast<long>(u) + 1) + rho * rho * static_cast<long>(inst.n()) + rho * (rho - 1) / 2;
}

inline long collision_exponent(const Instance& inst) {
  const long rho = inst.rho();
  return (2 * static_cast<long>(inst.n()) + 1) * rho * rho;
}

namespace detail {

/// C_{u,m} = psi(P_hat_u) via the Leibniz expansion of the rho m x rho m
/// matrix (phi_v(t^{u+e} prod_k (t - alpha_k)^{rho n}))_{v,e}; the sum over
/// permutations is exactly the Vandermonde factor of P_hat_u.
template <class A>
A compute_C_generic(unsigned u, const Instance& inst, const std::vector<A>& alphas) {
  const unsigned size = inst.rho_m();
  if (size > kMaxPermutationSize)
    throw InvalidInput("compute_C: rho*m=" + std::to_string(size) + " exceeds the permutation guard " +
                       std::to_string(kMaxPermutationSize));
  Poly<A> base(A(Rat(1)), Var::t);
  for (const A& a : alphas) base *= pow(Poly<A>::linear(a, Var::t), inst.rho() * inst.n());
  const auto cs = cells(inst);
  Matrix<A> mat(size, std::vector<A>(size));
  for (unsigned e = 0; e < size; ++e) {
    const Poly<A> f = base.shifted(static_cast<int>(u + e));
    for (std::size_t r = 0; r < cs.size(); ++r)
      mat[r][e] = apply_phi(alphas[cs[r].i - 1], inst.shift(cs[r].j).x, cs[r].s, f);
  }
  return leibniz_det(mat);
}

}  // namespace detail

inline Rat compute_C(unsigned u, const Instance& inst) {
  return detail::compute_C_generic<Rat>(u, inst, inst.alphas());
}

/// C_{u,m} with alpha_{i2} replaced by alpha_{i1} + eps, truncated above eps^max_degree.
inline EpsPoly compute_C_collide(unsigned u, const Instance& inst, unsigned i1, unsigned i2, int max_degree) {
  if (i1 < 1 || i2 < 1 || i1 > inst.m() || i2 > inst.m() || i1 == i2)
    throw InvalidInput("collision indices must be two distinct alpha positions");
  std::vector<EpsPoly> alphas;
  for (const Rat& a : inst.alphas()) alphas.emplace_back(std::vector<Rat>{a}, max_degree);
  alphas[i2 - 1] = EpsPoly::shifted_by_eps(inst.alpha(i1), max_degree);
  return detail::compute_C_generic<EpsPoly>(u, inst, alphas);
}

struct CollisionReport {
  std::string instance;
  unsigned u = 0;
  long required = 0;               // (2n+1) rho^2
  int truncation = 0;
  std::optional<int> valuation;    // empty: zero up to the truncation
  bool pass = false;
};

inline CollisionReport collision_check(unsigned u, const Instance& inst, unsigned i1 = 1, unsigned i2 = 2) {
  CollisionReport rep;
  rep.instance = inst.describe();
  rep.u = u;
  rep.required = collision_exponent(inst);
  rep.truncation = static_cast<int>(rep.required) + 2;
  rep.valuation = compute_C_collide(u, inst, i1, i2, rep.truncation).valuation();
  rep.pass = !rep.valuation || *rep.valuation >= rep.required;
  return rep;
}

inline Instance scaled_instance(const Instance& inst, const Rat& lambda) {
  std::vector<Rat> a;
  for (const Rat& x : inst.alphas()) a.push_back(x * lambda);
  return Instance(a, inst.shifts(), inst.n());
}

struct HomogeneityReport {
  long degree = 0;
  std::vector<Rat> lambdas;
  bool pass = false;
};

inline HomogeneityReport homogeneity_check(unsigned u, const Instance& inst, std::vector<Rat> lambdas = {Rat(2), Rat(3)}) {
  HomogeneityReport rep;
  rep.degree = homogeneity_degree(u, inst);
  rep.lambdas = lambdas;
  const Rat base = compute_C(u, inst);
  rep.pass = true;
  for (const Rat& lam : lambdas)
    rep.pass = rep.pass && compute_C(u, scaled_instance(inst, lam)) == pow(lam, rep.degree) * base;
  return rep;
}

// ---------------------------------------------------------------- c-recursion

/// psi_{1,x}(B_u) = det(phi_{1,x_j,s}(t^{u+e} (t-1)^{rho n}))_{(j,s), e}.
inline Rat psi_B(unsigned u, const std::vector<Shift>& shifts, unsigned n) {
  unsigned rho = 0;
  for (const auto& sh : shifts) rho += sh.r;
  const RatPoly base = pow(RatPoly::linear(Rat(1), Var::t), rho * n);
  Matrix<Rat> mat;
  for (const auto& sh : shifts)
    for (unsigned s = 1; s <= sh.r; ++s) {
      std::vector<Rat> row;
      for (unsigned e = 0; e < rho; ++e) row.push_back(apply_phi(Rat(1), sh.x, s, base.shifted(static_cast<int>(u + e))));
      mat.push_back(std::move(row));
    }
  return bareiss_det(mat);
}

struct RecursionReport {
  unsigned n = 0, u = 0;
  long degree = 0, monomial_exp = 0, collision_exp = 0;
  Rat c_m2;           // extracted c_{n,u,2}
  Rat c_m1_shifted;   // c_{n,u+rho(n+1),1}
  Rat psi_b;          // psi(B_u)
  Rat sign;           // (-1)^{rho^2 n}
  Rat rhs;
  bool factorization_ok = false;
  bool pass = false;
};

/// With alpha_1 = 1 fixed, C(1, a) is interpolated from D+1 exact values,
/// divided by a^{E1} and by (a-1)^{(2n+1) rho^2}; the quotient must be the
/// constant c_{n,u,2}, which is compared with the right-hand side of the
/// recursion computed from the m=1 constant and psi(B_u).
inline RecursionReport c_recursion_check(unsigned n, unsigned u, const std::vector<Shift>& shifts) {
  const Instance probe({Rat(1), Rat(2)}, shifts, n);
  if (probe.rho() > 3 || n > 2) throw InvalidInput("c_recursion_check supports rho <= 3 and n <= 2");
  RecursionReport rep;
  rep.n = n;
  rep.u = u;
  rep.degree = homogeneity_degree(u, probe);
  rep.monomial_exp = monomial_exponent(u, probe);
  rep.collision_exp = collision_exponent(probe);
  std::vector<Rat> xs, ys;
  for (long a = 2; a <= rep.degree + 2; ++a) {
    xs.emplace_back(a);
    ys.push_back(compute_C(u, Instance({Rat(1), Rat(a)}, shifts, n)));
  }
  const RatPoly C = interpolate(xs, ys, Var::x);
  bool ok = true;
  for (long k = 0; k < rep.monomial_exp; ++k) ok = ok && C.coeff(static_cast<int>(k)).is_zero();
  RatPoly reduced(Var::x);
  if (ok) {
    std::vector<Rat> rest;
    for (int k = static_cast<int>(rep.monomial_exp); k <= C.degree(); ++k) rest.push_back(C[static_cast<std::size_t>(k)]);
    auto [q, r] = divmod(RatPoly(rest, Var::x), pow(RatPoly::linear(Rat(1), Var::x), static_cast<unsigned>(rep.collision_exp)));
    ok = r.is_zero() && q.degree() == 0;
    reduced = q;
  }
  rep.factorization_ok = ok;
  rep.c_m2 = ok ? reduced[0] : Rat(0);
  rep.c_m1_shifted = compute_C(u + probe.rho() * (n + 1), Instance({Rat(1)}, shifts, n));
  rep.psi_b = psi_B(u, shifts, n);
  rep.sign = sign_power(static_cast<long>(probe.rho() * probe.rho() * n));
  rep.rhs = rep.sign * rep.c_m1_shifted * rep.psi_b;
  rep.pass = ok && rep.c_m2 == rep.rhs;
  return rep;
}

// ---------------------------------------------------------------- F and det M

/// F(y, m) = (-1)^m m! / prod_{j=0}^m (y+j+1).
inline Rat F_integral(const Rat& y, unsigned mm) {
  Rat den(1);
  for (unsigned j = 0; j <= mm; ++j) {
    const Rat f = y + Rat(static_cast<long>(j + 1));
    if (f.is_zero()) throw InvalidInput("F_integral: y=" + y.short_str() + " makes a divisor vanish");
    den *= f;
  }
  return sign_power(mm) * Rat(factorial(mm)) / den;
}

/// Rational function num/den in one variable with exact differentiation.
struct RatFunc {
  RatPoly num, den;
  RatFunc derivative() const { return {num.derivative() * den - num * den.derivative(), den * den}; }
  Rat eval(const Rat& x) const {
    const Rat d = den.eval(x);
    if (d.is_zero()) throw InvalidInput("rational function evaluated at a pole");
    return num.eval(x) / d;
  }
};

inline RatFunc nth_derivative(RatFunc f, unsigned k) {
  for (unsigned i = 0; i < k; ++i) f = f.derivative();
  return f;
}

inline unsigned total_rho(const std::vector<Shift>& shifts) {
  unsigned rho = 0;
  for (const auto& sh : shifts) rho += sh.r;
  return rho;
}

/// Q~(x) = prod_{j=1}^{rho + rho n} (x + j).
inline RatPoly Q_tilde(unsigned rho, unsigned n) {
  RatPoly q(Rat(1), Var::x);
  for (unsigned j = 1; j <= rho + rho * n; ++j) q *= RatPoly::linear(-Rat(static_cast<long>(j)), Var::x);
  return q;
}

/// P~_h(x) = prod_{j=1}^{h-1} (x+j) prod_{j'=h+1}^{rho} (x + j' + rho n).
inline RatPoly P_tilde(unsigned h, unsigned rho, unsigned n) {
  RatPoly p(Rat(1), Var::x);
  for (unsigned j = 1; j < h; ++j) p *= RatPoly::linear(-Rat(static_cast<long>(j)), Var::x);
  for (unsigned j = h + 1; j <= rho; ++j) p *= RatPoly::linear(-Rat(static_cast<long>(j + rho * n)), Var::x);
  return p;
}

inline void check_distinct_shifts(const std::vector<Shift>& shifts) {
  for (std::size_t a = 0; a < shifts.size(); ++a) {
    if (shifts[a].r == 0) throw InvalidInput("depth must be positive");
    for (std::size_t b = 0; b < a; ++b)
      if (shifts[a].x == shifts[b].x) throw InvalidInput("shifts must be distinct");
  }
}

/// prod_{i=1}^{rho-1} (i!)^2 prod_{i=1}^{rho-1} C(i + rho n, rho n) / prod_{i<j<=rho} (j - i).
inline Rat det_R_closed(unsigned rho, unsigned n) {
  Rat num(1), den(1);
  for (unsigned i = 1; i < rho; ++i) num *= Rat(Int(factorial(i) * factorial(i) * binomial(i + rho * n, rho * n)));
  for (unsigned i = 1; i <= rho; ++i)
    for (unsigned j = i + 1; j <= rho; ++j) den *= Rat(static_cast<long>(j - i));
  return num / den;
}

/// (-1)^{sum r(r-1)/2} prod_j prod_{s=0}^{r_j-1} s! prod_{i<j} (x_j - x_i)^{r_i r_j}.
inline Rat hermite_closed(const std::vector<Rat>& x, const std::vector<unsigned>& r) {
  long signexp = 0;
  Rat p(1);
  for (std::size_t j = 0; j < x.size(); ++j) {
    signexp += static_cast<long>(r[j]) * (static_cast<long>(r[j]) - 1) / 2;
    for (unsigned s = 0; s < r[j]; ++s) p *= Rat(factorial(s));
    for (std::size_t i = 0; i < j; ++i) p *= pow(x[j] - x[i], static_cast<long>(r[i] * r[j]));
  }
  return sign_power(signexp) * p;
}

/// Confluent Vandermonde matrix (d^{s-1}/dx^{s-1} x^i at x_j), rows i, columns (j, s).
inline Matrix<Rat> hermite_matrix(const std::vector<Rat>& x, const std::vector<unsigned>& r) {
  unsigned rho = 0;
  for (unsigned v : r) rho += v;
  Matrix<Rat> h(rho, std::vector<Rat>());
  for (unsigned i = 0; i < rho; ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      for (unsigned s = 1; s <= r[j]; ++s) {
        if (i + 1 < s) {
          h[i].emplace_back(0);
        } else {
          const unsigned p = i + 1 - s;
          h[i].push_back(Rat(factorial(i)) / Rat(factorial(p)) * pow(x[j], static_cast<long>(p)));
        }
      }
  return h;
}

struct DetPair {
  Rat direct, closed;
  bool abs_equal() const { return abs(direct) == abs(closed); }
  int sign() const { return sign_of_ratio(direct, closed); }
};

inline DetPair hermite_det_pair(const std::vector<Rat>& x, const std::vector<unsigned>& r) {
  if (x.size() != r.size()) throw InvalidInput("hermite_det_pair: x and r differ in length");
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (r[a] == 0) throw InvalidInput("hermite_det_pair: multiplicities must be positive");
    for (std::size_t b = 0; b < a; ++b)
      if (x[a] == x[b]) throw InvalidInput("hermite_det_pair: nodes must be distinct");
  }
  return {bareiss_det(hermite_matrix(x, r)), hermite_closed(x, r)};
}

struct MPairReport {
  DetPair M;          // det(M) direct vs closed
  Rat det_N_direct;   // det of (d^{s-1} P~_h(x_j)) computed from the matrix
  Rat det_N_closed;
  Rat prefactor;      // (rho n)!^rho / prod Q~(x_j)^{r_j}, unsigned
  bool N_abs_equal = false;
  bool prefactor_abs_equal = false;  // |det M| == prefactor * |det N direct|
  bool nonzero = false;
  bool pass() const { return M.abs_equal() && N_abs_equal && prefactor_abs_equal && nonzero; }
};

inline MPairReport det_M_pair(const std::vector<Shift>& shifts, unsigned n) {
  check_distinct_shifts(shifts);
  const unsigned rho = total_rho(shifts);
  const unsigned rn = rho * n;
  Matrix<Rat> M, N;
  for (const auto& sh : shifts) {
    const Rat& xj = sh.x.value();
    for (unsigned s = 1; s <= sh.r; ++s) {
      std::vector<Rat> mrow, nrow;
      for (unsigned h = 1; h <= rho; ++h) {
        // F(x + h - 1, rho n) = (-1)^{rho n} (rho n)! / prod_{k=0}^{rho n} (x + h + k)
        RatPoly den(Rat(1), Var::x);
        for (unsigned k = 0; k <= rn; ++k) den *= RatPoly::linear(-Rat(static_cast<long>(h + k)), Var::x);
        const RatFunc F{RatPoly(sign_power(rn) * Rat(factorial(rn)), Var::x), den};
        mrow.push_back(sign_power(s - 1) * nth_derivative(F, s - 1).eval(xj));
        RatPoly p = P_tilde(h, rho, n);
        for (unsigned k = 1; k < s; ++k) p = p.derivative();
        nrow.push_back(p.eval(xj));
      }
      M.push_back(std::move(mrow));
      N.push_back(std::move(nrow));
    }
  }
  MPairReport rep;
  rep.M.direct = bareiss_det(M);
  rep.det_N_direct = bareiss_det(N);

  std::vector<Rat> xs;
  std::vector<unsigned> rs;
  long sq = 0;
  for (const auto& sh : shifts) {
    xs.push_back(sh.x.value());
    rs.push_back(sh.r);
    sq += static_cast<long>(sh.r) * (static_cast<long>(sh.r) - 1) / 2;
  }
  rep.det_N_closed = det_R_closed(rho, n) * hermite_closed(xs, rs);
  const RatPoly Q = Q_tilde(rho, n);
  Rat qprod(1);
  for (const auto& sh : shifts) {
    const Rat q = Q.eval(sh.x.value());
    if (q.is_zero()) throw InvalidInput("det_M_pair: a shift makes Q~ vanish");
    qprod *= pow(q, sh.r);
  }
  rep.prefactor = pow(Rat(factorial(rn)), rho) / abs(qprod);
  const Rat sign = sign_power(static_cast<long>(rho * rho * n) + sq);
  rep.M.closed = sign * pow(Rat(factorial(rn)), rho) / qprod * rep.det_N_closed;
  rep.N_abs_equal = abs(rep.det_N_direct) == abs(rep.det_N_closed);
  rep.prefactor_abs_equal = abs(rep.M.direct) == rep.prefactor * abs(rep.det_N_direct);
  rep.nonzero = !rep.M.direct.is_zero();
  return rep;
}

// ---------------------------------------------------------------- N tilde

struct VandermondeNReport {
  unsigned rho = 0, n = 0;
  Rat det_direct, det_closed;
  Rat det_R_direct, det_R_from_N, det_R_closed;
  bool triangular = false;
  bool pass = false;
};

inline VandermondeNReport vandermonde_N_check(unsigned rho, unsigned n) {
  if (rho == 0 || n == 0) throw InvalidInput("vandermonde_N_check needs positive rho and n");
  VandermondeNReport rep;
  rep.rho = rho;
  rep.n = n;
  std::vector<RatPoly> P;
  for (unsigned h = 1; h <= rho; ++h) P.push_back(P_tilde(h, rho, n));
  // Row h, column i: P~_h(-i).
  Matrix<Rat> Nt(rho, std::vector<Rat>(rho));
  rep.triangular = true;
  for (unsigned h = 1; h <= rho; ++h)
    for (unsigned i = 1; i <= rho; ++i) {
      Nt[h - 1][i - 1] = P[h - 1].eval(-Rat(static_cast<long>(i)));
      if (h > i && !Nt[h - 1][i - 1].is_zero()) rep.triangular = false;
      if (h == i && Nt[h - 1][i - 1].is_zero()) rep.triangular = false;
    }
  rep.det_direct = bareiss_det(Nt);
  Rat closed = sign_power(static_cast<long>(rho * (rho - 1) / 2));
  for (unsigned i = 1; i < rho; ++i) closed *= Rat(Int(factorial(i) * factorial(i) * binomial(i + rho * n, rho * n)));
  rep.det_closed = closed;
  // R: row h holds the coefficients of P~_h.
  Matrix<Rat> R(rho, std::vector<Rat>(rho));
  for (unsigned h = 0; h < rho; ++h)
    for (unsigned k = 0; k < rho; ++k) R[h][k] = P[h].coeff(static_cast<int>(k));
  rep.det_R_direct = bareiss_det(R);
  Rat V(1);
  for (unsigned i = 1; i <= rho; ++i)
    for (unsigned j = i + 1; j <= rho; ++j) V *= Rat(-static_cast<long>(j)) - Rat(-static_cast<long>(i));
  rep.det_R_from_N = rep.det_direct / V;
  rep.det_R_closed = det_R_closed(rho, n);
  rep.pass = rep.triangular && rep.det_direct == rep.det_closed && rep.det_R_direct == rep.det_R_from_N &&
             abs(rep.det_R_direct) == abs(rep.det_R_closed);
  return rep;
}

}  // namespace lerchpade
