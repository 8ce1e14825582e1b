#pragma once

// Type-II Pade system of weight (n, ..., n) for the functions
// Phi_{s}(x_j, alpha_i / z), 1 <= s <= r_j, and verification of its order.
//
// Indices i (alphas), j (shifts) and s (depths) are 1-based throughout, as
// in the usual mathematical notation; l runs over 0..rho*m.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "lerchpade/errors.hpp"
#include "lerchpade/operators.hpp"
#include "lerchpade/poly.hpp"
#include "lerchpade/rat.hpp"
#include "lerchpade/series.hpp"

namespace lerchpade {

struct Shift {
  ShiftParam x;
  unsigned r = 1;
};

class Instance {
 public:
  Instance(std::vector<Rat> alphas, std::vector<Shift> shifts, unsigned n)
      : alphas_(std::move(alphas)), shifts_(std::move(shifts)), n_(n) {
    if (alphas_.empty()) throw InvalidInput("at least one alpha is required");
    if (shifts_.empty()) throw InvalidInput("at least one shift is required");
    if (n_ == 0) throw InvalidInput("n must be positive");
    for (std::size_t a = 0; a < alphas_.size(); ++a) {
      if (alphas_[a].is_zero()) throw InvalidInput("alpha_" + std::to_string(a + 1) + " is zero");
      for (std::size_t b = 0; b < a; ++b)
        if (alphas_[a] == alphas_[b]) throw InvalidInput("alphas must be pairwise distinct");
    }
    for (std::size_t a = 0; a < shifts_.size(); ++a) {
      const Rat& x = shifts_[a].x.value();
      if (x.sign() < 0 || x >= Rat(1)) throw InvalidInput("shift " + x.short_str() + " is outside [0,1)");
      if (shifts_[a].r == 0) throw InvalidInput("depth r_j must be positive");
      for (std::size_t b = 0; b < a; ++b)
        if ((x - shifts_[b].x.value()).is_integer()) throw InvalidInput("shifts must differ by non-integers");
      rho_ += shifts_[a].r;
    }
  }

  const std::vector<Rat>& alphas() const { return alphas_; }
  const std::vector<Shift>& shifts() const { return shifts_; }
  unsigned n() const { return n_; }
  unsigned m() const { return static_cast<unsigned>(alphas_.size()); }
  unsigned d() const { return static_cast<unsigned>(shifts_.size()); }
  unsigned rho() const { return rho_; }
  unsigned rho_m() const { return rho_ * m(); }
  const Rat& alpha(unsigned i) const { return alphas_.at(i - 1); }
  const Shift& shift(unsigned j) const { return shifts_.at(j - 1); }

  std::string describe() const {
    std::ostringstream os;
    os << "alphas=";
    for (std::size_t a = 0; a < alphas_.size(); ++a) os << (a ? "," : "") << alphas_[a].short_str();
    os << " shifts=";
    for (std::size_t a = 0; a < shifts_.size(); ++a)
      os << (a ? "," : "") << shifts_[a].x.value().short_str() << ":" << shifts_[a].r;
    os << " n=" << n_;
    return os.str();
  }

 private:
  std::vector<Rat> alphas_;
  std::vector<Shift> shifts_;
  unsigned n_;
  unsigned rho_ = 0;
};

/// One row of the approximation problem: the function Phi_s(x_j, alpha_i/z).
struct Cell {
  unsigned i, j, s;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Rows ordered with i outermost, then j, then s.
inline std::vector<Cell> cells(const Instance& inst) {
  std::vector<Cell> out;
  for (unsigned i = 1; i <= inst.m(); ++i)
    for (unsigned j = 1; j <= inst.d(); ++j)
      for (unsigned s = 1; s <= inst.shift(j).r; ++s) out.push_back({i, j, s});
  return out;
}

inline void check_l(unsigned l, const Instance& inst) {
  if (l > inst.rho_m()) throw InvalidInput("l=" + std::to_string(l) + " exceeds rho*m=" + std::to_string(inst.rho_m()));
}

inline void check_cell(const Cell& c, const Instance& inst) {
  if (c.i < 1 || c.i > inst.m() || c.j < 1 || c.j > inst.d() || c.s < 1 || c.s > inst.shift(c.j).r)
    throw InvalidInput("cell index out of range");
}

/// A_l(t) = t^l prod_i (t - alpha_i)^{rho n}.
inline RatPoly build_A(unsigned l, const Instance& inst) {
  check_l(l, inst);
  RatPoly a = RatPoly::monomial(Rat(1), static_cast<int>(l), Var::t);
  for (const auto& alpha : inst.alphas()) a *= pow(RatPoly::linear(alpha, Var::t), inst.rho() * inst.n());
  return a;
}

/// Apply every S_{n,x_j}, each r_j times, to a polynomial in t.
template <class C>
Poly<C> apply_S_chain(const Instance& inst, Poly<C> p) {
  for (const auto& sh : inst.shifts())
    for (unsigned k = 0; k < sh.r; ++k) p = apply_S(inst.n(), sh.x, p);
  return p;
}

/// P_l(t) as a polynomial in t (the same coefficients as P_l(z)).
inline RatPoly build_P_t(unsigned l, const Instance& inst) { return apply_S_chain(inst, build_A(l, inst)); }

inline RatPoly build_P(unsigned l, const Instance& inst) { return build_P_t(l, inst).with_var(Var::z); }

/// (P(z) - P(t)) / (z - t) as a polynomial in t whose coefficients are
/// polynomials in z: the coefficient of t^b is sum_{k>b} c_k z^{k-1-b}.
inline Poly<RatPoly> difference_quotient(const RatPoly& p) {
  std::vector<RatPoly> out;
  const int deg = p.degree();
  for (int b = 0; b < deg; ++b) {
    std::vector<Rat> zc(static_cast<std::size_t>(deg - b));
    for (int k = b + 1; k <= deg; ++k) zc[static_cast<std::size_t>(k - 1 - b)] = p[static_cast<std::size_t>(k)];
    out.emplace_back(std::move(zc), Var::z);
  }
  return Poly<RatPoly>(std::move(out), Var::t);
}

inline RatPoly build_P_lis_from(const RatPoly& P, const Cell& c, const Instance& inst) {
  RatPoly r = apply_phi(inst.alpha(c.i), inst.shift(c.j).x, c.s, difference_quotient(P));
  return r.with_var(Var::z);
}

inline RatPoly build_P_lis(unsigned l, const Cell& c, const Instance& inst) {
  check_l(l, inst);
  check_cell(c, inst);
  return build_P_lis_from(build_P(l, inst), c, inst);
}

inline unsigned default_terms(const Instance& inst) { return inst.n() + inst.rho_m() + 4; }

/// Coefficients of z^{-1} .. z^{-terms} of P_l(z) Phi_s(x_j, alpha_i/z) - P_{l,i,s}(z),
/// the coefficient of z^{-(k+1)} being phi(t^k P_l(t)).
inline TruncatedSeries remainder_series_from(const RatPoly& P, const Cell& c, const Instance& inst, unsigned terms) {
  std::vector<Rat> co;
  RatPoly tp = P.with_var(Var::t);
  for (unsigned k = 0; k < terms; ++k) {
    co.push_back(apply_phi(inst.alpha(c.i), inst.shift(c.j).x, c.s, tp));
    tp = tp.shifted(1);
  }
  return TruncatedSeries(1, std::move(co));
}

inline TruncatedSeries remainder_series(unsigned l, const Cell& c, const Instance& inst, unsigned terms) {
  check_l(l, inst);
  check_cell(c, inst);
  if (terms < inst.n() + 2) throw InvalidInput("remainder_series needs at least n+2 terms");
  return remainder_series_from(build_P(l, inst), c, inst, terms);
}

struct PadeSystem {
  Instance instance;
  std::vector<RatPoly> P;                         // index l
  std::map<std::pair<unsigned, Cell>, RatPoly> Pnum;  // (l, cell)
};

inline PadeSystem build_system(const Instance& inst) {
  PadeSystem sys{inst, {}, {}};
  for (unsigned l = 0; l <= inst.rho_m(); ++l) {
    sys.P.push_back(build_P(l, inst));
    for (const Cell& c : cells(inst)) sys.Pnum.emplace(std::make_pair(l, c), build_P_lis_from(sys.P.back(), c, inst));
  }
  return sys;
}

struct OrderCell {
  unsigned l;
  Cell cell;
  int deg_P;
  int deg_Pnum;
  std::optional<int> ord;  // first k with nonzero z^{-k}; empty if beyond the checked range
  std::vector<Rat> remainder_prefix;
};

struct OrderReport {
  std::string instance;
  unsigned n = 0;
  unsigned terms = 0;
  bool pass = false;
  int min_ord = 0;  // smallest observed order (terms+1 if none observed)
  std::vector<OrderCell> cells;
};

/// Checks deg P_l = rho m n + l, deg P_{l,i,s} <= rho m n + l, and that
/// P_l(z) Phi_s(x_j, alpha_i/z) - P_{l,i,s}(z) has order >= n+1 at infinity.
/// The Laurent product is formed directly from the series of Phi (so the
/// polynomial part must cancel against P_{l,i,s} exactly) and is compared
/// with the remainder_series formula. Throws on the first violation.
inline OrderReport verify_order(const Instance& inst, std::optional<unsigned> terms_opt = std::nullopt) {
  const unsigned terms = terms_opt.value_or(default_terms(inst));
  if (terms < inst.n() + 2) throw InvalidInput("verify_order needs at least n+2 terms");
  OrderReport rep;
  rep.instance = inst.describe();
  rep.n = inst.n();
  rep.terms = terms;
  rep.min_ord = static_cast<int>(terms) + 1;
  auto fail = [](unsigned l, const Cell& c, long k, const std::string& what) {
    std::ostringstream os;
    os << what << " at (l=" << l << ",i=" << c.i << ",j=" << c.j << ",s=" << c.s << ",k=" << k << ")";
    return VerificationFailure("pade_order", os.str());
  };
  const int base = static_cast<int>(inst.rho_m() * inst.n());
  for (unsigned l = 0; l <= inst.rho_m(); ++l) {
    const RatPoly P = build_P(l, inst);
    if (P.degree() != base + static_cast<int>(l)) throw fail(l, Cell{0, 0, 0}, P.degree(), "deg P_l != rho m n + l");
    for (const Cell& c : cells(inst)) {
      const RatPoly Pn = build_P_lis_from(P, c, inst);
      if (Pn.degree() > base + static_cast<int>(l)) throw fail(l, c, Pn.degree(), "deg P_lis exceeds rho m n + l");
      const Rat& alpha = inst.alpha(c.i);
      const ShiftParam& x = inst.shift(c.j).x;
      // Series coefficients of Phi_s(x, alpha/z): g_k for z^{-(k+1)}.
      const int degP = P.degree();
      std::vector<Rat> g;
      for (int k = 0; k <= degP + static_cast<int>(terms); ++k)
        g.push_back(pow(alpha, k + 1) * pow(shift_divisor(k, x), -static_cast<long>(c.s)));
      auto product_coeff = [&](int e) {  // coefficient of z^e in P(z) * Phi
        Rat acc;
        for (int j = std::max(0, e + 1); j <= degP; ++j) acc += P[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(j - e - 1)];
        return acc;
      };
      for (int e = 0; e < degP; ++e) {
        if (product_coeff(e) != Pn.coeff(e)) throw fail(l, c, e, "polynomial part does not cancel");
      }
      if (Pn.degree() >= degP && !Pn.coeff(degP).is_zero()) throw fail(l, c, degP, "polynomial part does not cancel");
      const TruncatedSeries R = remainder_series_from(P, c, inst, terms);
      OrderCell oc{l, c, P.degree(), Pn.degree(), R.ord_inf(), R.coeffs()};
      for (unsigned k = 1; k <= terms; ++k) {
        if (product_coeff(-static_cast<int>(k)) != R.coeff(static_cast<int>(k)))
          throw fail(l, c, k, "remainder formula disagrees with the Laurent product");
      }
      for (unsigned k = 1; k <= inst.n(); ++k)
        if (!R.coeff(static_cast<int>(k)).is_zero()) throw fail(l, c, k, "nonzero remainder coefficient below order n+1");
      if (oc.ord) rep.min_ord = std::min(rep.min_ord, *oc.ord);
      rep.cells.push_back(std::move(oc));
    }
  }
  rep.pass = true;
  return rep;
}

}  // namespace lerchpade
