#pragma once

// JSON views of the library's values and reports. Rationals are "num/den"
// strings, polynomials are arrays of coefficient strings in ascending degree,
// and interval values carry their midpoint and error bound as decimal strings.

#include <string>
#include <vector>

#include "json.hpp"
#include "lerchpade/criterion.hpp"
#include "lerchpade/determinant.hpp"
#include "lerchpade/numeric.hpp"
#include "lerchpade/pade.hpp"

namespace lerchpade {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rat& r) { return r.str(); }

inline Json to_json(const RatPoly& p) {
  Json a = Json::array();
  for (int k = 0; k <= p.degree(); ++k) a.push_back(p[static_cast<std::size_t>(k)].str());
  return a;
}

inline Json to_json(const BigFloat& b, int digits = 40) {
  return Json{{"value", b.to_string(digits)}, {"error_bound", b.rad_string()}};
}

inline Json rats_json(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

inline Json shifts_json(const std::vector<Shift>& shifts) {
  Json a = Json::array();
  for (const auto& s : shifts) a.push_back(Json{{"x", s.x.value().str()}, {"r", s.r}});
  return a;
}

inline Json instance_json(const Instance& inst) {
  return Json{{"m", inst.m()},         {"d", inst.d()},       {"n", inst.n()},
              {"rho", inst.rho()},     {"rho_m", inst.rho_m()}, {"alphas", rats_json(inst.alphas())},
              {"shifts", shifts_json(inst.shifts())}};
}

inline Json cell_json(const Cell& c) { return Json{{"i", c.i}, {"j", c.j}, {"s", c.s}}; }

inline Json to_json(const PadeSystem& sys, unsigned terms) {
  const Instance& inst = sys.instance;
  Json P = Json::array();
  for (unsigned l = 0; l < sys.P.size(); ++l) P.push_back(Json{{"l", l}, {"degree", sys.P[l].degree()}, {"coeffs", to_json(sys.P[l])}});
  Json num = Json::array();
  for (const auto& [key, poly] : sys.Pnum) {
    const auto& [l, c] = key;
    const TruncatedSeries R = remainder_series_from(sys.P[l], c, inst, terms);
    num.push_back(Json{{"l", l},
                       {"cell", cell_json(c)},
                       {"coeffs", to_json(poly)},
                       {"remainder_start_order", R.start_order()},
                       {"remainder_prefix", rats_json(R.coeffs())}});
  }
  return Json{{"instance", instance_json(inst)}, {"terms", terms}, {"P", P}, {"P_num", num}};
}

inline Json to_json(const OrderReport& rep) {
  Json cs = Json::array();
  for (const auto& c : rep.cells) {
    cs.push_back(Json{{"l", c.l},
                      {"cell", cell_json(c.cell)},
                      {"deg_P", c.deg_P},
                      {"deg_P_num", c.deg_Pnum},
                      {"ord", c.ord ? Json(*c.ord) : Json(nullptr)},
                      {"remainder_prefix", rats_json(c.remainder_prefix)}});
  }
  return Json{{"instance", rep.instance}, {"n", rep.n},       {"terms", rep.terms},
              {"pass", rep.pass},         {"min_ord", rep.min_ord}, {"cells", cs}};
}

inline Json to_json(const DetChainReport& r) {
  return Json{{"instance", r.instance},
              {"delta", to_json(r.delta)},
              {"c_leading", to_json(r.c_leading)},
              {"det_u", to_json(r.det_u)},
              {"E", to_json(r.E)},
              {"det_w", to_json(r.det_w)},
              {"delta_matches", r.delta_matches},
              {"det_u_matches", r.det_u_matches},
              {"sign_delta", r.sign_delta},
              {"sign_u", r.sign_u},
              {"pass", r.pass()}};
}

inline Json to_json(const DetPair& p) {
  return Json{{"direct", to_json(p.direct)}, {"closed", to_json(p.closed)}, {"abs_equal", p.abs_equal()}, {"sign", p.sign()}};
}

inline Json to_json(const MPairReport& r) {
  return Json{{"M", to_json(r.M)},
              {"det_N_direct", to_json(r.det_N_direct)},
              {"det_N_closed", to_json(r.det_N_closed)},
              {"prefactor", to_json(r.prefactor)},
              {"N_abs_equal", r.N_abs_equal},
              {"prefactor_abs_equal", r.prefactor_abs_equal},
              {"nonzero", r.nonzero},
              {"pass", r.pass()}};
}

inline Json to_json(const VandermondeNReport& r) {
  return Json{{"rho", r.rho},
              {"n", r.n},
              {"det_direct", to_json(r.det_direct)},
              {"det_closed", to_json(r.det_closed)},
              {"det_R_direct", to_json(r.det_R_direct)},
              {"det_R_from_N", to_json(r.det_R_from_N)},
              {"det_R_closed", to_json(r.det_R_closed)},
              {"triangular", r.triangular},
              {"pass", r.pass}};
}

inline Json to_json(const CriterionReport& r) {
  Json terms = Json::array();
  for (const auto& t : r.terms) terms.push_back(Json{{"name", t.name}, {"value", to_json(t.value)}});
  Json j{{"V", to_json(r.V)}, {"c_x_v0", to_json(r.c_x_v0)}, {"verdict", r.verdict}, {"terms", terms}};
  if (r.has_measure) {
    j["A"] = to_json(r.A);
    j["U"] = to_json(r.U);
    j["mu_exponent"] = to_json(r.mu_exponent);
    j["C_constant"] = to_json(r.C_constant);
  }
  return j;
}

inline Json to_json(const TableRow& r) {
  return Json{{"g", r.g}, {"p", r.p}, {"q", r.q}, {"published_value", r.published_value},
              {"computed", to_json(r.computed, 20)}, {"difference", to_json(r.difference, 20)}};
}

inline Json to_json(const RemainderReport& r) {
  Json cs = Json::array();
  for (const auto& c : r.cells) {
    cs.push_back(Json{{"l", c.l},
                      {"cell", cell_json(c.cell)},
                      {"R", to_json(c.R)},
                      {"log_abs_R", to_json(c.log_abs_R)},
                      {"bound", to_json(c.bound)},
                      {"holds", c.holds},
                      {"routes_agree", c.routes_agree}});
  }
  return Json{{"instance", r.instance}, {"beta", to_json(r.beta)}, {"pass", r.pass}, {"cells", cs}};
}

inline Json to_json(const LinearFormReport& r) {
  Json thetas = Json::array();
  for (const auto& t : r.thetas) thetas.push_back(to_json(t));
  Json levels = Json::array();
  for (const auto& lv : r.levels) {
    levels.push_back(Json{{"height", lv.height},
                          {"min_form", to_json(lv.min_form)},
                          {"argmin", lv.argmin},
                          {"bound", to_json(lv.bound)},
                          {"exceeds", lv.exceeds}});
  }
  return Json{{"cap", r.cap},     {"vectors", r.vectors},   {"mu", to_json(r.mu)},
              {"C", to_json(r.C)}, {"thetas", thetas},       {"min_form", to_json(r.min_form)},
              {"argmin", r.argmin}, {"all_positive", r.all_positive}, {"levels", levels}};
}

}  // namespace lerchpade
