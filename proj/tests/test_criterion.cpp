#include <gtest/gtest.h>

#include <cmath>
#include <iostream>

#include "lerchpade/lerchpade.hpp"

using namespace lerchpade;

namespace {

constexpr long kPrec = 160;

CriterionInput simple(const Rat& beta, const Rat& x = Rat(0)) {
  return CriterionInput{{Rat(1)}, {Shift{x, 1}}, beta, kPrec};
}

/// |a - b| < 10^-digits, judged on the enclosures.
bool close(const BigFloat& a, const BigFloat& b, int digits) {
  const BigFloat d = abs(a - b);
  return (BigFloat(pow(Rat(10), -digits), kPrec) - d).definitely_positive();
}

BigFloat L(const Rat& r) { return log_rat(r, kPrec); }
BigFloat B(const Rat& r) { return BigFloat(r, kPrec); }

}  // namespace

TEST(Criterion, VForBetaHundredMatchesClosedExpression) {
  const CriterionReport rep = compute_V(simple(Rat(100)));
  const BigFloat expect = L(Rat(100)) - B(Rat(3)) * L(Rat(2)) - B(Rat(1));
  EXPECT_TRUE(close(rep.V, expect, 20));
  EXPECT_NEAR(rep.V.mid_double(), 1.5257, 1e-4);
  EXPECT_EQ(rep.verdict, "independent-if-V-positive");
}

TEST(Criterion, VForBetaTenIsInconclusive) {
  const CriterionReport rep = compute_V(simple(Rat(10)));
  EXPECT_NEAR(rep.V.mid_double(), -0.7769, 1e-4);
  EXPECT_EQ(rep.verdict, "inconclusive");
}

TEST(Criterion, MuTermForHalfShift) {
  const CriterionReport a = compute_V(simple(Rat(100), Rat(0)));
  const CriterionReport b = compute_V(simple(Rat(100), Rat(1, 2)));
  // Only the mu(x) term and b = den(x) change: -2 log 2 and -(2 - 1).
  EXPECT_TRUE(close(b.V - a.V, -(B(Rat(2)) * L(Rat(2))) - B(Rat(1)), 30));
  bool found = false;
  for (const auto& t : b.terms)
    if (t.name.find("mu") != std::string::npos) {
      EXPECT_TRUE(close(t.value, -(B(Rat(2)) * L(Rat(2))), 30));
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Criterion, RejectsAlphaNotBelowBeta) {
  EXPECT_THROW(compute_V(simple(Rat(1))), InvalidInput);
  EXPECT_THROW(compute_V(CriterionInput{{Rat(3), Rat(-5)}, {Shift{Rat(0), 1}}, Rat(5), kPrec}), InvalidInput);
}

TEST(Criterion, TermsSumToV) {
  for (const Rat& beta : {Rat(100), Rat(-37, 2), Rat(1000)}) {
    const CriterionInput in{{Rat(1), Rat(-2, 3)}, {Shift{Rat(0), 1}, Shift{Rat(1, 3), 2}}, beta, kPrec};
    const CriterionReport rep = compute_V(in);
    BigFloat sum(Rat(0), kPrec);
    for (const auto& t : rep.terms) sum += t.value;
    const Rat tol = pow(Rat(2), 1 - kPrec / 2);
    EXPECT_TRUE((B(tol) - abs(sum - rep.V)).definitely_positive());
  }
}

TEST(Criterion, BetaDependenceIsOnlyThroughThreeTerms) {
  const std::vector<Rat> alphas{Rat(1), Rat(2)};
  const std::vector<Shift> shifts{{Rat(1, 2), 1}};
  BigFloat first(kPrec);
  bool have = false;
  for (long k = 0; k < 10; ++k) {
    const Rat beta = Rat(3) + Rat(7 * k * k + 1, 3);
    const CriterionInput in{alphas, shifts, beta, kPrec};
    const CriterionReport rep = compute_V(in);
    std::vector<Rat> point{Rat(1), Rat(1), Rat(2), beta};
    const Rat rm(static_cast<long>(in.rho_m()));
    const BigFloat rest = rep.V - L(abs(beta)) + B(rm) * projective_height(point, kPrec) -
                          B(rm) * L(std::max(in.norm_alpha(), abs(beta)));
    if (!have) {
      first = rest;
      have = true;
    } else {
      EXPECT_TRUE(close(rest, first, 30)) << k;
    }
  }
}

TEST(Criterion, MeasureForBetaHundred) {
  const CriterionReport rep = compute_measure(simple(Rat(100)), Rat(1, 2));
  EXPECT_NEAR(rep.A.mid_double(), 2.5257, 1e-4);
  EXPECT_NEAR(rep.U.mid_double(), 6.6846, 1e-4);
  EXPECT_NEAR(rep.mu_exponent.mid_double(), 8.98, 5e-3);
  EXPECT_TRUE((rep.mu_exponent - B(Rat(1))).definitely_positive());
  EXPECT_TRUE(rep.C_constant.definitely_positive());
  EXPECT_TRUE((B(Rat(1)) - rep.C_constant).definitely_positive());
  EXPECT_TRUE(rep.has_measure);
}

TEST(Criterion, MeasureMonotoneInEpsilon) {
  const CriterionInput in = simple(Rat(100));
  BigFloat prev = compute_measure(in, Rat(1, 2)).mu_exponent;
  for (const Rat& eps : {Rat(1, 4), Rat(1, 8), Rat(1, 100)}) {
    const BigFloat mu = compute_measure(in, eps).mu_exponent;
    EXPECT_TRUE((prev - mu).definitely_positive());
    prev = mu;
  }
  EXPECT_THROW(compute_measure(in, Rat(2)), InvalidInput);
  EXPECT_THROW(compute_measure(in, Rat(0)), InvalidInput);
  EXPECT_THROW(compute_measure(simple(Rat(10)), Rat(1, 100)), InvalidInput);
}

TEST(Criterion, LogDnOverNApproachesTheBound) {
  // The finite-place term is replaced by max_j(r_j) b rho m; log D_n / n must
  // settle near b rho m (within a few percent by n = 200).
  struct Case {
    std::vector<Shift> shifts;
    unsigned rho_m;
    double bound;
  };
  const std::vector<Case> cases{{{{Rat(1, 2), 1}}, 1, 2.0}, {{{Rat(0), 1}}, 1, 1.0}, {{{Rat(1, 3), 1}, {Rat(2, 3), 1}}, 2, 6.0}};
  for (const auto& c : cases)
    for (unsigned n : {200U, 400U, 800U}) {
      const double v = log_Dn_over_n(c.shifts, c.rho_m, n, 64).mid_double();
      std::cout << "[lcm] bound=" << c.bound << " n=" << n << " log D_n / n = " << v << "\n";
      EXPECT_LT(std::fabs(v - c.bound), 0.05 * c.bound);
    }
}

TEST(Criterion, TableShapeAndPublishedValues) {
  const auto rows = table_rows(96);
  ASSERT_EQ(rows.size(), 80U);
  EXPECT_EQ(rows.front().published_value, 3158);
  EXPECT_EQ(rows[16].g, 3);
  EXPECT_EQ(rows[16].published_value, 4427);
  EXPECT_EQ(rows.back().g, 6);
  EXPECT_EQ(rows.back().p, 7);
  EXPECT_EQ(rows.back().q, 4);
  EXPECT_EQ(rows.back().published_value, 94441);
  long sum = 0;
  for (const auto& r : rows) sum += r.published_value;
  EXPECT_EQ(sum, 2061558);
}

TEST(Criterion, TableThresholdsAndFirstTerm) {
  const BigFloat first = table_first_term(2, 2, 1, kPrec);
  const BigFloat expect = B(Rat(100)) * (L(Rat(2)) + L(Rat(2520)));
  EXPECT_TRUE(close(first, expect, 30));
  EXPECT_NEAR(first.mid_double(), 852.51, 0.01);
  EXPECT_NEAR(table_threshold(2, 2, 1, kPrec).mid_double(), 7270.18, 0.01);
  EXPECT_THROW(table_threshold(1, 2, 1, kPrec), InvalidInput);
}

TEST(Criterion, TableMonotoneInEachParameter) {
  const auto rows = table_rows(96);
  auto at = [&](std::size_t gi, std::size_t pi, std::size_t qi) { return rows[gi * 16 + pi * 4 + qi].computed; };
  for (std::size_t gi = 0; gi < 5; ++gi)
    for (std::size_t pi = 0; pi < 4; ++pi)
      for (std::size_t qi = 0; qi < 4; ++qi) {
        if (gi + 1 < 5) {
          EXPECT_TRUE((at(gi + 1, pi, qi) - at(gi, pi, qi)).definitely_positive());
        }
        if (pi + 1 < 4) {
          EXPECT_TRUE((at(gi, pi + 1, qi) - at(gi, pi, qi)).definitely_positive());
        }
        if (qi + 1 < 4) {
          EXPECT_TRUE((at(gi, pi, qi + 1) - at(gi, pi, qi)).definitely_positive());
        }
      }
}

TEST(Criterion, TableDeterministic) {
  const auto a = table_rows(96), b = table_rows(96);
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k].computed.to_string(25), b[k].computed.to_string(25));
}
