#include "logitprice/demand.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "logitprice/error.hpp"
#include "logitprice/oracle.hpp"
#include "support/oracles.hpp"

namespace logitprice {
namespace {

using testing::rel_err;

const LogitParams kBase = validate_params(1000.0, -6.0, 0.3);

TEST(ValidateParams, AcceptsBaseline) {
  const LogitParams p = validate_params(1000.0, -6.0, 0.3);
  EXPECT_EQ(p.mu(), 1000.0);
  EXPECT_EQ(p.alpha(), -6.0);
  EXPECT_EQ(p.theta(), 0.3);
}

TEST(ValidateParams, StrictExcludesAlphaBoundary) {
  try {
    validate_params(1000.0, -2.0, 0.3);
    FAIL() << "alpha = -2 accepted in strict mode";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.field(), "alpha");
  }
}

TEST(ValidateParams, RelaxedAcceptsNegativeAlpha) {
  EXPECT_NO_THROW(validate_params(1000.0, -1.5, 0.3, Validation::kRelaxed));
  EXPECT_NO_THROW(validate_params(1000.0, -2.0, 0.3, Validation::kRelaxed));
  EXPECT_THROW(validate_params(1000.0, 0.0, 0.3, Validation::kRelaxed),
               DomainError);
}

TEST(ValidateParams, NamesOffendingField) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  const struct {
    double mu, alpha, theta;
    const char* field;
  } cases[] = {
      {0.0, -6.0, 0.3, "mu"},    {-1.0, -6.0, 0.3, "mu"},
      {nan, -6.0, 0.3, "mu"},    {1000.0, -6.0, 0.0, "theta"},
      {1000.0, -6.0, -0.3, "theta"}, {1000.0, -6.0, inf, "theta"},
      {1000.0, nan, 0.3, "alpha"},   {1000.0, -inf, 0.3, "alpha"},
  };
  for (const auto& c : cases) {
    try {
      validate_params(c.mu, c.alpha, c.theta, Validation::kRelaxed);
      ADD_FAILURE() << "accepted " << c.mu << ", " << c.alpha << ", " << c.theta;
    } catch (const DomainError& e) {
      EXPECT_EQ(e.field(), c.field);
    }
  }
}

TEST(Share, KnownValues) {
  EXPECT_DOUBLE_EQ(share(kBase, 20.0), 0.5);
  EXPECT_NEAR(share(kBase, 15.6448), 0.78694, 5e-6);
  EXPECT_EQ(share(kBase, 1e6), 0.0);
  EXPECT_EQ(share(kBase, -1e6), 1.0);
}

TEST(Demand, KnownValues) {
  EXPECT_DOUBLE_EQ(demand(kBase, 20.0), 500.0);
  EXPECT_NEAR(demand(kBase, 15.6448), 786.94, 0.005);
  // 1000 e^6 / (1 + e^6), mpmath at 40 digits.
  EXPECT_NEAR(demand(kBase, 0.0), 997.5273768433652, 1e-10);
}

TEST(Demand, MatchesLiteralFormula) {
  for (double p = -20.0; p <= 80.0; p += 0.37) {
    const long double want = testing::literal_demand(1000.0L, -6.0L, 0.3L, p);
    EXPECT_LE(rel_err(demand(kBase, p), static_cast<double>(want)), 1e-14)
        << "p = " << p;
  }
}

TEST(DemandD1, KnownValues) {
  EXPECT_NEAR(demand_d1(kBase, 20.0), -75.0, 1e-12);
  EXPECT_NEAR(demand_d1(kBase, 0.0), -0.7399527874080143, 1e-14);
  // mpmath value of -mu theta s (1 - s) at p = 15.6448.
  EXPECT_NEAR(demand_d1(kBase, 15.6448), -50.30015600450020, 1e-10);
}

TEST(DemandD2, KnownValues) {
  EXPECT_EQ(demand_d2(kBase, 20.0), 0.0);
  EXPECT_NEAR(demand_d2(kBase, 10.0), -3.680241719484913, 1e-12);
  const double tail = demand_d2(kBase, 200.0);
  EXPECT_GT(tail, 0.0);
  EXPECT_LT(tail, 1e-20);
}

TEST(DemandD2, SingleSignChangeAtInflection) {
  const double p_inf = inflection_price(kBase);
  const int n = 30001;
  int changes = 0;
  double lo = 0.0;
  double prev = demand_d2(kBase, 0.0);
  for (int i = 1; i < n; ++i) {
    const double p = 3.0 * p_inf * i / (n - 1);
    const double v = demand_d2(kBase, p);
    if ((prev < 0.0 && v >= 0.0) || (prev > 0.0 && v <= 0.0)) {
      ++changes;
      lo = 3.0 * p_inf * (i - 1) / (n - 1);
    }
    prev = v;
  }
  ASSERT_EQ(changes, 1);
  double hi = lo + 3.0 * p_inf / (n - 1);
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    (demand_d2(kBase, mid) < 0.0 ? lo : hi) = mid;
  }
  EXPECT_LE(rel_err(0.5 * (lo + hi), p_inf), 1e-9);
}

TEST(Elasticity, KnownValues) {
  EXPECT_DOUBLE_EQ(elasticity(kBase, 20.0), -3.0);
  EXPECT_NEAR(elasticity(kBase, 15.6448), -1.0, 1e-5);
  EXPECT_EQ(elasticity(kBase, 0.0), 0.0);
}

TEST(InflectionPrice, KnownValues) {
  EXPECT_DOUBLE_EQ(inflection_price(kBase), 20.0);
  EXPECT_DOUBLE_EQ(inflection_price(validate_params(1.0, -7.0, 0.1)), 70.0);
  EXPECT_DOUBLE_EQ(
      inflection_price(validate_params(1.0, -2.0, 1.0, Validation::kRelaxed)),
      2.0);
}

TEST(Revenue, KnownValues) {
  EXPECT_DOUBLE_EQ(revenue(kBase, 20.0), 10000.0);
  EXPECT_NEAR(revenue(kBase, 15.6448), 12311.47, 0.005);
  EXPECT_EQ(revenue(kBase, 0.0), 0.0);
}

TEST(RevenueDerivatives, KnownValues) {
  // mu (1/2 + alpha/4) at the inflection price.
  EXPECT_NEAR(revenue_derivatives(kBase, 20.0).first, -1000.0, 1e-9);
  EXPECT_LE(std::abs(revenue_derivatives(kBase, 15.644804529868833).first),
            1e-8);
  const double far = revenue_derivatives(kBase, 100.0).first;
  EXPECT_LT(far, 0.0);
  EXPECT_LE(rel_err(far, -1.094789017756854e-06), 1e-9);
}

TEST(DemandProperties, BoundedAndLinearInMu) {
  for (const auto& rp : testing::random_params(200, 11, -12.0, -2.001)) {
    const LogitParams params = validate_params(1000.0, rp.alpha, rp.theta);
    const double p_inf = inflection_price(params);
    for (int i = 0; i <= 50; ++i) {
      const double p = 3.0 * p_inf * i / 50;
      const double s = share(params, p);
      EXPECT_GT(s, 0.0);
      EXPECT_LT(s, 1.0);
      const double d = demand(params, p);
      for (double k : {2.0, 10.0, 1000.0}) {
        EXPECT_DOUBLE_EQ(demand(params.with_mu(1000.0 * k), p), k * d);
      }
      EXPECT_LT(demand_d1(params, p), 0.0);
    }
  }
}

TEST(DemandProperties, FiniteDifferencesAgree) {
  for (const auto& rp : testing::random_params(100, 12, -12.0, -2.001)) {
    const LogitParams params = validate_params(1000.0, rp.alpha, rp.theta);
    const DerivativeGaps gaps = finite_difference_gaps(params);
    EXPECT_LE(gaps.d1, 1e-6);
    EXPECT_LE(gaps.d2, 1e-5);
  }
}

TEST(ElasticityProperties, StrictlyDecreasingAndBounded) {
  for (const auto& rp : testing::random_params(20, 13, -12.0, -2.001)) {
    const LogitParams params = validate_params(1000.0, rp.alpha, rp.theta);
    const double hi = 3.0 * inflection_price(params);
    double prev = elasticity(params, 0.0);
    for (int i = 1; i < 10000; ++i) {
      const double p = hi * i / 9999;
      const double e = elasticity(params, p);
      EXPECT_LT(e, prev) << "p = " << p;
      EXPECT_LT(e, 0.0);
      EXPECT_GT(e, -p * params.theta());
      prev = e;
    }
  }
}

TEST(ElasticityProperties, HalfAlphaAtInflection) {
  for (const auto& rp : testing::random_params(1000, 14, -12.0, -2.001)) {
    const LogitParams params = validate_params(1000.0, rp.alpha, rp.theta);
    EXPECT_LE(rel_err(elasticity(params, inflection_price(params)),
                      0.5 * rp.alpha),
              1e-12);
  }
}

TEST(DemandProperties, FiniteForHugeExponents) {
  const LogitParams params = validate_params(1000.0, -6.0, 1.0);
  for (double x : {-1e4, -800.0, -40.0, 40.0, 800.0, 1e4}) {
    const double p = x + 6.0;
    for (double v : {share(params, p), demand(params, p), demand_d1(params, p),
                     demand_d2(params, p), elasticity(params, p),
                     revenue(params, p), revenue_derivatives(params, p).first,
                     revenue_derivatives(params, p).second}) {
      EXPECT_TRUE(std::isfinite(v)) << "x = " << x;
    }
  }
}

}  // namespace
}  // namespace logitprice
