#include "logitprice/calibration.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "logitprice/error.hpp"
#include "support/oracles.hpp"

namespace logitprice {
namespace {

using testing::rel_err;

const LogitParams kBase = validate_params(1000.0, -6.0, 0.3);

std::vector<Observation> synthesize(const LogitParams& params,
                                    const std::vector<double>& prices) {
  std::vector<Observation> obs;
  for (double p : prices) obs.push_back({p, demand(params, p)});
  return obs;
}

std::vector<double> one_to_twenty() {
  std::vector<double> p;
  for (int i = 1; i <= 20; ++i) p.push_back(i);
  return p;
}

TEST(FitFixedMu, NoiseFreeRecovery) {
  const CalibrationFit f = fit_fixed_mu(synthesize(kBase, one_to_twenty()), 1000.0);
  EXPECT_LE(rel_err(f.params.alpha(), -6.0), 1e-9);
  EXPECT_LE(rel_err(f.params.theta(), 0.3), 1e-9);
  EXPECT_EQ(f.params.mu(), 1000.0);
  EXPECT_EQ(f.n_obs, 20);
  EXPECT_LT(f.sse, 1e-15);
  EXPECT_TRUE(f.strict_valid);
}

TEST(FitFixedMu, TwoPointLine) {
  const auto obs = synthesize(kBase, {10.0, 20.0});
  // Line through the two linearized points.
  const double z1 = std::log(1000.0 / obs[0].quantity - 1.0);
  const double z2 = std::log(1000.0 / obs[1].quantity - 1.0);
  const double theta = (z2 - z1) / 10.0;
  const double alpha = z1 - theta * 10.0;
  const CalibrationFit f = fit_fixed_mu(obs, 1000.0);
  EXPECT_NEAR(f.params.alpha(), alpha, 1e-12);
  EXPECT_NEAR(f.params.theta(), theta, 1e-14);
  EXPECT_NEAR(f.params.alpha(), -6.0, 1e-12);
  EXPECT_NEAR(f.params.theta(), 0.3, 1e-13);
}

TEST(FitFixedMu, Errors) {
  EXPECT_THROW(fit_fixed_mu(synthesize(kBase, {5.0, 5.0, 5.0}), 1000.0),
               InsufficientDataError);
  EXPECT_THROW(fit_fixed_mu(synthesize(kBase, {5.0}), 1000.0),
               InsufficientDataError);
  EXPECT_THROW(fit_fixed_mu({}, 1000.0), InsufficientDataError);
  // Quantity at or above mu.
  EXPECT_THROW(fit_fixed_mu(std::vector<Observation>{{1.0, 999.0}, {2.0, 500.0}}, 999.0),
               DomainError);
  EXPECT_THROW(fit_fixed_mu(std::vector<Observation>{{1.0, 1000.0 * (1 - 1e-10)},
                                                     {2.0, 500.0}},
                            1000.0),
               DomainError);
  // Demand rising with price.
  EXPECT_THROW(fit_fixed_mu(std::vector<Observation>{{1.0, 100.0}, {2.0, 200.0}}, 1000.0),
               DegenerateFitError);
  // Positive alpha (demand below half the market at price zero).
  EXPECT_THROW(fit_fixed_mu(std::vector<Observation>{{0.0, 400.0}, {2.0, 300.0}}, 1000.0),
               DegenerateFitError);
  try {
    fit_fixed_mu(std::vector<Observation>{{1.0, -3.0}, {2.0, 500.0}}, 1000.0);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.field(), "quantity");
  }
}

TEST(Fit, RecoversMarketSize) {
  const CalibrationFit f = fit(synthesize(kBase, one_to_twenty()), 100.0);
  EXPECT_LE(rel_err(f.params.mu(), 1000.0), 1e-4);
  EXPECT_LE(rel_err(f.params.alpha(), -6.0), 1e-6);
  EXPECT_LE(rel_err(f.params.theta(), 0.3), 1e-6);
}

TEST(Fit, BracketExcludingTruthStopsAtBoundary) {
  const auto obs = synthesize(kBase, one_to_twenty());
  double q_max = 0.0;
  for (const auto& o : obs) q_max = std::max(q_max, o.quantity);
  const CalibrationFit f = fit(obs, 1.002);
  EXPECT_NEAR(f.params.mu(), 1.002 * q_max, 1e-6 * q_max);
  EXPECT_GT(f.sse, 1.0);
}

TEST(Fit, Errors) {
  EXPECT_THROW(fit({}, 100.0), InsufficientDataError);
  EXPECT_THROW(fit(synthesize(kBase, {3.0, 3.0}), 100.0), InsufficientDataError);
  EXPECT_THROW(fit(synthesize(kBase, one_to_twenty()), 1.0), DomainError);
  // Increasing demand is degenerate for every mu.
  EXPECT_THROW(fit(std::vector<Observation>{{1.0, 100.0}, {2.0, 200.0}}, 10.0),
               SearchFailureError);
}

TEST(Fit, SseNonIncreasingInIterations) {
  const auto obs = synthesize(kBase, one_to_twenty());
  // The first probes of the wide bracket land where the fitted alpha is
  // positive; start from the first iteration count that yields a fit.
  int first = 0;
  while (true) {
    try {
      fit(obs, 100.0, first);
      break;
    } catch (const SearchFailureError&) {
      ASSERT_LT(++first, 40);
    }
  }
  double prev = fit(obs, 100.0, first).sse;
  for (int it = first + 1; it <= 80; ++it) {
    const double sse = fit(obs, 100.0, it).sse;
    EXPECT_LE(sse, prev) << "iterations " << it;
    prev = sse;
  }
}

TEST(Fit, RoundTripOnRandomParams) {
  for (const auto& rp : testing::random_params(40, 41, -12.0, -2.001, 0.05, 3.0)) {
    const LogitParams params = validate_params(1000.0, rp.alpha, rp.theta);
    const double p_inf = inflection_price(params);
    std::vector<double> prices;
    for (int i = 0; i < 12; ++i) prices.push_back(p_inf * (0.5 + i / 11.0));
    const CalibrationFit f = fit(synthesize(params, prices), 100.0);
    EXPECT_LE(rel_err(f.params.mu(), 1000.0), 1e-4)
        << "alpha " << rp.alpha << " theta " << rp.theta;
    EXPECT_LE(rel_err(f.params.alpha(), rp.alpha), 1e-6);
    EXPECT_LE(rel_err(f.params.theta(), rp.theta), 1e-6);
  }
}

TEST(Fit, RelaxedValidityReported) {
  const LogitParams shallow = validate_params(1000.0, -1.0, 0.5, Validation::kRelaxed);
  const CalibrationFit f =
      fit_fixed_mu(synthesize(shallow, {0.5, 1.0, 2.0, 3.0, 4.0}), 1000.0);
  EXPECT_FALSE(f.strict_valid);
  EXPECT_NEAR(f.params.alpha(), -1.0, 1e-10);
}

}  // namespace
}  // namespace logitprice
