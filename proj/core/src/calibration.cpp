#include "logitprice/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "logitprice/error.hpp"
#include "logitprice/oracle.hpp"
#include "number_text.hpp"

namespace logitprice {
namespace {

constexpr double kSaturationGuard = 1e-9;
constexpr double kLowerMuFactor = 1.0001;

void check_observations(std::span<const Observation> obs) {
  for (const Observation& o : obs) {
    if (!std::isfinite(o.price) || o.price < 0.0) {
      throw DomainError("price", "must be finite and >= 0, got " +
                                     detail::number_text(o.price));
    }
    if (!std::isfinite(o.quantity) || !(o.quantity > 0.0)) {
      throw DomainError("quantity", "must be finite and > 0, got " +
                                        detail::number_text(o.quantity));
    }
  }
  const auto [lo, hi] = std::minmax_element(
      obs.begin(), obs.end(),
      [](const Observation& a, const Observation& b) { return a.price < b.price; });
  if (obs.size() < 2 || lo->price == hi->price) {
    throw InsufficientDataError(
        "need at least two observations at distinct prices");
  }
}

double max_quantity(std::span<const Observation> obs) {
  double q = 0.0;
  for (const Observation& o : obs) q = std::max(q, o.quantity);
  return q;
}

}  // namespace

CalibrationFit fit_fixed_mu(std::span<const Observation> obs, double mu) {
  if (obs.size() < 2) {
    throw InsufficientDataError(
        "need at least two observations at distinct prices");
  }
  check_observations(obs);
  if (!std::isfinite(mu) || !(mu > 0.0)) {
    throw DomainError("mu", "must be positive and finite, got " +
                                detail::number_text(mu));
  }

  const auto n = static_cast<double>(obs.size());
  std::vector<double> z;
  z.reserve(obs.size());
  double p_mean = 0.0;
  double z_mean = 0.0;
  for (const Observation& o : obs) {
    if (o.quantity >= mu * (1.0 - kSaturationGuard)) {
      throw DomainError("quantity", detail::number_text(o.quantity) +
                                        " is not below market size " +
                                        detail::number_text(mu));
    }
    z.push_back(std::log((mu - o.quantity) / o.quantity));
    p_mean += o.price;
    z_mean += z.back();
  }
  p_mean /= n;
  z_mean /= n;

  double sxx = 0.0;
  double sxz = 0.0;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    const double dp = obs[i].price - p_mean;
    sxx += dp * dp;
    sxz += dp * (z[i] - z_mean);
  }
  const double theta = sxz / sxx;
  const double alpha = z_mean - theta * p_mean;
  if (!std::isfinite(theta) || !(theta > 0.0)) {
    throw DegenerateFitError("fitted theta " + detail::number_text(theta) +
                             " is not positive");
  }
  if (!std::isfinite(alpha) || !(alpha < 0.0)) {
    throw DegenerateFitError("fitted alpha " + detail::number_text(alpha) +
                             " is not negative");
  }

  const LogitParams params = validate_params(mu, alpha, theta, Validation::kRelaxed);
  double sse = 0.0;
  for (const Observation& o : obs) {
    const double r = o.quantity - demand(params, o.price);
    sse += r * r;
  }
  return {params, sse, static_cast<int>(obs.size()), alpha < -2.0};
}

CalibrationFit fit(std::span<const Observation> obs, double mu_hi_factor,
                   int max_iterations) {
  if (obs.size() < 2) {
    throw InsufficientDataError(
        "need at least two observations at distinct prices");
  }
  check_observations(obs);
  if (!std::isfinite(mu_hi_factor) || !(mu_hi_factor > kLowerMuFactor)) {
    throw DomainError("mu_hi_factor", "must exceed " +
                                          detail::number_text(kLowerMuFactor) +
                                          ", got " +
                                          detail::number_text(mu_hi_factor));
  }

  const double q_max = max_quantity(obs);
  const auto neg_sse = [&](double mu) {
    try {
      return -fit_fixed_mu(obs, mu).sse;
    } catch (const DegenerateFitError&) {
      return -std::numeric_limits<double>::infinity();
    }
  };
  const GoldenSectionResult best =
      golden_section_search(neg_sse, kLowerMuFactor * q_max,
                            mu_hi_factor * q_max, 1e-13, max_iterations);
  if (!std::isfinite(best.value)) {
    throw SearchFailureError("no market size in the search bracket gives a "
                             "usable fit");
  }
  return fit_fixed_mu(obs, best.argmax);
}

}  // namespace logitprice
