#include "logitprice/solver.hpp"

#include <cassert>
#include <cmath>
#include <limits>

#include "logitprice/error.hpp"
#include "logitprice/lambert_w.hpp"
#include "number_text.hpp"

namespace logitprice {
namespace {

constexpr double kDirectExponentLimit = 30.0;

// W0(e^{-(alpha + 1)}).
double lambert_term(const LogitParams& params) {
  const double y = -(params.alpha() + 1.0);
  if (y > 700.0) {
    throw DomainError("alpha", "must be >= -701 for the closed-form solver, got " +
                                   detail::number_text(params.alpha()));
  }
  return w0_of_exp(y).w;
}

}  // namespace

double optimal_price(const LogitParams& params) {
  return (1.0 + lambert_term(params)) / params.theta();
}

PricingSolution solve(const LogitParams& params) {
  const double p_star = optimal_price(params);
  const double p_inf = inflection_price(params);
  const double d_star = demand(params, p_star);
  const double d_inf = demand(params, p_inf);
  const double r_star = p_star * d_star;
  const double r_inf = p_inf * d_inf;

  PricingSolution s{
      .params = params,
      .p_star = p_star,
      .d_star = d_star,
      .r_star = r_star,
      .p_inf = p_inf,
      .d_inf = d_inf,
      .r_inf = r_inf,
      .revenue_ratio = r_star / r_inf,
      .price_ratio = p_star / p_inf,
      .elasticity_at_star = elasticity(params, p_star),
      .foc_residual = foc_residual(params, p_star),
  };
#ifndef NDEBUG
  const PriceRatios closed = ratios_closed_form(params);
  assert(std::abs(closed.revenue_ratio - s.revenue_ratio) <=
         1e-12 * s.revenue_ratio);
  assert(std::abs(closed.price_ratio - s.price_ratio) <= 1e-12 * s.price_ratio);
#endif
  return s;
}

double foc_residual(const LogitParams& params, double p) noexcept {
  const double x = params.alpha() + params.theta() * p;
  const double lead = params.theta() * p - 1.0;
  if (x <= kDirectExponentLimit) return lead * std::exp(x) - 1.0;

  // alpha < 0 and x > 30 imply theta p > 30, so lead is positive here.
  // Compare ln(lead) + x against the largest finite exponent.
  constexpr double kMax = std::numeric_limits<double>::max();
  const double log_magnitude = std::log(lead) + x;
  return log_magnitude < std::log(kMax) ? std::expm1(log_magnitude) : kMax;
}

PriceRatios ratios_closed_form(const LogitParams& params) {
  const double w = lambert_term(params);
  const double alpha = params.alpha();
  const double theta = params.theta();
  const double p_star = (1.0 + w) / theta;
  const double p_inf = -alpha / theta;

  const double price_ratio = (1.0 + w) / -alpha;
  const double revenue_ratio =
      price_ratio * std::exp(-theta * (p_star - p_inf)) *
      (1.0 + std::exp(-(alpha + theta * p_inf))) /
      (1.0 + std::exp(-(alpha + theta * p_star)));
  return {revenue_ratio, price_ratio};
}

}  // namespace logitprice
