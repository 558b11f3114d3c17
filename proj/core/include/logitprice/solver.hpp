#pragma once

#include "logitprice/demand.hpp"

// Closed-form revenue-maximizing price for logit demand.
//
// The first-order condition R'(p) = 0 reduces to (theta p - 1) e^{alpha +
// theta p} = 1. Substituting z = theta p - 1 gives z e^z = e^{-(alpha + 1)},
// so p* = (1 + W0(e^{-(alpha + 1)})) / theta.

namespace logitprice {

struct PricingSolution {
  LogitParams params;
  double p_star;
  double d_star;
  double r_star;
  double p_inf;
  double d_inf;
  double r_inf;
  double revenue_ratio;  // r_star / r_inf
  double price_ratio;    // p_star / p_inf
  double elasticity_at_star;
  double foc_residual;
};

// Independent of mu. Evaluated through w0_of_exp, so it never forms
// e^{-(alpha + 1)}. Throws DomainError for alpha < -701, where the
// log-domain argument leaves the supported interval.
double optimal_price(const LogitParams& params);

PricingSolution solve(const LogitParams& params);

// (theta p - 1) e^{alpha + theta p} - 1. Beyond an exponent of 30 the value
// is formed in the log domain and saturates at DBL_MAX instead of
// overflowing, so the sign is always right.
double foc_residual(const LogitParams& params, double p) noexcept;

struct PriceRatios {
  double revenue_ratio;
  double price_ratio;
};

// Revenue and price ratios from their closed forms in W0(e^{-(alpha+1)}).
// They depend on alpha only.
PriceRatios ratios_closed_form(const LogitParams& params);

}  // namespace logitprice
