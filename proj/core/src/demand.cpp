#include "logitprice/demand.hpp"

#include <cmath>

#include "logitprice/error.hpp"
#include "number_text.hpp"

namespace logitprice {
namespace {

void require_positive(const char* field, double value) {
  if (!std::isfinite(value)) {
    throw DomainError(field, "must be finite, got " + detail::number_text(value));
  }
  if (!(value > 0.0)) {
    throw DomainError(field, "must be positive, got " + detail::number_text(value));
  }
}

}  // namespace

LogitParams validate_params(double mu, double alpha, double theta,
                            Validation mode) {
  require_positive("mu", mu);
  if (!std::isfinite(alpha)) {
    throw DomainError("alpha", "must be finite, got " + detail::number_text(alpha));
  }
  require_positive("theta", theta);
  if (mode == Validation::kStrict && !(alpha < -2.0)) {
    throw DomainError("alpha", "must be < -2 in strict mode, got " +
                                   detail::number_text(alpha));
  }
  if (mode == Validation::kRelaxed && !(alpha < 0.0)) {
    throw DomainError("alpha", "must be < 0, got " + detail::number_text(alpha));
  }
  return LogitParams(mu, alpha, theta);
}

LogitParams LogitParams::with_mu(double mu) const {
  require_positive("mu", mu);
  LogitParams out = *this;
  out.mu_ = mu;
  return out;
}

double logistic(double x) noexcept {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double share(const EvalPoint& at) noexcept { return logistic(-at.x); }

double share(const LogitParams& params, double p) noexcept {
  return share(EvalPoint::at(params, p));
}

double demand(const LogitParams& params, double p) noexcept {
  return params.mu() * share(params, p);
}

double demand_d1(const LogitParams& params, double p) noexcept {
  const EvalPoint at = EvalPoint::at(params, p);
  // 1 - s is evaluated as logistic(x) rather than by subtraction.
  return -params.mu() * params.theta() * logistic(-at.x) * logistic(at.x);
}

double demand_d2(const LogitParams& params, double p) noexcept {
  const EvalPoint at = EvalPoint::at(params, p);
  const double theta = params.theta();
  // 1 - 2s == tanh(x / 2), exact in sign at the inflection price.
  return params.mu() * theta * theta * logistic(-at.x) * logistic(at.x) *
         std::tanh(0.5 * at.x);
}

double elasticity(const LogitParams& params, double p) noexcept {
  const EvalPoint at = EvalPoint::at(params, p);
  return -p * params.theta() * logistic(at.x);
}

double inflection_price(const LogitParams& params) noexcept {
  return -params.alpha() / params.theta();
}

double revenue(const LogitParams& params, double p) noexcept {
  return p * demand(params, p);
}

RevenueDerivatives revenue_derivatives(const LogitParams& params,
                                       double p) noexcept {
  return {demand(params, p) + p * demand_d1(params, p),
          2.0 * demand_d1(params, p) + p * demand_d2(params, p)};
}

}  // namespace logitprice
