#pragma once

// Logit demand model d(p) = mu / (1 + exp(alpha + theta * p)) together with
// its price derivatives, elasticity, inflection price and revenue.
//
// Every curve function is total over finite real p, negative prices
// included. Exponentials are only ever taken of non-positive arguments, so
// nothing overflows for any finite exponent.

namespace logitprice {

enum class Validation {
  kStrict,   // alpha < -2
  kRelaxed,  // alpha < 0
};

// Validated demand-model parameters. Only `validate_params` creates them,
// so every instance satisfies mu > 0, theta > 0, finite fields, and the
// alpha bound of the mode it was validated under.
class LogitParams {
 public:
  double mu() const noexcept { return mu_; }
  double alpha() const noexcept { return alpha_; }
  double theta() const noexcept { return theta_; }

  // Same alpha and theta, different market size. Throws DomainError when
  // `mu` is not positive and finite.
  LogitParams with_mu(double mu) const;

  friend bool operator==(const LogitParams&, const LogitParams&) = default;

 private:
  friend LogitParams validate_params(double, double, double, Validation);
  LogitParams(double mu, double alpha, double theta) noexcept
      : mu_(mu), alpha_(alpha), theta_(theta) {}

  double mu_;
  double alpha_;
  double theta_;
};

// Throws DomainError naming the first offending field.
LogitParams validate_params(double mu, double alpha, double theta,
                            Validation mode = Validation::kStrict);

// A price together with its exponent alpha + theta * p, computed once.
struct EvalPoint {
  double p;
  double x;

  static EvalPoint at(const LogitParams& params, double p) noexcept {
    return {p, params.alpha() + params.theta() * p};
  }
};

// 1 / (1 + exp(-x)) without overflow for any finite x.
double logistic(double x) noexcept;

// s(p) = 1 / (1 + exp(alpha + theta * p)).
double share(const LogitParams& params, double p) noexcept;
double share(const EvalPoint& at) noexcept;

double demand(const LogitParams& params, double p) noexcept;

// d'(p) = -mu * theta * s * (1 - s).
double demand_d1(const LogitParams& params, double p) noexcept;

// d''(p) = mu * theta^2 * s * (1 - s) * (1 - 2s); zero at the inflection
// price, negative below it and positive above it.
double demand_d2(const LogitParams& params, double p) noexcept;

// Point elasticity p * d'(p) / d(p) = -p * theta * (1 - s).
double elasticity(const LogitParams& params, double p) noexcept;

// -alpha / theta.
double inflection_price(const LogitParams& params) noexcept;

double revenue(const LogitParams& params, double p) noexcept;

struct RevenueDerivatives {
  double first;   // d(p) + p d'(p)
  double second;  // 2 d'(p) + p d''(p)
};

RevenueDerivatives revenue_derivatives(const LogitParams& params,
                                       double p) noexcept;

}  // namespace logitprice
