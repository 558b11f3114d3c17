#include "logitprice/lambert_w.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "logitprice/error.hpp"
#include "number_text.hpp"

namespace logitprice {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kStepTolerance = 1e-14;
constexpr double kBranchTolerance = 1e-12;

// 1/e split into a double and its rounding error.
constexpr double kInvEHi = 0.36787944117144233;
constexpr double kInvELo = -1.2428753672788363e-17;

// Below this q the branch-point series alone is accurate to a few ulps.
constexpr double kSeriesOnlyQ = 1e-3;

bool step_converged(double step, double w) {
  return std::abs(step) <= kStepTolerance * (1.0 + std::abs(w));
}

// W0 about the branch point in q = sqrt(2 (e x + 1)).
double branch_series(double q, int terms) {
  static constexpr double kCoeff[] = {
      -1.0,
      1.0,
      -1.0 / 3.0,
      11.0 / 72.0,
      -43.0 / 540.0,
      769.0 / 17280.0,
      -221.0 / 8505.0,
      680863.0 / 43545600.0,
  };
  double sum = 0.0;
  for (int k = terms - 1; k >= 0; --k) sum = sum * q + kCoeff[k];
  return sum;
}

double log_form_guess(double y) {
  if (y > 1.0) return y - std::log(y);
  const double x = std::exp(y);
  return x / (1.0 + x);
}

// Halley iteration on g(w) = w + ln w - y. No domain check.
WResult solve_log_form(double y) {
  double w = log_form_guess(y);
  for (int it = 1; it <= kMaxLambertIterations; ++it) {
    // g' and g'' are multiplied through by w^2 so that tiny w cannot
    // overflow 1/w^2.
    const double g = w + std::log(w) - y;
    const double wp1 = w + 1.0;
    const double step = 2.0 * g * w * wp1 / (2.0 * wp1 * wp1 + g);
    double next = w - step;
    if (!(next > 0.0)) next = 0.5 * w;
    w = next;
    if (step_converged(step, w)) {
      return {w, it, std::abs(w + std::log(w) - y)};
    }
  }
  throw ConvergenceError("Lambert W log-form iteration did not converge for y = " +
                         detail::number_text(y));
}

double direct_residual(double w, double x) {
  if (std::abs(x) <= 1e300) return std::abs(w * std::exp(w) - x);
  return x * std::abs(std::expm1(w + std::log(w) - std::log(x)));
}

}  // namespace

WResult w0(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("x", "must be finite, got " + detail::number_text(x));
  }
  // x + 1/e carried in extra precision; this is where the branch point's
  // cancellation happens.
  const double offset = (x + kInvEHi) + kInvELo;
  if (offset < -kBranchTolerance) {
    throw DomainError("x", "must be >= -1/e, got " + detail::number_text(x));
  }
  if (x == 0.0) return {0.0, 0, 0.0};

  if (x > 1e300) {
    // w * e^w would overflow mid-iteration; solve in the log domain.
    WResult r = solve_log_form(std::log(x));
    r.residual = direct_residual(r.w, x);
    return r;
  }

  double w;
  if (x < 0.0) {
    const double q = std::sqrt(2.0 * std::numbers::e * std::max(offset, 0.0));
    if (q < kSeriesOnlyQ) {
      w = branch_series(q, 8);
      return {w, 0, direct_residual(w, x)};
    }
    w = branch_series(q, 4);
  } else if (x <= std::numbers::e) {
    w = x / (1.0 + x);
  } else {
    const double l = std::log(x);
    w = l - std::log(l);
  }

  for (int it = 1; it <= kMaxLambertIterations; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    // Near the branch point the step never drops below rounding noise,
    // so a residual at the noise floor also counts as converged.
    if (f == 0.0 || std::abs(f) <= 4.0 * kEps * std::abs(x)) {
      return {w, it, std::abs(f)};
    }
    const double wp1 = w + 1.0;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (step_converged(step, w)) return {w, it, direct_residual(w, x)};
  }
  throw ConvergenceError("w0 did not converge for x = " +
                         detail::number_text(x));
}

WResult w0_of_exp(double y) {
  if (!std::isfinite(y) || y < -700.0 || y > 700.0) {
    throw DomainError("y", "must lie in [-700, 700], got " +
                               detail::number_text(y));
  }
  return solve_log_form(y);
}

}  // namespace logitprice
