#pragma once

// Principal branch W0 of the Lambert W function (the inverse of w * e^w on
// w >= -1), evaluated with Halley iteration.

namespace logitprice {

struct WResult {
  double w = 0.0;
  int iterations = 0;
  // |w * e^w - x| for w0, |w + ln w - y| for w0_of_exp.
  double residual = 0.0;
};

inline constexpr int kMaxLambertIterations = 64;

// W0(x) for x >= -1/e. Inputs down to 1e-12 below -1/e are clamped to the
// branch point. Throws DomainError below that or for non-finite x, and
// ConvergenceError if the iteration cap is reached.
WResult w0(double x);

// W0(e^y) for y in [-700, 700], computed by solving w + ln w = y so that e^y
// is never formed. Throws DomainError outside that interval.
WResult w0_of_exp(double y);

}  // namespace logitprice
