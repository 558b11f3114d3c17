#pragma once

#include <functional>
#include <span>

#include "logitprice/demand.hpp"

// Brute-force checks of the closed-form solver. Nothing here calls the
// Lambert W code or the analytic derivatives of the unit under test, except
// where a check compares against them.

namespace logitprice {

using ScalarFunction = std::function<double(double)>;

struct GoldenSectionResult {
  double argmax;
  double value;  // f(argmax)
  int iterations;
};

// Maximizes `f` on [lo, hi], stopping once the bracket is narrower than
// tol * max(1, |midpoint|) or after `max_iterations` shrink steps. Returns
// the best point evaluated. Throws InvalidRangeError when lo >= hi, tol <= 0
// or an endpoint is not finite.
GoldenSectionResult golden_section_search(const ScalarFunction& f, double lo,
                                          double hi, double tol,
                                          int max_iterations = 400);

double golden_section_max(const ScalarFunction& f, double lo, double hi,
                          double tol);

// Number of strict sign changes in the successive differences of `samples`.
// A difference within rounding of the samples (4 ulps, or below the
// smallest normal double) counts as zero and inherits the preceding sign.
int count_slope_sign_changes(std::span<const double> samples);

// Samples `f` on an n-point uniform grid over [lo, hi] and counts slope
// sign changes. Requires n >= 2 and lo < hi.
int unimodality_scan(const ScalarFunction& f, int n, double lo, double hi);

// Revenue scan over [0, hi]. Requires n >= 1000 and hi > inflection price.
int unimodality_scan(const LogitParams& params, int n, double hi);

// Maximum relative error of central differences against the analytic
// derivatives, over a uniform grid on [0, 3 * inflection price].
//
// The error at each point is |fd - exact| / max(|exact|, 1e-3 * peak), with
// peak the largest |exact| on the grid. d'' and R' both cross zero inside
// the interval, where a pure relative error is undefined.
struct DerivativeGaps {
  double d1 = 0.0;  // demand vs demand_d1
  double d2 = 0.0;  // demand_d1 vs demand_d2
  double r1 = 0.0;  // revenue vs revenue_derivatives().first
  double r2 = 0.0;  // revenue_derivatives().first vs .second
};

DerivativeGaps finite_difference_gaps(const LogitParams& params,
                                      int samples = 1001);

// Central-difference step for a price. Price enters the model only through
// x = alpha + theta * p, so the usual cbrt(eps) * max(1, |x|) step is taken
// in x and mapped back to price units.
double finite_difference_step(const LogitParams& params, double p) noexcept;

struct VerificationThresholds {
  double foc = 1e-10;
  double elasticity = 1e-10;
  double oracle = 1e-6;
  double w_identity = 1e-12;
  double ratio = 1e-12;
  double d1 = 1e-6;
  double d2 = 1e-5;
  double r1 = 1e-6;
  double r2 = 1e-5;
};

struct VerificationReport {
  double foc_gap;         // |first-order residual at p*|
  double elasticity_gap;  // |elasticity(p*) + 1|
  double oracle_gap;      // |golden-section argmax - p*| / p*
  // |w + ln w - y| / (1 + |y|) for the W0 value behind p*.
  double w_identity_gap;
  // Largest relative disagreement between closed-form and direct ratios.
  double ratio_gap;
  DerivativeGaps derivative_gaps;
  int sign_changes;
  bool unimodal;  // sign_changes == 1

  bool passed(const VerificationThresholds& limits = {}) const noexcept;
};

inline constexpr int kVerifyScanPoints = 100000;

// Runs every check against one parameter set. Deterministic.
VerificationReport verify(const LogitParams& params);

}  // namespace logitprice
