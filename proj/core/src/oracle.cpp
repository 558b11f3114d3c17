#include "logitprice/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "logitprice/error.hpp"
#include "logitprice/lambert_w.hpp"
#include "logitprice/solver.hpp"

namespace logitprice {
namespace {

constexpr double kInvPhi = 0.61803398874989484820;  // (sqrt(5) - 1) / 2

double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Largest floored relative error between `approx` and `exact`.
double max_floored_error(std::span<const double> approx,
                         std::span<const double> exact) {
  double peak = 0.0;
  for (double v : exact) peak = std::max(peak, std::abs(v));
  const double floor = 1e-3 * peak;
  double worst = 0.0;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const double denom = std::max(std::abs(exact[i]), floor);
    if (denom == 0.0) continue;
    worst = std::max(worst, std::abs(approx[i] - exact[i]) / denom);
  }
  return worst;
}

double central_difference(const ScalarFunction& f, double p, double h) {
  // Recompute the realized step so that rounding of p +/- h does not bias it.
  const double up = p + h;
  const double down = p - h;
  return (f(up) - f(down)) / (up - down);
}

}  // namespace

GoldenSectionResult golden_section_search(const ScalarFunction& f, double lo,
                                          double hi, double tol,
                                          int max_iterations) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw InvalidRangeError("golden-section bracket requires finite lo < hi");
  }
  if (!(tol > 0.0)) {
    throw InvalidRangeError("golden-section tolerance must be positive");
  }

  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);

  GoldenSectionResult best = fc >= fd ? GoldenSectionResult{c, fc, 0}
                                      : GoldenSectionResult{d, fd, 0};
  int it = 0;
  for (; it < max_iterations; ++it) {
    if (b - a <= tol * std::max(1.0, std::abs(0.5 * (a + b)))) break;
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
      if (fc > best.value) best = {c, fc, 0};
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
      if (fd > best.value) best = {d, fd, 0};
    }
  }
  best.iterations = it;
  return best;
}

double golden_section_max(const ScalarFunction& f, double lo, double hi,
                          double tol) {
  return golden_section_search(f, lo, hi, tol).argmax;
}

int count_slope_sign_changes(std::span<const double> samples) {
  int changes = 0;
  int previous = 0;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  constexpr double kMinNormal = std::numeric_limits<double>::min();
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const double diff = samples[i] - samples[i - 1];
    const double resolution = std::max(
        4.0 * kEps * std::max(std::abs(samples[i]), std::abs(samples[i - 1])),
        kMinNormal);
    const int sign = diff > resolution ? 1 : (diff < -resolution ? -1 : previous);
    if (sign != 0 && previous != 0 && sign != previous) ++changes;
    if (sign != 0) previous = sign;
  }
  return changes;
}

int unimodality_scan(const ScalarFunction& f, int n, double lo, double hi) {
  if (n < 2 || !(lo < hi)) {
    throw InvalidRangeError("scan requires n >= 2 and lo < hi");
  }
  std::vector<double> values(static_cast<std::size_t>(n));
  const double width = hi - lo;
  for (int i = 0; i < n; ++i) {
    const double p = i == n - 1 ? hi : lo + width * i / (n - 1);
    values[static_cast<std::size_t>(i)] = f(p);
  }
  return count_slope_sign_changes(values);
}

int unimodality_scan(const LogitParams& params, int n, double hi) {
  if (n < 1000) throw InvalidRangeError("revenue scan requires n >= 1000");
  if (!(hi > inflection_price(params))) {
    throw InvalidRangeError("revenue scan must extend past the inflection price");
  }
  return unimodality_scan([&](double p) { return revenue(params, p); }, n, 0.0,
                          hi);
}

double finite_difference_step(const LogitParams& params, double p) noexcept {
  static const double kCbrtEps =
      std::cbrt(std::numeric_limits<double>::epsilon());
  const double x = params.alpha() + params.theta() * p;
  return kCbrtEps * std::max(1.0, std::abs(x)) / params.theta();
}

DerivativeGaps finite_difference_gaps(const LogitParams& params, int samples) {
  if (samples < 2) throw InvalidRangeError("need at least two samples");
  const double hi = 3.0 * inflection_price(params);
  const auto n = static_cast<std::size_t>(samples);

  const ScalarFunction demand_fn = [&](double p) { return demand(params, p); };
  const ScalarFunction d1_fn = [&](double p) { return demand_d1(params, p); };
  const ScalarFunction revenue_fn = [&](double p) { return revenue(params, p); };
  const ScalarFunction r1_fn = [&](double p) {
    return revenue_derivatives(params, p).first;
  };

  std::vector<double> fd_d1(n), fd_d2(n), fd_r1(n), fd_r2(n);
  std::vector<double> d1(n), d2(n), r1(n), r2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double p = i + 1 == n ? hi : hi * static_cast<double>(i) / (n - 1);
    const double h = finite_difference_step(params, p);
    fd_d1[i] = central_difference(demand_fn, p, h);
    fd_d2[i] = central_difference(d1_fn, p, h);
    fd_r1[i] = central_difference(revenue_fn, p, h);
    fd_r2[i] = central_difference(r1_fn, p, h);
    d1[i] = demand_d1(params, p);
    d2[i] = demand_d2(params, p);
    const RevenueDerivatives rd = revenue_derivatives(params, p);
    r1[i] = rd.first;
    r2[i] = rd.second;
  }
  return {max_floored_error(fd_d1, d1), max_floored_error(fd_d2, d2),
          max_floored_error(fd_r1, r1), max_floored_error(fd_r2, r2)};
}

bool VerificationReport::passed(
    const VerificationThresholds& limits) const noexcept {
  return foc_gap <= limits.foc && elasticity_gap <= limits.elasticity &&
         oracle_gap <= limits.oracle && w_identity_gap <= limits.w_identity &&
         ratio_gap <= limits.ratio && derivative_gaps.d1 <= limits.d1 &&
         derivative_gaps.d2 <= limits.d2 && derivative_gaps.r1 <= limits.r1 &&
         derivative_gaps.r2 <= limits.r2 && unimodal;
}

VerificationReport verify(const LogitParams& params) {
  const PricingSolution solution = solve(params);
  const double hi = std::max(3.0 * solution.p_inf, 10.0 / params.theta());

  const double oracle_p = golden_section_max(
      [&](double p) { return revenue(params, p); }, 0.0, hi, 1e-10);

  const double y = -(params.alpha() + 1.0);
  const WResult w = w0_of_exp(y);

  const PriceRatios closed = ratios_closed_form(params);
  const int sign_changes = unimodality_scan(params, kVerifyScanPoints, hi);

  return {
      .foc_gap = std::abs(solution.foc_residual),
      .elasticity_gap = std::abs(solution.elasticity_at_star + 1.0),
      .oracle_gap = std::abs(oracle_p - solution.p_star) / solution.p_star,
      .w_identity_gap = w.residual / (1.0 + std::abs(y)),
      .ratio_gap =
          std::max(relative_gap(closed.revenue_ratio, solution.revenue_ratio),
                   relative_gap(closed.price_ratio, solution.price_ratio)),
      .derivative_gaps = finite_difference_gaps(params),
      .sign_changes = sign_changes,
      .unimodal = sign_changes == 1,
  };
}

}  // namespace logitprice
