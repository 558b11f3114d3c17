#pragma once

#include <span>

#include "logitprice/demand.hpp"

// Fitting demand-model parameters to observed (price, quantity) pairs.
//
// For a known market size the model linearizes exactly:
//   ln(mu / q - 1) = alpha + theta * p,
// so alpha and theta follow from ordinary least squares. An unknown market
// size is found by a golden-section search on the quantity-space residual.

namespace logitprice {

struct Observation {
  double price;
  double quantity;
};

struct CalibrationFit {
  LogitParams params;  // always valid under Validation::kRelaxed
  double sse;          // sum of squared quantity residuals
  int n_obs;
  bool strict_valid;   // alpha < -2
};

// Throws InsufficientDataError for fewer than two distinct prices,
// DomainError for a malformed observation or a quantity within 1e-9 * mu of
// mu (or above it), and DegenerateFitError when the regression gives
// theta <= 0 or alpha >= 0.
CalibrationFit fit_fixed_mu(std::span<const Observation> obs, double mu);

// Searches mu over (1.0001 * max q, mu_hi_factor * max q]. Candidate market
// sizes whose regression is degenerate are skipped; SearchFailureError if
// none is usable.
CalibrationFit fit(std::span<const Observation> obs, double mu_hi_factor,
                   int max_iterations = 200);

}  // namespace logitprice
