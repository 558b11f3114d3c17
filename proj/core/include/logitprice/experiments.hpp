#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "logitprice/demand.hpp"

namespace logitprice {

// A set of parameter values: an explicit list, or start:end:step with the
// end included.
class RangeSpec {
 public:
  struct Stepped {
    double start;
    double end;
    double step;
  };

  // Throws InvalidRangeError for an empty list, non-finite values, a zero
  // step, or a step pointing away from `end`.
  static RangeSpec list(std::vector<double> values);
  static RangeSpec stepped(double start, double end, double step);

  // "a,b,c" and "start:end:step". Throws InvalidRangeError on bad text.
  static RangeSpec parse_list(std::string_view text);
  static RangeSpec parse_stepped(std::string_view text);

  // Values in the order given. The last stepped value snaps to `end` when it is
  // within 1e-9 steps of it.
  std::vector<double> expand() const;

 private:
  explicit RangeSpec(std::variant<std::vector<double>, Stepped> spec)
      : spec_(std::move(spec)) {}

  std::variant<std::vector<double>, Stepped> spec_;
};

inline constexpr std::size_t kMaxRangeValues = 10'000'000;

struct SweepRow {
  int case_index;  // 1-based, theta-major
  double alpha;
  double theta;
  double mu;
  double p_star;
  double d_star;
  double r_star;
  double p_inf;
  double d_inf;
  double r_inf;
  double revenue_ratio;
  double price_ratio;
};

// One row per (theta, alpha) pair, sorted by theta then alpha; duplicate
// values collapse. A pair that fails validation aborts the sweep with a
// DomainError naming both values.
std::vector<SweepRow> sweep(const RangeSpec& alphas, const RangeSpec& thetas,
                            double mu, Validation mode = Validation::kStrict);

struct CurveSample {
  double p;
  double demand;
  double d1;
  double d2;
  double revenue;
  double r1;
  double r2;
  double elasticity;
};

CurveSample sample_at(const LogitParams& params, double p);

// n evenly spaced samples on [p_min, p_max], both ends included.
std::vector<CurveSample> sample_curves(const LogitParams& params, double p_min,
                                       double p_max, int n);

}  // namespace logitprice
