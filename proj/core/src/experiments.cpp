#include "logitprice/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include "logitprice/error.hpp"
#include "logitprice/solver.hpp"
#include "number_text.hpp"

namespace logitprice {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text) {
  const std::string_view t = trim(text);
  double value = 0.0;
  // from_chars rejects a leading '+'; accept it for convenience.
  const char* begin = t.data();
  const char* end = t.data() + t.size();
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (t.empty() || ec != std::errc() || ptr != end) {
    throw InvalidRangeError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::size_t stepped_count(const RangeSpec::Stepped& s) {
  const double intervals = (s.end - s.start) / s.step;
  const double whole = std::floor(intervals + 1e-9);
  if (!(whole + 1.0 <= static_cast<double>(kMaxRangeValues))) {
    throw InvalidRangeError("range expands to more than " +
                            std::to_string(kMaxRangeValues) + " values");
  }
  return static_cast<std::size_t>(whole) + 1;
}

std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

RangeSpec RangeSpec::list(std::vector<double> values) {
  if (values.empty()) throw InvalidRangeError("value list is empty");
  if (values.size() > kMaxRangeValues) {
    throw InvalidRangeError("value list is too long");
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw InvalidRangeError("value list has a non-finite entry");
  }
  return RangeSpec(std::move(values));
}

RangeSpec RangeSpec::stepped(double start, double end, double step) {
  if (!std::isfinite(start) || !std::isfinite(end) || !std::isfinite(step)) {
    throw InvalidRangeError("range bounds and step must be finite");
  }
  if (step == 0.0) throw InvalidRangeError("range step must be non-zero");
  if ((end - start) * step < 0.0) {
    throw InvalidRangeError("range step " + detail::number_text(step) +
                            " points away from the end " +
                            detail::number_text(end));
  }
  Stepped s{start, end, step};
  stepped_count(s);
  return RangeSpec(s);
}

RangeSpec RangeSpec::parse_list(std::string_view text) {
  std::vector<double> values;
  for (std::string_view part : split(text, ',')) values.push_back(parse_number(part));
  return list(std::move(values));
}

RangeSpec RangeSpec::parse_stepped(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) {
    throw InvalidRangeError("expected start:end:step, got '" +
                            std::string(text) + "'");
  }
  return stepped(parse_number(parts[0]), parse_number(parts[1]),
                 parse_number(parts[2]));
}

std::vector<double> RangeSpec::expand() const {
  if (const auto* values = std::get_if<std::vector<double>>(&spec_)) {
    return *values;
  }
  const Stepped& s = std::get<Stepped>(spec_);
  const std::size_t n = stepped_count(s);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = s.start + static_cast<double>(i) * s.step;
  }
  if (std::abs(out.back() - s.end) <= 1e-9 * std::abs(s.step)) out.back() = s.end;
  return out;
}

std::vector<SweepRow> sweep(const RangeSpec& alphas, const RangeSpec& thetas,
                            double mu, Validation mode) {
  const std::vector<double> alpha_values = sorted_unique(alphas.expand());
  const std::vector<double> theta_values = sorted_unique(thetas.expand());

  std::vector<SweepRow> rows;
  rows.reserve(alpha_values.size() * theta_values.size());
  for (double theta : theta_values) {
    for (double alpha : alpha_values) {
      LogitParams params = [&] {
        try {
          return validate_params(mu, alpha, theta, mode);
        } catch (const DomainError& e) {
          throw DomainError(e.field(), "in sweep cell (alpha=" +
                                           detail::number_text(alpha) +
                                           ", theta=" +
                                           detail::number_text(theta) +
                                           "): " + e.what());
        }
      }();
      const PricingSolution s = solve(params);
      rows.push_back({
          .case_index = static_cast<int>(rows.size()) + 1,
          .alpha = alpha,
          .theta = theta,
          .mu = mu,
          .p_star = s.p_star,
          .d_star = s.d_star,
          .r_star = s.r_star,
          .p_inf = s.p_inf,
          .d_inf = s.d_inf,
          .r_inf = s.r_inf,
          .revenue_ratio = s.revenue_ratio,
          .price_ratio = s.price_ratio,
      });
    }
  }
  return rows;
}

CurveSample sample_at(const LogitParams& params, double p) {
  const RevenueDerivatives rd = revenue_derivatives(params, p);
  return {
      .p = p,
      .demand = demand(params, p),
      .d1 = demand_d1(params, p),
      .d2 = demand_d2(params, p),
      .revenue = revenue(params, p),
      .r1 = rd.first,
      .r2 = rd.second,
      .elasticity = elasticity(params, p),
  };
}

std::vector<CurveSample> sample_curves(const LogitParams& params, double p_min,
                                       double p_max, int n) {
  if (!std::isfinite(p_min) || !std::isfinite(p_max) || !(p_min < p_max)) {
    throw InvalidRangeError("curve range requires finite p_min < p_max");
  }
  if (n < 2) throw InvalidRangeError("curve needs at least two samples");
  if (static_cast<std::size_t>(n) > kMaxRangeValues) {
    throw InvalidRangeError("too many curve samples");
  }
  std::vector<CurveSample> out;
  out.reserve(static_cast<std::size_t>(n));
  const double width = p_max - p_min;
  for (int i = 0; i < n; ++i) {
    const double p = i == n - 1 ? p_max : p_min + width * i / (n - 1);
    out.push_back(sample_at(params, p));
  }
  return out;
}

}  // namespace logitprice
