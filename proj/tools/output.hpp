#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "logitprice/calibration.hpp"
#include "logitprice/experiments.hpp"
#include "logitprice/oracle.hpp"
#include "logitprice/solver.hpp"

namespace logitprice::cli {

enum class OutputFormat { kTable, kCsv, kRecord };

// Malformed user-supplied text (bad csv, wrong header). Exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable input or unwritable output. Exit code 4.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Locale-independent number text. Negative zero prints without its sign.
std::string fixed(double value, int decimals);
std::string scientific(double value, int significant);
std::string shortest(double value);

// Display precision per quantity; `raw` switches every column to
// shortest round-trip text.
struct NumberStyle {
  bool raw = false;

  std::string price(double v) const { return raw ? shortest(v) : fixed(v, 4); }
  std::string demand(double v) const { return raw ? shortest(v) : fixed(v, 2); }
  std::string revenue(double v) const { return raw ? shortest(v) : fixed(v, 2); }
  std::string ratio(double v) const { return raw ? shortest(v) : fixed(v, 3); }
  std::string residual(double v) const {
    return raw ? shortest(v) : scientific(v, 3);
  }
  std::string elasticity(double v) const {
    return raw ? shortest(v) : fixed(v, 4);
  }
  std::string derivative(double v) const {
    return raw ? shortest(v) : scientific(v, 6);
  }
  std::string estimate(double v) const {
    return raw ? shortest(v) : fixed(v, 6);
  }
  // Echoed user input.
  std::string input(double v) const { return shortest(v); }
};

// A table of pre-formatted cells. `numeric[i]` marks columns that are
// emitted as JSON numbers in record output.
struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<bool> numeric;
};

// Renders rows. kRecord gives a JSON array of flat objects, or a single
// object when `single_record` is set.
std::string render(const TextTable& table, OutputFormat format,
                   bool single_record = false);

inline constexpr const char* kSweepCsvHeader =
    "case,alpha,theta,mu,p_star,d_star,r_star,p_inf,d_inf,r_inf,revenue_ratio,"
    "price_ratio";
inline constexpr const char* kCurveCsvHeader =
    "p,demand,d1,d2,revenue,r1,r2,elasticity";

TextTable solution_table(const PricingSolution& s, const NumberStyle& style);
TextTable sweep_table(const std::vector<SweepRow>& rows, const NumberStyle& style);

enum class CurveKind { kDemand, kRevenue, kElasticity, kDerivatives, kAll };
TextTable curve_table(const std::vector<CurveSample>& samples, CurveKind kind,
                      const NumberStyle& style);
TextTable report_table(const VerificationReport& r, const NumberStyle& style);
TextTable fit_table(const CalibrationFit& f, const NumberStyle& style);

std::vector<std::string> split_header(std::string_view header);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// Comma-separated numbers with one header row. Blank lines are skipped and
// CR line endings tolerated. Throws InputError naming the bad line.
CsvTable read_csv(std::istream& in);

// Requires the header `price,quantity`.
std::vector<Observation> read_observations(std::istream& in);

// Inverse of the csv emitted by `sweep` and `curve --kind all`.
std::vector<SweepRow> load_sweep_csv(std::istream& in);
std::vector<CurveSample> load_curve_csv(std::istream& in);

}  // namespace logitprice::cli
