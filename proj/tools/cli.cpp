#include "cli.hpp"

#ifdef LOGITPRICE_CLI11_PACKAGE
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <algorithm>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "logitprice/calibration.hpp"
#include "logitprice/error.hpp"
#include "logitprice/experiments.hpp"
#include "logitprice/oracle.hpp"
#include "logitprice/solver.hpp"
#include "output.hpp"

namespace logitprice::cli {

namespace {

struct Globals {
  std::string format = "table";
  bool raw = false;
  bool allow_alpha = false;
  std::string out_path;

  Validation mode() const {
    return allow_alpha ? Validation::kRelaxed : Validation::kStrict;
  }
  OutputFormat output_format() const {
    if (format == "csv") return OutputFormat::kCsv;
    if (format == "record") return OutputFormat::kRecord;
    return OutputFormat::kTable;
  }
};

struct ModelFlags {
  double mu = 0.0;
  double alpha = 0.0;
  double theta = 0.0;
};

void add_model_flags(CLI::App* sub, ModelFlags& m) {
  sub->add_option("--mu", m.mu, "Market size")->required();
  sub->add_option("--alpha", m.alpha, "Location parameter")->required();
  sub->add_option("--theta", m.theta, "Price sensitivity")->required();
}

struct SweepFlags {
  double mu = 0.0;
  std::string alpha_list, alpha_range, theta_list, theta_range;
};

struct CurveFlags {
  ModelFlags model;
  double pmin = 0.0;
  std::optional<double> pmax;
  int steps = 301;
  std::string kind = "all";
};

struct FitFlags {
  std::string data;
  std::optional<double> mu;
  double mu_hi_factor = 100.0;
};

RangeSpec range_from(const std::string& list, const std::string& range,
                     const char* name) {
  if (!list.empty() == !range.empty()) {
    throw InvalidRangeError(std::string("give exactly one of --") + name +
                            "-list and --" + name + "-range");
  }
  return list.empty() ? RangeSpec::parse_stepped(range)
                      : RangeSpec::parse_list(list);
}

CurveKind curve_kind(const std::string& s) {
  if (s == "demand") return CurveKind::kDemand;
  if (s == "revenue") return CurveKind::kRevenue;
  if (s == "elasticity") return CurveKind::kElasticity;
  if (s == "derivatives") return CurveKind::kDerivatives;
  return CurveKind::kAll;
}

void emit(const std::string& text, const Globals& g, std::ostream& out) {
  if (g.out_path.empty()) {
    out << text;
    out.flush();
    if (!out) throw IoError("cannot write to standard output");
    return;
  }
  std::ofstream file(g.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + g.out_path + "' for writing");
  file << text;
  file.close();
  if (!file) throw IoError("write to '" + g.out_path + "' failed");
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Revenue-maximizing prices for logit demand", "logitprice"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "record"}));
  app.add_flag("--raw", g.raw, "Print full-precision numbers");
  app.add_flag("--allow-alpha", g.allow_alpha,
               "Accept -2 <= alpha < 0 (relaxed validation)");
  app.add_option("--out", g.out_path, "Write output to a file");

  ModelFlags solve_flags;
  auto* solve_cmd = app.add_subcommand("solve", "Optimal price for one parameter set");
  add_model_flags(solve_cmd, solve_flags);

  SweepFlags sweep_flags;
  auto* sweep_cmd = app.add_subcommand("sweep", "Optimal prices over a parameter grid");
  sweep_cmd->add_option("--mu", sweep_flags.mu, "Market size")->required();
  sweep_cmd->add_option("--alpha-list", sweep_flags.alpha_list, "a,b,...");
  sweep_cmd->add_option("--alpha-range", sweep_flags.alpha_range, "start:end:step");
  sweep_cmd->add_option("--theta-list", sweep_flags.theta_list, "a,b,...");
  sweep_cmd->add_option("--theta-range", sweep_flags.theta_range, "start:end:step");

  CurveFlags curve_flags;
  auto* curve_cmd = app.add_subcommand("curve", "Demand and revenue curves");
  add_model_flags(curve_cmd, curve_flags.model);
  curve_cmd->add_option("--pmin", curve_flags.pmin, "Lowest price");
  curve_cmd->add_option("--pmax", curve_flags.pmax,
                        "Highest price (default 3x inflection price)");
  curve_cmd->add_option("--steps", curve_flags.steps, "Number of sample points");
  curve_cmd->add_option("--kind", curve_flags.kind, "Columns to print")
      ->check(CLI::IsMember({"demand", "revenue", "elasticity", "derivatives", "all"}));

  ModelFlags verify_flags;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the closed form");
  add_model_flags(verify_cmd, verify_flags);

  FitFlags fit_flags;
  auto* fit_cmd = app.add_subcommand("fit", "Calibrate parameters from price,quantity data");
  fit_cmd->add_option("--data", fit_flags.data, "CSV file with header price,quantity")
      ->required();
  fit_cmd->add_option("--mu", fit_flags.mu, "Known market size");
  fit_cmd->add_option("--mu-hi-factor", fit_flags.mu_hi_factor,
                      "Upper end of the market-size search, as a multiple of max quantity");

  for (auto* sub : {solve_cmd, sweep_cmd, curve_cmd, verify_cmd, fit_cmd}) {
    sub->fallthrough();
  }

  try {
    // CLI11 consumes the vector from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  const NumberStyle style{g.raw};
  const OutputFormat format = g.output_format();
  int code = kExitOk;

  try {
    std::string text;
    if (solve_cmd->parsed()) {
      auto p = validate_params(solve_flags.mu, solve_flags.alpha,
                               solve_flags.theta, g.mode());
      text = render(solution_table(solve(p), style), format, true);
    } else if (sweep_cmd->parsed()) {
      auto alphas = range_from(sweep_flags.alpha_list, sweep_flags.alpha_range, "alpha");
      auto thetas = range_from(sweep_flags.theta_list, sweep_flags.theta_range, "theta");
      text = render(sweep_table(sweep(alphas, thetas, sweep_flags.mu, g.mode()), style),
                    format);
    } else if (curve_cmd->parsed()) {
      const auto& m = curve_flags.model;
      auto p = validate_params(m.mu, m.alpha, m.theta, g.mode());
      double pmax = curve_flags.pmax.value_or(3.0 * inflection_price(p));
      if (!(curve_flags.pmin >= 0.0)) {
        throw InvalidRangeError("--pmin must be >= 0");
      }
      auto samples = sample_curves(p, curve_flags.pmin, pmax, curve_flags.steps);
      text = render(curve_table(samples, curve_kind(curve_flags.kind), style), format);
    } else if (verify_cmd->parsed()) {
      auto p = validate_params(verify_flags.mu, verify_flags.alpha,
                               verify_flags.theta, g.mode());
      auto report = verify(p);
      text = render(report_table(report, style), format, true);
      if (!report.passed()) {
        err << "verify: one or more checks exceeded their thresholds\n";
        code = kExitNumerical;
      }
    } else if (fit_cmd->parsed()) {
      std::ifstream file(fit_flags.data, std::ios::binary);
      if (!file) throw IoError("cannot open '" + fit_flags.data + "'");
      auto obs = read_observations(file);
      auto result = fit_flags.mu ? fit_fixed_mu(obs, *fit_flags.mu)
                                 : logitprice::fit(obs, fit_flags.mu_hi_factor);
      text = render(fit_table(result, style), format, true);
    }
    emit(text, g, out);
    return code;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InvalidRangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InsufficientDataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const DegenerateFitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    // Convergence and search failures, and anything unforeseen.
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace logitprice::cli
