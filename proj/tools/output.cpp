#include "output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <string_view>
#include <system_error>

namespace logitprice::cli {

namespace {

std::string to_text(double value, std::chars_format fmt, int precision) {
  char buf[512];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, fmt, precision);
  if (ec != std::errc{}) return shortest(value);
  std::string text(buf, end);
  // "-0.00" and friends read badly in tables.
  if (text.front() == '-' &&
      text.find_first_of("123456789", 1) == std::string::npos &&
      text.find("inf") == std::string::npos) {
    text.erase(0, 1);
  }
  return text;
}

std::string json_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

bool finite_number_text(std::string_view s) {
  return s.find("inf") == std::string_view::npos &&
         s.find("nan") == std::string_view::npos;
}

std::string render_table(const TextTable& t) {
  std::vector<std::size_t> width(t.header.size());
  for (std::size_t c = 0; c < t.header.size(); ++c) {
    width[c] = t.header[c].size();
    for (const auto& row : t.rows) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) s += "  ";
      s.append(width[c] - cells[c].size(), ' ');
      s += cells[c];
    }
    return s + '\n';
  };
  std::string out = line(t.header);
  for (const auto& row : t.rows) out += line(row);
  return out;
}

std::string render_csv(const TextTable& t) {
  auto line = [](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) s += ',';
      s += cells[c];
    }
    return s + '\n';
  };
  std::string out = line(t.header);
  for (const auto& row : t.rows) out += line(row);
  return out;
}

std::string render_object(const TextTable& t, const std::vector<std::string>& row,
                          std::string_view indent) {
  std::string out = "{\n";
  for (std::size_t c = 0; c < row.size(); ++c) {
    out += indent;
    out += "  \"" + json_escape(t.header[c]) + "\": ";
    if (!t.numeric[c]) {
      out += row[c];
    } else if (finite_number_text(row[c])) {
      out += row[c];
    } else {
      out += "null";
    }
    out += c + 1 < row.size() ? ",\n" : "\n";
  }
  out += indent;
  out += "}";
  return out;
}

std::string render_record(const TextTable& t, bool single) {
  if (single && t.rows.size() == 1) return render_object(t, t.rows[0], "") + '\n';
  std::string out = "[";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out += r ? ",\n  " : "\n  ";
    out += render_object(t, t.rows[r], "  ");
  }
  out += t.rows.empty() ? "]\n" : "\n]\n";
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

TextTable key_value(std::vector<std::string> keys, std::vector<std::string> values,
                    std::vector<bool> numeric) {
  TextTable t;
  t.header = std::move(keys);
  t.rows.push_back(std::move(values));
  t.numeric = std::move(numeric);
  return t;
}

void require_header(const CsvTable& table, std::string_view expected) {
  std::string got;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) got += ',';
    got += table.header[i];
  }
  if (got != expected) {
    throw InputError("expected csv header '" + std::string(expected) +
                     "', got '" + got + "'");
  }
}

}  // namespace

std::string shortest(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  (void)ec;
  return std::string(buf, end);
}

std::string fixed(double value, int decimals) {
  return to_text(value, std::chars_format::fixed, decimals);
}

std::string scientific(double value, int significant) {
  return to_text(value, std::chars_format::scientific, significant - 1);
}

std::string render(const TextTable& table, OutputFormat format,
                   bool single_record) {
  switch (format) {
    case OutputFormat::kTable:
      return render_table(table);
    case OutputFormat::kCsv:
      return render_csv(table);
    case OutputFormat::kRecord:
      return render_record(table, single_record);
  }
  return {};
}

TextTable solution_table(const PricingSolution& s, const NumberStyle& st) {
  return key_value(
      {"mu", "alpha", "theta", "p_star", "d_star", "r_star", "p_inf", "d_inf",
       "r_inf", "revenue_ratio", "price_ratio", "elasticity_at_star",
       "foc_residual"},
      {st.input(s.params.mu()), st.input(s.params.alpha()),
       st.input(s.params.theta()), st.price(s.p_star), st.demand(s.d_star),
       st.revenue(s.r_star), st.price(s.p_inf), st.demand(s.d_inf),
       st.revenue(s.r_inf), st.ratio(s.revenue_ratio), st.ratio(s.price_ratio),
       st.elasticity(s.elasticity_at_star), st.residual(s.foc_residual)},
      std::vector<bool>(13, true));
}

TextTable sweep_table(const std::vector<SweepRow>& rows, const NumberStyle& st) {
  TextTable t;
  t.header = split_header(kSweepCsvHeader);
  t.numeric.assign(t.header.size(), true);
  for (const auto& r : rows) {
    t.rows.push_back({std::to_string(r.case_index), st.input(r.alpha),
                      st.input(r.theta), st.input(r.mu), st.price(r.p_star),
                      st.demand(r.d_star), st.revenue(r.r_star),
                      st.price(r.p_inf), st.demand(r.d_inf),
                      st.revenue(r.r_inf), st.ratio(r.revenue_ratio),
                      st.ratio(r.price_ratio)});
  }
  return t;
}

TextTable curve_table(const std::vector<CurveSample>& samples, CurveKind kind,
                      const NumberStyle& st) {
  bool dem = kind == CurveKind::kDemand || kind == CurveKind::kAll;
  bool rev = kind == CurveKind::kRevenue || kind == CurveKind::kAll;
  bool der = kind == CurveKind::kDerivatives || kind == CurveKind::kAll;
  bool ela = kind == CurveKind::kElasticity || kind == CurveKind::kAll;

  TextTable t;
  t.header.push_back("p");
  if (dem) t.header.push_back("demand");
  if (der) t.header.insert(t.header.end(), {"d1", "d2"});
  if (rev) t.header.push_back("revenue");
  if (der) t.header.insert(t.header.end(), {"r1", "r2"});
  if (ela) t.header.push_back("elasticity");
  t.numeric.assign(t.header.size(), true);

  for (const auto& s : samples) {
    std::vector<std::string> row{st.price(s.p)};
    if (dem) row.push_back(st.demand(s.demand));
    if (der) {
      row.push_back(st.derivative(s.d1));
      row.push_back(st.derivative(s.d2));
    }
    if (rev) row.push_back(st.revenue(s.revenue));
    if (der) {
      row.push_back(st.derivative(s.r1));
      row.push_back(st.derivative(s.r2));
    }
    if (ela) row.push_back(st.elasticity(s.elasticity));
    t.rows.push_back(std::move(row));
  }
  return t;
}

TextTable report_table(const VerificationReport& r, const NumberStyle& st) {
  const auto& g = r.derivative_gaps;
  return key_value(
      {"foc_gap", "elasticity_gap", "oracle_gap", "w_identity_gap", "ratio_gap",
       "d1_fd_gap", "d2_fd_gap", "r1_fd_gap", "r2_fd_gap", "sign_changes",
       "unimodal", "passed"},
      {st.residual(r.foc_gap), st.residual(r.elasticity_gap),
       st.residual(r.oracle_gap), st.residual(r.w_identity_gap),
       st.residual(r.ratio_gap), st.residual(g.d1), st.residual(g.d2),
       st.residual(g.r1), st.residual(g.r2), std::to_string(r.sign_changes),
       bool_text(r.unimodal), bool_text(r.passed())},
      {true, true, true, true, true, true, true, true, true, true, false, false});
}

TextTable fit_table(const CalibrationFit& f, const NumberStyle& st) {
  return key_value({"mu", "alpha", "theta", "sse", "n_obs", "strict_valid"},
                   {st.estimate(f.params.mu()), st.estimate(f.params.alpha()),
                    st.estimate(f.params.theta()), st.residual(f.sse),
                    std::to_string(f.n_obs), bool_text(f.strict_valid)},
                   {true, true, true, true, true, false});
}

std::vector<std::string> split_header(std::string_view header) {
  std::vector<std::string> out;
  for (auto cell : split(header)) out.emplace_back(cell);
  return out;
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    if (view.empty()) continue;
    auto cells = split(view);
    if (!have_header) {
      for (auto c : cells) table.header.emplace_back(c);
      have_header = true;
      continue;
    }
    if (cells.size() != table.header.size()) {
      throw InputError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(table.header.size()) + " fields, got " +
                       std::to_string(cells.size()));
    }
    std::vector<double> row;
    for (auto c : cells) {
      if (!c.empty() && c.front() == '+') c.remove_prefix(1);
      double v = 0.0;
      auto [end, ec] = std::from_chars(c.data(), c.data() + c.size(), v);
      if (ec != std::errc{} || end != c.data() + c.size() || c.empty()) {
        throw InputError("line " + std::to_string(line_no) +
                         ": not a number: '" + std::string(c) + "'");
      }
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  if (in.bad()) throw IoError("read failed");
  if (!have_header) throw InputError("empty csv: header row required");
  return table;
}

std::vector<Observation> read_observations(std::istream& in) {
  CsvTable table = read_csv(in);
  require_header(table, "price,quantity");
  std::vector<Observation> obs;
  obs.reserve(table.rows.size());
  for (const auto& r : table.rows) obs.push_back({r[0], r[1]});
  return obs;
}

std::vector<SweepRow> load_sweep_csv(std::istream& in) {
  CsvTable table = read_csv(in);
  require_header(table, kSweepCsvHeader);
  std::vector<SweepRow> rows;
  for (const auto& r : table.rows) {
    rows.push_back({static_cast<int>(r[0]), r[1], r[2], r[3], r[4], r[5], r[6],
                    r[7], r[8], r[9], r[10], r[11]});
  }
  return rows;
}

std::vector<CurveSample> load_curve_csv(std::istream& in) {
  CsvTable table = read_csv(in);
  require_header(table, kCurveCsvHeader);
  std::vector<CurveSample> samples;
  for (const auto& r : table.rows) {
    samples.push_back({r[0], r[1], r[2], r[3], r[4], r[5], r[6], r[7]});
  }
  return samples;
}

}  // namespace logitprice::cli
