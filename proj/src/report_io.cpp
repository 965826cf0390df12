#include "gfam/report_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "gfam/format.hpp"
#include "gfam/gfamily.hpp"
#include "json.hpp"

namespace gfam {
namespace {

// Builds one JSON object line with numbers in the shared 15-digit format.
class JsonLine {
 public:
  JsonLine& field(std::string_view key, std::string_view text) {
    return raw(key, nlohmann::json(std::string(text)).dump());
  }
  JsonLine& field(std::string_view key, const char* text) {
    return field(key, std::string_view(text));
  }
  JsonLine& field(std::string_view key, double value) {
    return raw(key, std::isfinite(value) ? format_real(value) : "null");
  }
  JsonLine& field(std::string_view key, int value) { return raw(key, std::to_string(value)); }
  JsonLine& field(std::string_view key, bool value) { return raw(key, value ? "true" : "false"); }
  JsonLine& raw(std::string_view key, std::string_view encoded) {
    body_ += body_.empty() ? "{" : ",";
    body_ += nlohmann::json(std::string(key)).dump();
    body_ += ':';
    body_ += encoded;
    return *this;
  }
  std::string str() const { return body_.empty() ? "{}" : body_ + "}"; }

 private:
  std::string body_;
};

// Right-aligned plain-text columns.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void write(std::ostream& os) const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c > 0) os << "  ";
        os << std::string(width[c] - row[c].size(), ' ') << row[c];
      }
      os << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string join_csv(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) line += ',';
    line += csv_field(fields[i]);
  }
  return line;
}

std::vector<std::string> table_fields(const TableRow& r) {
  return {std::to_string(r.n),       format_real(r.x),        format_real(r.g_integral),
          format_real(r.g_ladder),   format_real(r.abs_diff), format_real(r.quad_err)};
}

double parse_real(std::string_view text) {
  if (text == "nan") return std::nan("");
  if (text == "inf") return INFINITY;
  if (text == "-inf") return -INFINITY;
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw DomainError("malformed number in CSV: '" + std::string(text) + "'");
  }
  return value;
}

int parse_int(std::string_view text) {
  int value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw DomainError("malformed integer in CSV: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void write_notes(std::ostream& os, const std::string& notes) {
  std::istringstream lines(notes);
  for (std::string line; std::getline(lines, line);) os << "  " << line << '\n';
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "plain") return OutputFormat::kPlain;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json-lines") return OutputFormat::kJsonLines;
  return std::nullopt;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void write_eval(std::ostream& os, OutputFormat format, const EvalRecord& r) {
  switch (format) {
    case OutputFormat::kPlain:
      os << "method=" << r.method << " n=" << r.n << " x=" << format_real(r.x)
         << " value=" << format_real(r.estimate.value)
         << " err_estimate=" << format_real(r.estimate.err_estimate)
         << " converged=" << (r.estimate.converged ? "true" : "false") << '\n';
      break;
    case OutputFormat::kCsv:
      os << "n,x,method,value,err_estimate,converged\n"
         << join_csv({std::to_string(r.n), format_real(r.x), r.method,
                      format_real(r.estimate.value), format_real(r.estimate.err_estimate),
                      r.estimate.converged ? "true" : "false"})
         << '\n';
      break;
    case OutputFormat::kJsonLines:
      os << JsonLine()
                .field("n", r.n)
                .field("x", r.x)
                .field("method", r.method)
                .field("value", r.estimate.value)
                .field("err_estimate", r.estimate.err_estimate)
                .field("converged", r.estimate.converged)
                .str()
         << '\n';
      break;
  }
}

void write_table(std::ostream& os, OutputFormat format, std::span<const TableRow> rows) {
  switch (format) {
    case OutputFormat::kPlain: {
      TextTable table({"n", "x", "g_integral", "g_ladder", "abs_diff", "quad_err"});
      for (const auto& r : rows) table.add(table_fields(r));
      table.write(os);
      break;
    }
    case OutputFormat::kCsv:
      os << kTableCsvHeader << '\n';
      for (const auto& r : rows) os << join_csv(table_fields(r)) << '\n';
      break;
    case OutputFormat::kJsonLines:
      for (const auto& r : rows) {
        os << JsonLine()
                  .field("n", r.n)
                  .field("x", r.x)
                  .field("g_integral", r.g_integral)
                  .field("g_ladder", r.g_ladder)
                  .field("abs_diff", r.abs_diff)
                  .field("quad_err", r.quad_err)
                  .str()
           << '\n';
      }
      break;
  }
}

void write_reports(std::ostream& os, OutputFormat format,
                   std::span<const IdentityReport> reports) {
  if (format == OutputFormat::kCsv) {
    os << "identity_id,points,max_abs_residual,tolerance,passed,notes\n";
  }
  for (const auto& r : reports) {
    switch (format) {
      case OutputFormat::kPlain:
        os << (r.passed ? "[PASS] " : "[FAIL] ") << identity_name(r.id)
           << "  max_abs_residual=" << format_real(r.max_abs_residual)
           << "  tolerance=" << format_real(r.tolerance) << "  points=" << r.grid.size()
           << '\n';
        os << "  tolerance source: " << r.tolerance_source << '\n';
        write_notes(os, r.notes);
        break;
      case OutputFormat::kCsv:
        os << join_csv({identity_name(r.id), std::to_string(r.grid.size()),
                        format_real(r.max_abs_residual), format_real(r.tolerance),
                        r.passed ? "true" : "false", r.notes})
           << '\n';
        break;
      case OutputFormat::kJsonLines: {
        std::string grid = "[";
        for (std::size_t i = 0; i < r.grid.size(); ++i) {
          if (i > 0) grid += ',';
          grid += JsonLine()
                      .field("point", r.grid[i].point)
                      .field("residual", r.grid[i].residual)
                      .str();
        }
        grid += ']';
        os << JsonLine()
                  .field("identity_id", std::string_view(identity_name(r.id)))
                  .raw("grid", grid)
                  .field("max_abs_residual", r.max_abs_residual)
                  .field("tolerance", r.tolerance)
                  .field("passed", r.passed)
                  .field("tolerance_source", r.tolerance_source)
                  .field("notes", r.notes)
                  .str()
           << '\n';
        break;
      }
    }
  }
}

void write_table_audit(std::ostream& os, OutputFormat format, const TableAudit& audit) {
  auto fields = [](const AuditRow& r) -> std::vector<std::string> {
    return {std::to_string(r.n),
            format_real(r.x),
            format_real(r.paper_series_value),
            format_real(r.paper_integral_value),
            format_real(r.computed_value),
            format_real(r.residual_vs_paper),
            format_real(r.quad_err),
            r.flagged ? "true" : "false"};
  };
  const std::vector<std::string> header = {"n",
                                           "x",
                                           "paper_series_value",
                                           "paper_integral_value",
                                           "computed_value",
                                           "residual_vs_paper",
                                           "quad_err",
                                           "flagged"};
  switch (format) {
    case OutputFormat::kPlain: {
      os << "== audit: table ==\n";
      TextTable table(header);
      for (const auto& r : audit.rows) table.add(fields(r));
      table.write(os);
      os << "summary: " << audit.summary << '\n';
      break;
    }
    case OutputFormat::kCsv:
      os << "# audit: table\n" << join_csv(header) << '\n';
      for (const auto& r : audit.rows) os << join_csv(fields(r)) << '\n';
      os << "# summary: " << audit.summary << '\n';
      break;
    case OutputFormat::kJsonLines:
      for (const auto& r : audit.rows) {
        os << JsonLine()
                  .field("audit", std::string_view("table"))
                  .field("n", r.n)
                  .field("x", r.x)
                  .field("paper_series_value", r.paper_series_value)
                  .field("paper_integral_value", r.paper_integral_value)
                  .field("computed_value", r.computed_value)
                  .field("residual_vs_paper", r.residual_vs_paper)
                  .field("quad_err", r.quad_err)
                  .field("flagged", r.flagged)
                  .str()
           << '\n';
      }
      os << JsonLine()
                .field("audit", std::string_view("table"))
                .field("summary", audit.summary)
                .field("max_residual", audit.max_residual)
                .str()
         << '\n';
      break;
  }
}

void write_small_x_audit(std::ostream& os, OutputFormat format, const SmallXAudit& audit) {
  auto fields = [&](const SmallXRow& r) -> std::vector<std::string> {
    return {std::to_string(audit.n), format_real(r.x),          format_real(r.g),
            format_real(r.g_over_x2), format_real(r.comparison), format_real(r.deviation),
            format_real(r.quad_err),  r.note};
  };
  const std::vector<std::string> header = {"n",          "x",         "g",        "g_over_x2",
                                           "comparison", "deviation", "quad_err", "note"};
  switch (format) {
    case OutputFormat::kPlain: {
      os << "== audit: small-x ==\n";
      os << "comparison = 2H_n - 2log(2 pi x), deviation = g - comparison\n";
      TextTable table(header);
      for (const auto& r : audit.rows) table.add(fields(r));
      table.write(os);
      os << "summary: " << audit.summary << '\n';
      break;
    }
    case OutputFormat::kCsv:
      os << "# audit: small-x\n" << join_csv(header) << '\n';
      for (const auto& r : audit.rows) os << join_csv(fields(r)) << '\n';
      os << "# summary: " << audit.summary << '\n';
      break;
    case OutputFormat::kJsonLines:
      for (const auto& r : audit.rows) {
        os << JsonLine()
                  .field("audit", std::string_view("small-x"))
                  .field("n", audit.n)
                  .field("x", r.x)
                  .field("g", r.g)
                  .field("g_over_x2", r.g_over_x2)
                  .field("comparison", r.comparison)
                  .field("deviation", r.deviation)
                  .field("quad_err", r.quad_err)
                  .field("note", r.note)
                  .str()
           << '\n';
      }
      os << JsonLine()
                .field("audit", std::string_view("small-x"))
                .field("summary", audit.summary)
                .field("log_slope_g", audit.log_slope_g)
                .field("log_slope_deviation", audit.log_slope_deviation)
                .str()
         << '\n';
      break;
  }
}

void write_large_n_audit(std::ostream& os, OutputFormat format, const LargeNAudit& audit) {
  auto fields = [&](const LargeNRow& r) -> std::vector<std::string> {
    return {std::to_string(r.n),         format_real(audit.x),     format_real(r.g),
            format_real(r.n_times_g),    format_real(r.comparison), format_real(r.deviation),
            format_real(r.quad_err),     r.note};
  };
  const std::vector<std::string> header = {"n",          "x",         "g",        "n_times_g",
                                           "comparison", "deviation", "quad_err", "note"};
  switch (format) {
    case OutputFormat::kPlain: {
      os << "== audit: large-n ==\n";
      os << "comparison = 2H_n - 2log(2 pi x), deviation = g - comparison\n";
      TextTable table(header);
      for (const auto& r : audit.rows) table.add(fields(r));
      table.write(os);
      os << "summary: " << audit.summary << '\n';
      break;
    }
    case OutputFormat::kCsv:
      os << "# audit: large-n\n" << join_csv(header) << '\n';
      for (const auto& r : audit.rows) os << join_csv(fields(r)) << '\n';
      os << "# summary: " << audit.summary << '\n';
      break;
    case OutputFormat::kJsonLines:
      for (const auto& r : audit.rows) {
        os << JsonLine()
                  .field("audit", std::string_view("large-n"))
                  .field("n", r.n)
                  .field("x", audit.x)
                  .field("g", r.g)
                  .field("n_times_g", r.n_times_g)
                  .field("comparison", r.comparison)
                  .field("deviation", r.deviation)
                  .field("quad_err", r.quad_err)
                  .field("note", r.note)
                  .str()
           << '\n';
      }
      os << JsonLine()
                .field("audit", std::string_view("large-n"))
                .field("summary", audit.summary)
                .str()
         << '\n';
      break;
  }
}

std::vector<TableRow> read_table_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kTableCsvHeader) {
    throw DomainError("CSV header must be " + std::string(kTableCsvHeader));
  }
  std::vector<TableRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split_commas(line);
    if (f.size() != 6) throw DomainError("CSV row must have 6 fields: " + line);
    rows.push_back({parse_int(f[0]), parse_real(f[1]), parse_real(f[2]), parse_real(f[3]),
                    parse_real(f[4]), parse_real(f[5])});
  }
  return rows;
}

}  // namespace gfam
