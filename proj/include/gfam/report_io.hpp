#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gfam/core.hpp"
#include "gfam/verify.hpp"

namespace gfam {

enum class OutputFormat { kPlain, kCsv, kJsonLines };

std::optional<OutputFormat> parse_output_format(std::string_view name);

/// One `eval` result.
struct EvalRecord {
  int n = 1;
  double x = 0.0;
  std::string method;
  Estimate estimate;
};

/// One row of the `table` command. CSV columns are, in order:
/// n,x,g_integral,g_ladder,abs_diff,quad_err
struct TableRow {
  int n = 1;
  double x = 0.0;
  double g_integral = 0.0;
  double g_ladder = 0.0;
  double abs_diff = 0.0;
  double quad_err = 0.0;
};

inline constexpr std::string_view kTableCsvHeader = "n,x,g_integral,g_ladder,abs_diff,quad_err";

void write_eval(std::ostream& os, OutputFormat format, const EvalRecord& record);
void write_table(std::ostream& os, OutputFormat format, std::span<const TableRow> rows);
void write_reports(std::ostream& os, OutputFormat format,
                   std::span<const IdentityReport> reports);
void write_table_audit(std::ostream& os, OutputFormat format, const TableAudit& audit);
void write_small_x_audit(std::ostream& os, OutputFormat format, const SmallXAudit& audit);
void write_large_n_audit(std::ostream& os, OutputFormat format, const LargeNAudit& audit);

/// Parses CSV produced by write_table. Throws DomainError on a malformed
/// header or row.
std::vector<TableRow> read_table_csv(std::istream& is);

/// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_field(std::string_view text);

}  // namespace gfam
