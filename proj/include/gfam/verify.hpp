#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gfam/core.hpp"

namespace gfam {

enum class IdentityId {
  kDerivativeFdVsCot,
  kLadderVsDiff,
  kPathEquivalence,
  kSeriesConstant,
  kGenfunc,
  kBernoulliZeta,
};

const char* identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

/// Every identity id, in report order.
std::span<const IdentityId> all_identities();

/// The suite `verify` runs when no subset is requested.
std::span<const IdentityId> default_identities();

struct PointResidual {
  std::string point;
  double residual = 0.0;
  std::string note;
};

/// Residual summary of one identity over a grid. passed is exactly
/// max_abs_residual <= tolerance; a point that failed to evaluate carries an
/// infinite residual and its error in `note`.
struct IdentityReport {
  IdentityId id{};
  std::vector<PointResidual> grid;
  double max_abs_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string tolerance_source;
  std::string notes;
};

inline constexpr double kFdStep = 1e-5;
inline constexpr double kFdTolerance = 1e-6;
inline constexpr double kQuadIdentityTolerance = 1e-8;
inline constexpr double kRationalIdentityTolerance = 1e-12;
inline constexpr int kGenfuncTerms = 60;
inline constexpr int kBernoulliZetaDefaultMax = 30;

std::vector<GridPoint> default_derivative_grid();
std::vector<GridPoint> default_ladder_grid();
std::vector<double> default_genfunc_xs();
std::vector<double> default_genfunc_zs();

/// |x (g(x+h) - g(x-h)) / 2h - eval_derivative_cot| with h = 1e-5.
IdentityReport check_derivative(std::span<const GridPoint> grid, const Accuracy& acc = {});

/// |(g_{n+1} - g_n) - ladder_delta|.
IdentityReport check_ladder(std::span<const GridPoint> grid, const Accuracy& acc = {});

/// |eval_via_ladder - eval_integral| / n, so the n * 1e-8 bound becomes 1e-8.
IdentityReport check_path_equivalence(std::span<const GridPoint> grid,
                                      const Accuracy& acc = {});

/// Evaluates both constants of the zeta series against the cotangent form and
/// passes iff one constant matches at every point.
IdentityReport check_series_constant(std::span<const GridPoint> grid,
                                     const Accuracy& acc = {});

/// max(0, |closed - partial_N| - tail_bound) per (x, z), tolerance 1e-8.
IdentityReport check_genfunc(std::span<const double> xs, std::span<const double> zs,
                             int terms = kGenfuncTerms, const Accuracy& acc = {});

/// Relative residual between the Bernoulli and direct-summation zeta(2m).
IdentityReport check_bernoulli_zeta(int m_max = kBernoulliZetaDefaultMax,
                                    const Accuracy& acc = {});

/// Runs one identity on its default grid.
IdentityReport run_identity(IdentityId id, const Accuracy& acc = {});

// Audits are report-only: they never pass or fail.

struct SmallXRow {
  double x = 0.0;
  double g = 0.0;
  double g_over_x2 = 0.0;
  double comparison = 0.0;  // 2 H_n - 2 log(2 pi x)
  double deviation = 0.0;   // g - comparison
  double quad_err = 0.0;
  std::string note;
};

struct SmallXAudit {
  int n = 1;
  std::vector<SmallXRow> rows;
  /// Least-squares slope of log|g| against log x.
  double log_slope_g = 0.0;
  /// Same fit for log|deviation|.
  double log_slope_deviation = 0.0;
  std::string summary;
};

std::vector<double> default_small_x_values();
SmallXAudit audit_small_x(int n, std::span<const double> xs, const Accuracy& acc = {});

struct LargeNRow {
  int n = 1;
  double g = 0.0;
  double n_times_g = 0.0;
  double comparison = 0.0;
  double deviation = 0.0;
  double quad_err = 0.0;
  std::string note;
};

struct LargeNAudit {
  double x = 0.5;
  std::vector<LargeNRow> rows;
  std::string summary;
};

std::vector<int> default_large_n_values();
LargeNAudit audit_large_n(double x, std::span<const int> ns, const Accuracy& acc = {});

struct PaperTableEntry {
  int n;
  double x;
  double series_value;
  double integral_value;
};

/// The four published (n, x) rows, both columns kept.
std::span<const PaperTableEntry> paper_table();

struct AuditRow {
  int n = 1;
  double x = 0.0;
  double paper_series_value = 0.0;
  double paper_integral_value = 0.0;
  double computed_value = 0.0;
  double residual_vs_paper = 0.0;
  double quad_err = 0.0;
  bool flagged = false;  // residual above kTableFlagThreshold
};

inline constexpr double kTableFlagThreshold = 1e-3;

struct TableAudit {
  std::vector<AuditRow> rows;
  double max_residual = 0.0;
  std::string summary;
};

TableAudit audit_table(const Accuracy& acc = {});

}  // namespace gfam
