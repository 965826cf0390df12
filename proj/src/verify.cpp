#include "gfam/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "gfam/format.hpp"
#include "gfam/gfamily.hpp"
#include "gfam/numerics.hpp"

namespace gfam {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr std::array<IdentityId, 6> kAllIdentities = {
    IdentityId::kDerivativeFdVsCot, IdentityId::kLadderVsDiff, IdentityId::kPathEquivalence,
    IdentityId::kSeriesConstant,    IdentityId::kGenfunc,      IdentityId::kBernoulliZeta,
};

constexpr std::array<IdentityId, 5> kDefaultIdentities = {
    IdentityId::kDerivativeFdVsCot, IdentityId::kLadderVsDiff, IdentityId::kSeriesConstant,
    IdentityId::kGenfunc,           IdentityId::kBernoulliZeta,
};

constexpr std::array<PaperTableEntry, 4> kPaperTable = {{
    {1, 0.5, 0.0770, 0.0770},
    {2, 0.5, -0.0619, -0.0619},
    {3, 0.5, -0.0597, -0.0597},
    {2, 1.0, -0.1639, -0.1639},
}};

// Evaluates fn(i) for i in [0, count) on a few worker threads. Each slot is
// written by exactly one call, so the result does not depend on scheduling.
template <class F>
auto parallel_map(std::size_t count, F fn) -> std::vector<decltype(fn(std::size_t{}))> {
  std::vector<decltype(fn(std::size_t{}))> out(count);
  const std::size_t workers =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
  };
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  return out;
}

std::string point_label(int n, double x) {
  return "n=" + std::to_string(n) + " x=" + format_real(x);
}

void require_nonempty(std::size_t size) {
  if (size == 0) throw DomainError("empty grid");
}

// Fills max residual and the pass flag from the per-point residuals.
void finish(IdentityReport& report) {
  double worst = 0.0;
  for (const auto& p : report.grid) {
    worst = std::isnan(p.residual) ? kInf : std::max(worst, p.residual);
    if (worst == kInf) break;
  }
  report.max_abs_residual = worst;
  report.passed = worst <= report.tolerance;
  for (const auto& p : report.grid) {
    if (!p.note.empty()) report.notes += p.point + ": " + p.note + "\n";
  }
}

// Runs `residual` per grid point; evaluation errors become an infinite
// residual with the message recorded.
template <class Point, class F>
std::vector<PointResidual> evaluate_grid(std::span<const Point> grid, F residual,
                                         std::string (*label)(const Point&)) {
  return parallel_map(grid.size(), [&](std::size_t i) {
    PointResidual out;
    out.point = label(grid[i]);
    try {
      out.residual = residual(grid[i]);
    } catch (const std::exception& e) {
      out.residual = kInf;
      out.note = std::string("evaluation failed: ") + e.what();
    }
    return out;
  });
}

std::string grid_label(const GridPoint& p) { return point_label(p.n(), p.x()); }

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  const double count = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= count;
  my /= count;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxx > 0.0 ? sxy / sxx : std::numeric_limits<double>::quiet_NaN();
}

// 2 H_n - 2 log(2 pi x): the small-x and large-n asymptote of the integral form.
double log_asymptote(int n, double x) {
  return 2.0 * harmonic(n) - 2.0 * std::log(2.0 * std::numbers::pi * x);
}

}  // namespace

const char* identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::kDerivativeFdVsCot: return "derivative_fd_vs_cot";
    case IdentityId::kLadderVsDiff: return "ladder_vs_diff";
    case IdentityId::kPathEquivalence: return "path_equivalence";
    case IdentityId::kSeriesConstant: return "series_constant";
    case IdentityId::kGenfunc: return "genfunc";
    case IdentityId::kBernoulliZeta: return "bernoulli_zeta";
  }
  return "unknown";
}

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (IdentityId id : kAllIdentities) {
    if (name == identity_name(id)) return id;
  }
  return std::nullopt;
}

std::span<const IdentityId> all_identities() { return kAllIdentities; }
std::span<const IdentityId> default_identities() { return kDefaultIdentities; }

std::vector<GridPoint> default_derivative_grid() {
  std::vector<GridPoint> grid;
  for (int n = 1; n <= 6; ++n) {
    for (double x : {0.2, 0.5, 0.8}) grid.emplace_back(n, x);
  }
  return grid;
}

std::vector<GridPoint> default_ladder_grid() {
  std::vector<GridPoint> grid;
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= 9; ++k) grid.emplace_back(n, k / 10.0);
  }
  return grid;
}

std::vector<double> default_genfunc_xs() { return {0.3, 0.5}; }
std::vector<double> default_genfunc_zs() { return {-0.5, -0.3, 0.3, 0.5}; }

IdentityReport check_derivative(std::span<const GridPoint> grid, const Accuracy& acc) {
  require_nonempty(grid.size());
  for (const auto& p : grid) {
    if (!(p.x() - kFdStep > 0.0 && p.x() + kFdStep < 1.0)) {
      throw DomainError("finite-difference stencil leaves (0, 1) at " + grid_label(p));
    }
  }
  IdentityReport report;
  report.id = IdentityId::kDerivativeFdVsCot;
  report.tolerance = kFdTolerance;
  report.tolerance_source =
      "central difference h=1e-5: O(h^2) truncation ~1e-10 plus cancellation ~1e-11";
  report.grid = evaluate_grid<GridPoint>(
      grid,
      [&](const GridPoint& p) {
        const double hi = eval_integral(GridPoint(p.n(), p.x() + kFdStep), acc).value;
        const double lo = eval_integral(GridPoint(p.n(), p.x() - kFdStep), acc).value;
        const double fd = p.x() * (hi - lo) / (2.0 * kFdStep);
        return std::abs(fd - eval_derivative_cot(p, acc).value);
      },
      grid_label);
  finish(report);
  return report;
}

IdentityReport check_ladder(std::span<const GridPoint> grid, const Accuracy& acc) {
  require_nonempty(grid.size());
  IdentityReport report;
  report.id = IdentityId::kLadderVsDiff;
  report.tolerance = kQuadIdentityTolerance;
  report.tolerance_source = "two quadratures at quad_rel_tol with margin";
  report.grid = evaluate_grid<GridPoint>(
      grid,
      [&](const GridPoint& p) {
        const double direct = eval_integral(GridPoint(p.n() + 1, p.x()), acc).value -
                              eval_integral(p, acc).value;
        return std::abs(direct - ladder_delta(p.n(), p.x(), acc).value);
      },
      grid_label);
  finish(report);
  return report;
}

IdentityReport check_path_equivalence(std::span<const GridPoint> grid, const Accuracy& acc) {
  require_nonempty(grid.size());
  IdentityReport report;
  report.id = IdentityId::kPathEquivalence;
  report.tolerance = kQuadIdentityTolerance;
  report.tolerance_source = "n accumulated quadratures; residual divided by n";
  report.grid = evaluate_grid<GridPoint>(
      grid,
      [&](const GridPoint& p) {
        const double diff = eval_via_ladder(p, acc).value - eval_integral(p, acc).value;
        return std::abs(diff) / p.n();
      },
      grid_label);
  finish(report);
  return report;
}

IdentityReport check_series_constant(std::span<const GridPoint> grid, const Accuracy& acc) {
  require_nonempty(grid.size());
  struct Sample {
    double printed = kInf;
    double corrected = kInf;
    std::string note;
  };
  const auto samples = parallel_map(grid.size(), [&](std::size_t i) {
    Sample s;
    const GridPoint& p = grid[i];
    try {
      const double cot = eval_derivative_cot(p, acc).value;
      const Estimate printed = eval_derivative_series(p, SeriesConstant::kAsPrinted, acc);
      const Estimate corrected = eval_derivative_series(p, SeriesConstant::kCorrected, acc);
      s.printed = std::abs(printed.value - cot);
      s.corrected = std::abs(corrected.value - cot);
      if (!corrected.converged) {
        s.note = "series term cap reached, tail bound " + format_real(corrected.err_estimate);
      }
    } catch (const std::exception& e) {
      s.note = std::string("evaluation failed: ") + e.what();
    }
    return s;
  });

  double worst_printed = 0.0, worst_corrected = 0.0;
  for (const auto& s : samples) {
    worst_printed = std::max(worst_printed, s.printed);
    worst_corrected = std::max(worst_corrected, s.corrected);
  }
  const double tol = kQuadIdentityTolerance;
  const bool printed_ok = worst_printed <= tol;
  const bool corrected_ok = worst_corrected <= tol;

  IdentityReport report;
  report.id = IdentityId::kSeriesConstant;
  report.tolerance = tol;
  report.tolerance_source = "one quadrature plus a zeta series truncated at series_abs_tol";
  const bool use_corrected = corrected_ok || (!printed_ok && worst_corrected <= worst_printed);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    PointResidual r;
    r.point = grid_label(grid[i]);
    r.residual = use_corrected ? samples[i].corrected : samples[i].printed;
    r.note = samples[i].note;
    if (!(printed_ok || corrected_ok)) {
      // Mixed outcome: show both residuals per point.
      if (!r.note.empty()) r.note += "; ";
      r.note += "as_printed " + format_real(samples[i].printed) + ", corrected " +
                format_real(samples[i].corrected);
    }
    report.grid.push_back(std::move(r));
  }
  finish(report);
  const auto describe = [](SeriesConstant v) {
    return std::string(series_constant_name(v)) + " (constant " +
           format_real(series_constant_value(v)) + ")";
  };
  if (printed_ok != corrected_ok) {
    const SeriesConstant good = corrected_ok ? SeriesConstant::kCorrected : SeriesConstant::kAsPrinted;
    const SeriesConstant bad = corrected_ok ? SeriesConstant::kAsPrinted : SeriesConstant::kCorrected;
    report.notes = "matching variant: " + describe(good) + " at every point; " + describe(bad) +
                   " misses by up to " + format_real(corrected_ok ? worst_printed : worst_corrected) +
                   "\n" + report.notes;
  } else if (printed_ok) {
    report.notes = "both variants match; tolerance too loose to discriminate\n" + report.notes;
  } else {
    report.notes = "no uniform matching variant: as_printed max " + format_real(worst_printed) +
                   ", corrected max " + format_real(worst_corrected) + "\n" + report.notes;
  }
  return report;
}

IdentityReport check_genfunc(std::span<const double> xs, std::span<const double> zs, int terms,
                             const Accuracy& acc) {
  require_nonempty(xs.size());
  require_nonempty(zs.size());
  if (terms < 1) throw DomainError("term count N must satisfy N >= 1");
  std::vector<GenfuncPoint> points;
  for (double x : xs) {
    for (double z : zs) points.emplace_back(x, z);
  }
  // The tail bound depends on x only through max |g_n|, shared by every z.
  std::vector<double> largest_g(xs.size(), 0.0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    largest_g[i] = max_abs_g(xs[i], terms + kGenfuncTailLookahead, acc);
  }

  IdentityReport report;
  report.id = IdentityId::kGenfunc;
  report.tolerance = kQuadIdentityTolerance;
  report.tolerance_source = "quadrature-level identity; residual is the excess over the tail bound";
  report.grid = parallel_map(points.size(), [&](std::size_t i) {
    const GenfuncPoint& q = points[i];
    PointResidual r;
    r.point = "x=" + format_real(q.x()) + " z=" + format_real(q.z());
    try {
      const double closed = genfunc_closed(q, acc).value;
      const double partial = genfunc_partial(q, terms, acc).value;
      const double tail = genfunc_tail_bound(largest_g[i / zs.size()], q.z(), terms);
      const double diff = std::abs(closed - partial);
      r.residual = std::max(0.0, diff - tail);
      r.note = "|closed - partial| " + format_real(diff) + ", tail bound " + format_real(tail);
    } catch (const std::exception& e) {
      r.residual = kInf;
      r.note = std::string("evaluation failed: ") + e.what();
    }
    return r;
  });
  finish(report);
  return report;
}

IdentityReport check_bernoulli_zeta(int m_max, const Accuracy& acc) {
  if (m_max < 1) throw DomainError("empty range: m_max must be >= 1");
  if (m_max > kMaxBernoulliHalfIndex) {
    throw DomainError("m_max must be <= " + std::to_string(kMaxBernoulliHalfIndex));
  }
  IdentityReport report;
  report.id = IdentityId::kBernoulliZeta;
  report.tolerance = kRationalIdentityTolerance;
  report.tolerance_source = "exact rational Bernoulli numbers against a bounded direct sum";
  report.grid = parallel_map(static_cast<std::size_t>(m_max), [&](std::size_t i) {
    const int m = static_cast<int>(i) + 1;
    PointResidual r;
    r.point = "m=" + std::to_string(m);
    const double direct = zeta_even_direct(m, acc);
    r.residual = std::abs(zeta_even_bernoulli(m) - direct) / direct;
    return r;
  });
  finish(report);
  return report;
}

IdentityReport run_identity(IdentityId id, const Accuracy& acc) {
  switch (id) {
    case IdentityId::kDerivativeFdVsCot: return check_derivative(default_derivative_grid(), acc);
    case IdentityId::kLadderVsDiff: return check_ladder(default_ladder_grid(), acc);
    case IdentityId::kPathEquivalence: return check_path_equivalence(default_ladder_grid(), acc);
    case IdentityId::kSeriesConstant: return check_series_constant(default_derivative_grid(), acc);
    case IdentityId::kGenfunc:
      return check_genfunc(default_genfunc_xs(), default_genfunc_zs(), kGenfuncTerms, acc);
    case IdentityId::kBernoulliZeta: return check_bernoulli_zeta(kBernoulliZetaDefaultMax, acc);
  }
  throw DomainError("unknown identity");
}

std::vector<double> default_small_x_values() { return {1e-2, 1e-3, 1e-4}; }

SmallXAudit audit_small_x(int n, std::span<const double> xs, const Accuracy& acc) {
  require_order(n);
  if (xs.empty()) throw DomainError("small-x audit needs at least one x");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0 && xs[i] <= 0.1)) throw DomainError("small-x audit needs 0 < x <= 0.1");
    if (i > 0 && !(xs[i] < xs[i - 1])) throw DomainError("small-x audit needs decreasing x");
  }
  SmallXAudit audit;
  audit.n = n;
  audit.rows = parallel_map(xs.size(), [&](std::size_t i) {
    SmallXRow row;
    row.x = xs[i];
    try {
      const Estimate g = eval_integral(GridPoint(n, row.x), acc);
      row.g = g.value;
      row.quad_err = g.err_estimate;
    } catch (const NonConvergence& e) {
      row.g = e.value();
      row.quad_err = e.err_estimate();
      row.note = e.what();
    }
    row.g_over_x2 = row.g / (row.x * row.x);
    row.comparison = log_asymptote(n, row.x);
    row.deviation = row.g - row.comparison;
    return row;
  });

  std::vector<double> lx, lg, ld_x, ld;
  for (const auto& row : audit.rows) {
    if (row.g != 0.0) {
      lx.push_back(std::log(row.x));
      lg.push_back(std::log(std::abs(row.g)));
    }
    if (row.deviation != 0.0) {
      ld_x.push_back(std::log(row.x));
      ld.push_back(std::log(std::abs(row.deviation)));
    }
  }
  audit.log_slope_g = least_squares_slope(lx, lg);
  audit.log_slope_deviation = least_squares_slope(ld_x, ld);
  audit.summary = "claimed g_n(x) = O(x^2) as x -> 0+; fitted slope of log|g| vs log x is " +
                  format_real(audit.log_slope_g) +
                  " (O(x^2) would give 2); slope of log|g - (2H_n - 2log(2 pi x))| is " +
                  format_real(audit.log_slope_deviation);
  return audit;
}

std::vector<int> default_large_n_values() { return {10, 20, 40, 80, 160}; }

LargeNAudit audit_large_n(double x, std::span<const int> ns, const Accuracy& acc) {
  require_scale(x);
  if (ns.empty()) throw DomainError("large-n audit needs at least one n");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    require_order(ns[i]);
    if (i > 0 && !(ns[i] > ns[i - 1])) throw DomainError("large-n audit needs increasing n");
  }
  LargeNAudit audit;
  audit.x = x;
  audit.rows = parallel_map(ns.size(), [&](std::size_t i) {
    LargeNRow row;
    row.n = ns[i];
    try {
      const Estimate g = eval_integral(GridPoint(row.n, x), acc);
      row.g = g.value;
      row.quad_err = g.err_estimate;
    } catch (const NonConvergence& e) {
      row.g = e.value();
      row.quad_err = e.err_estimate();
      row.note = e.what();
    }
    row.n_times_g = row.n * row.g;
    row.comparison = log_asymptote(row.n, x);
    row.deviation = row.g - row.comparison;
    return row;
  });
  const auto& first = audit.rows.front();
  const auto& last = audit.rows.back();
  audit.summary = "claimed g_n(x) = O(1/n) at fixed x; n*g_n goes from " +
                  format_real(first.n_times_g) + " (n=" + std::to_string(first.n) + ") to " +
                  format_real(last.n_times_g) + " (n=" + std::to_string(last.n) +
                  "); g_n - (2H_n - 2log(2 pi x)) goes from " + format_real(first.deviation) +
                  " to " + format_real(last.deviation);
  return audit;
}

std::span<const PaperTableEntry> paper_table() { return kPaperTable; }

TableAudit audit_table(const Accuracy& acc) {
  TableAudit audit;
  int flagged = 0;
  for (const auto& entry : kPaperTable) {
    AuditRow row;
    row.n = entry.n;
    row.x = entry.x;
    row.paper_series_value = entry.series_value;
    row.paper_integral_value = entry.integral_value;
    try {
      const Estimate g = eval_integral(GridPoint(entry.n, entry.x), acc);
      row.computed_value = g.value;
      row.quad_err = g.err_estimate;
    } catch (const NonConvergence& e) {
      row.computed_value = e.value();
      row.quad_err = e.err_estimate();
    }
    row.residual_vs_paper = std::abs(row.computed_value - row.paper_integral_value);
    row.flagged = row.residual_vs_paper > kTableFlagThreshold;
    flagged += row.flagged ? 1 : 0;
    audit.max_residual = std::max(audit.max_residual, row.residual_vs_paper);
    audit.rows.push_back(row);
  }
  audit.summary = "max |computed - paper| = " + format_real(audit.max_residual) + "; " +
                  std::to_string(flagged) + " of " + std::to_string(audit.rows.size()) +
                  " rows exceed " + format_real(kTableFlagThreshold) +
                  ": paper value not reproduced from the integral representation as printed";
  return audit;
}

}  // namespace gfam
