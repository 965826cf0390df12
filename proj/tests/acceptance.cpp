// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "gfam/cli.hpp"
#include "gfam/format.hpp"
#include "gfam/gfamily.hpp"
#include "gfam/report_io.hpp"
#include "gfam/verify.hpp"
#include "oracles.hpp"

using namespace gfam;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  std::string name;
  double time_limit_s;  // <= 0 means no limit
  std::function<Outcome()> check;
};

std::string sci(double v) { return format_real(v); }

Outcome closed_form_checkpoints() {
  const double e1 = std::abs(eval_integral(GridPoint(1, 0.5)).value - oracle::g_1_half());
  const double e2 = std::abs(eval_integral(GridPoint(2, 0.5)).value - oracle::g_2_half());
  const double e3 = std::abs(eval_integral(GridPoint(1, 1.0)).value - oracle::g_1_one());
  const double worst = std::max({e1, e2, e3});
  return {worst <= 1e-9, "max |g - closed form| = " + sci(worst) + " (tol 1e-9)"};
}

Outcome derivative_identity() {
  const IdentityReport r = check_derivative(default_derivative_grid());
  return {r.passed && r.max_abs_residual <= 1e-6,
          "max |x FD(g) - cot form| = " + sci(r.max_abs_residual) + " over " +
              std::to_string(r.grid.size()) + " points (tol 1e-6)"};
}

Outcome ladder_identity() {
  const auto grid = default_ladder_grid();
  const IdentityReport ladder = check_ladder(grid);
  // Path equivalence checked directly against n * 1e-8, independent of the
  // report's scaled residual.
  double worst_excess = -INFINITY;
  double worst_path = 0.0;
  for (const auto& p : grid) {
    const double diff =
        std::abs(eval_via_ladder(p).value - eval_integral(p).value);
    worst_path = std::max(worst_path, diff);
    worst_excess = std::max(worst_excess, diff - p.n() * 1e-8);
  }
  const bool ok = ladder.passed && ladder.max_abs_residual <= 1e-8 && worst_excess <= 0.0;
  return {ok, "ladder max residual " + sci(ladder.max_abs_residual) + " (tol 1e-8); path max |diff| " +
                  sci(worst_path) + " (tol n*1e-8)"};
}

Outcome generating_function() {
  double worst = 0.0;
  bool ok = true;
  for (double x : {0.3, 0.5}) {
    const double largest = max_abs_g(x, kGenfuncTerms + kGenfuncTailLookahead);
    for (double z : {-0.5, -0.3, 0.3, 0.5}) {
      const GenfuncPoint q(x, z);
      const double diff =
          std::abs(genfunc_closed(q).value - genfunc_partial(q, kGenfuncTerms).value);
      const double bound = 1e-8 + genfunc_tail_bound(largest, z, kGenfuncTerms);
      ok = ok && diff <= bound;
      worst = std::max(worst, diff);
    }
  }
  const IdentityReport r = check_genfunc(default_genfunc_xs(), default_genfunc_zs());
  ok = ok && r.passed;
  return {ok, "max |closed - partial(N=60)| = " + sci(worst) + " (tol 1e-8 + tail bound)"};
}

Outcome bernoulli_zeta() {
  const IdentityReport r = check_bernoulli_zeta(30);
  return {r.passed && r.max_abs_residual <= 1e-12,
          "max relative residual m=1..30 = " + sci(r.max_abs_residual) + " (tol 1e-12)"};
}

Outcome series_constant() {
  const IdentityReport r = check_series_constant(default_derivative_grid());
  const bool names_variant = r.notes.find("matching variant: ") != std::string::npos;
  const std::string first_line = r.notes.substr(0, r.notes.find('\n'));
  return {r.passed && names_variant && r.max_abs_residual <= 1e-8, first_line};
}

Outcome paper_audits() {
  const TableAudit table = audit_table();
  if (table.rows.size() != 4) return {false, "audit_table emitted " + std::to_string(table.rows.size()) + " rows"};
  const AuditRow& row = table.rows[0];
  const bool row_ok = row.n == 1 && row.x == 0.5 && std::abs(row.computed_value + 0.1447299) <= 1e-7 &&
                      row.paper_integral_value == 0.0770 &&
                      row.residual_vs_paper == std::abs(row.computed_value - row.paper_integral_value) &&
                      row.flagged;

  const auto xs = default_small_x_values();
  const SmallXAudit small = audit_small_x(1, xs);
  bool small_ok = small.rows.size() == xs.size();
  for (const auto& r : small.rows) {
    small_ok = small_ok &&
               r.comparison == 2.0 * 1.0 - 2.0 * std::log(2.0 * std::numbers::pi * r.x) &&
               r.deviation == r.g - r.comparison;
  }
  const auto ns = default_large_n_values();
  const LargeNAudit large = audit_large_n(0.5, ns);
  bool large_ok = large.rows.size() == ns.size();
  for (const auto& r : large.rows) large_ok = large_ok && r.deviation == r.g - r.comparison;

  // Deterministic emission through the CLI, twice.
  std::ostringstream a, b, err;
  const int sa = cli::run({"gfam", "audit"}, a, err);
  const int sb = cli::run({"gfam", "audit"}, b, err);
  const bool cli_ok = sa == 0 && sb == 0 && a.str() == b.str() &&
                      a.str().find("0.2217298858494") != std::string::npos;

  return {row_ok && small_ok && large_ok && cli_ok,
          "row (1,0.5): computed " + sci(row.computed_value) + " vs paper " +
              sci(row.paper_integral_value) + ", residual " + sci(row.residual_vs_paper) +
              "; small-x slope of deviation " + sci(small.log_slope_deviation)};
}

Outcome determinism() {
  std::ostringstream a, b, err;
  const int sa = cli::run({"gfam", "verify"}, a, err);
  const int sb = cli::run({"gfam", "verify"}, b, err);
  return {sa == 0 && sb == 0 && a.str() == b.str() && !a.str().empty(),
          "two verify runs: " + std::to_string(a.str().size()) + " bytes each, identical=" +
              (a.str() == b.str() ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"closed-form checkpoints", 1.0, closed_form_checkpoints},
      {"derivative identity", 5.0, derivative_identity},
      {"ladder identity + path equivalence", 10.0, ladder_identity},
      {"generating function", 10.0, generating_function},
      {"Bernoulli-zeta relation", 1.0, bernoulli_zeta},
      {"series-constant discrimination", 0.0, series_constant},
      {"paper table and corollary audits", 0.0, paper_audits},
      {"verify determinism", 0.0, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit_s <= 0.0 || elapsed < c.time_limit_s;
    const bool passed = outcome.passed && in_time;
    failures += passed ? 0 : 1;
    std::printf("[%s] %-36s %s; %.3f s%s\n", passed ? "PASS" : "FAIL", c.name.c_str(),
                outcome.detail.c_str(), elapsed,
                c.time_limit_s > 0.0 ? (" (limit " + format_real(c.time_limit_s) + " s)").c_str()
                                     : "");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
