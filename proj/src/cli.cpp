#include "gfam/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>

#include "CLI11.hpp"
#include "gfam/format.hpp"
#include "gfam/gfamily.hpp"
#include "gfam/report_io.hpp"
#include "gfam/verify.hpp"

namespace gfam::cli {
namespace {

struct GlobalOptions {
  std::string format = "plain";
  std::string out_path;
  Accuracy acc;
};

struct EvalOptions {
  int n = 1;
  double x = 0.0;
  std::string method = "integral";
  std::string variant = "corrected";
};

struct TableOptions {
  std::vector<int> ns;
  std::vector<double> xs;
};

struct VerifyOptions {
  std::vector<std::string> only;
};

struct AuditOptions {
  std::vector<std::string> only;
  int n = 1;
  double x = 0.5;
  std::vector<double> xs = default_small_x_values();
  std::vector<int> ns = default_large_n_values();
};

// Warnings for numerical trouble go to `err`; the value is still emitted.
class Session {
 public:
  Session(const GlobalOptions& g, std::ostream& out, std::ostream& err)
      : format_(*parse_output_format(g.format)), acc_(g.acc), err_(err), out_(&out) {
    if (!g.out_path.empty()) {
      file_ = std::make_unique<std::ofstream>(g.out_path);
      if (!*file_) throw DomainError("cannot open output file: " + g.out_path);
      out_ = file_.get();
    }
  }

  OutputFormat format() const { return format_; }
  const Accuracy& acc() const { return acc_; }
  std::ostream& out() { return *out_; }
  std::ostream& err() { return err_; }

 private:
  OutputFormat format_;
  Accuracy acc_;
  std::ostream& err_;
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
};

int cmd_eval(Session& s, const EvalOptions& o) {
  const GridPoint p(o.n, o.x);
  EvalRecord record{o.n, o.x, o.method, {}};
  int status = exit_code::kOk;
  try {
    if (o.method == "integral") {
      record.estimate = eval_integral(p, s.acc());
    } else if (o.method == "ladder") {
      record.estimate = eval_via_ladder(p, s.acc());
    } else if (o.method == "derivative-cot") {
      record.estimate = eval_derivative_cot(p, s.acc());
    } else {
      const auto variant =
          o.variant == "as-printed" ? SeriesConstant::kAsPrinted : SeriesConstant::kCorrected;
      record.estimate = eval_derivative_series(p, variant, s.acc());
      if (!record.estimate.converged) {
        s.err() << "warning: series term cap reached before the tail fell below series_tol\n";
        status = exit_code::kNonConvergence;
      }
    }
  } catch (const NonConvergence& e) {
    s.err() << "warning: " << e.what() << '\n';
    record.estimate = {e.value(), e.err_estimate(), false};
    status = exit_code::kNonConvergence;
  }
  write_eval(s.out(), s.format(), record);
  return status;
}

int cmd_table(Session& s, const TableOptions& o) {
  if (o.ns.empty()) throw DomainError("table needs a non-empty --n list");
  if (o.xs.empty()) throw DomainError("table needs a non-empty --x list");
  std::vector<GridPoint> grid;
  for (int n : o.ns) {
    for (double x : o.xs) grid.emplace_back(n, x);
  }
  int status = exit_code::kOk;
  std::vector<TableRow> rows;
  for (const auto& p : grid) {
    TableRow row{p.n(), p.x()};
    try {
      const Estimate integral = eval_integral(p, s.acc());
      row.g_integral = integral.value;
      row.quad_err = integral.err_estimate;
    } catch (const NonConvergence& e) {
      s.err() << "warning: n=" << p.n() << " x=" << format_real(p.x()) << ": " << e.what() << '\n';
      row.g_integral = e.value();
      row.quad_err = e.err_estimate();
      status = exit_code::kNonConvergence;
    }
    try {
      row.g_ladder = eval_via_ladder(p, s.acc()).value;
    } catch (const NonConvergence& e) {
      s.err() << "warning: n=" << p.n() << " x=" << format_real(p.x()) << ": " << e.what() << '\n';
      row.g_ladder = e.value();
      status = exit_code::kNonConvergence;
    }
    row.abs_diff = std::abs(row.g_integral - row.g_ladder);
    rows.push_back(row);
  }
  // Rows are only written once all of them exist.
  write_table(s.out(), s.format(), rows);
  return status;
}

int cmd_verify(Session& s, const VerifyOptions& o) {
  std::vector<IdentityId> suite;
  if (o.only.empty()) {
    const auto defaults = default_identities();
    suite.assign(defaults.begin(), defaults.end());
  } else {
    for (const auto& name : o.only) {
      const auto id = parse_identity(name);
      if (!id) throw DomainError("unknown identity id: " + name);
      suite.push_back(*id);
    }
  }
  std::vector<IdentityReport> reports;
  bool all_passed = true;
  for (IdentityId id : suite) {
    reports.push_back(run_identity(id, s.acc()));
    all_passed = all_passed && reports.back().passed;
  }
  write_reports(s.out(), s.format(), reports);
  return all_passed ? exit_code::kOk : exit_code::kVerificationFailed;
}

int cmd_audit(Session& s, const AuditOptions& o) {
  static const std::vector<std::string> kAll = {"table", "small-x", "large-n"};
  std::vector<std::string> which = o.only.empty() ? kAll : o.only;
  for (const auto& name : which) {
    if (std::find(kAll.begin(), kAll.end(), name) == kAll.end()) {
      throw DomainError("unknown audit: " + name);
    }
  }
  for (const auto& name : which) {
    if (name == "table") {
      write_table_audit(s.out(), s.format(), audit_table(s.acc()));
    } else if (name == "small-x") {
      write_small_x_audit(s.out(), s.format(), audit_small_x(o.n, o.xs, s.acc()));
    } else {
      write_large_n_audit(s.out(), s.format(), audit_large_n(o.x, o.ns, s.acc()));
    }
  }
  return exit_code::kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluate and cross-check the regularized functionals g_n(x)", "gfam"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "json-lines"}));
  app.add_option("--out", global.out_path, "Write output to PATH instead of stdout");
  app.add_option("--quad-tol", global.acc.quad_rel_tol, "Quadrature relative tolerance");
  app.add_option("--series-tol", global.acc.series_abs_tol, "Series absolute tail tolerance");
  app.add_option("--max-terms", global.acc.max_series_terms, "Series term cap");

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one point");
  eval_cmd->add_option("--n", eval.n, "Order n >= 1")->required();
  eval_cmd->add_option("--x", eval.x, "Scale 0 < x <= 1")->required();
  eval_cmd->add_option("--method", eval.method, "Evaluation route")
      ->check(CLI::IsMember({"integral", "ladder", "derivative-cot", "derivative-series"}));
  eval_cmd->add_option("--variant", eval.variant, "Series constant for derivative-series")
      ->check(CLI::IsMember({"corrected", "as-printed"}));

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Tabulate a grid of (n, x)");
  table_cmd->add_option("--n", table.ns, "Comma-separated orders")->required()->delimiter(',');
  table_cmd->add_option("--x", table.xs, "Comma-separated scales")->required()->delimiter(',');

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run identity checks");
  verify_cmd->add_option("--only", verify.only, "Identity ids to run")->delimiter(',');

  AuditOptions audit;
  auto* audit_cmd = app.add_subcommand("audit", "Run report-only audits");
  audit_cmd->add_option("--only", audit.only, "Audits: table, small-x, large-n")->delimiter(',');
  audit_cmd->add_option("--n", audit.n, "Order for the small-x audit");
  audit_cmd->add_option("--x", audit.x, "Scale for the large-n audit");
  audit_cmd->add_option("--xs", audit.xs, "Decreasing x values for small-x")->delimiter(',');
  audit_cmd->add_option("--ns", audit.ns, "Increasing n values for large-n")->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_code::kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return exit_code::kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::kUsage;
  }

  try {
    global.acc.validate();
    Session session(global, out, err);
    if (*eval_cmd) return cmd_eval(session, eval);
    if (*table_cmd) return cmd_table(session, table);
    if (*verify_cmd) return cmd_verify(session, verify);
    return cmd_audit(session, audit);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kNonConvergence;
  }
}

}  // namespace gfam::cli
