#pragma once

#include <stdexcept>
#include <string>

namespace gfam {

/// Raised when an argument lies outside an operation's supported domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical routine cannot produce a trustworthy value.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quadrature or series budget ran out. Carries the best value found and
/// its error estimate so callers can still report it.
class NonConvergence : public NumericalError {
 public:
  NonConvergence(const std::string& what, double value, double err_estimate)
      : NumericalError(what), value_(value), err_estimate_(err_estimate) {}

  double value() const noexcept { return value_; }
  double err_estimate() const noexcept { return err_estimate_; }

 private:
  double value_;
  double err_estimate_;
};

/// Tolerances and truncation budgets for quadrature and series evaluation.
struct Accuracy {
  double quad_rel_tol = 1e-12;
  double series_abs_tol = 1e-15;
  int max_series_terms = 200;
  int max_quad_refinements = 12;

  /// Throws DomainError unless every tolerance is positive and every cap >= 1.
  void validate() const;
};

/// An (order n, scale x) evaluation point with n >= 1 and 0 < x <= 1.
class GridPoint {
 public:
  GridPoint(int n, double x);

  int n() const noexcept { return n_; }
  double x() const noexcept { return x_; }

  friend bool operator==(const GridPoint&, const GridPoint&) = default;

 private:
  int n_;
  double x_;
};

/// Throws DomainError with a message naming the violated bound.
void require_order(int n);
void require_scale(double x);

/// A value together with an a-posteriori error estimate. `converged` is false
/// when a series term cap was reached before its tail dropped below tolerance.
struct Estimate {
  double value = 0.0;
  double err_estimate = 0.0;
  bool converged = true;
};

}  // namespace gfam
