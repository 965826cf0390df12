#pragma once

#include "gfam/core.hpp"

namespace gfam {

/// Point of the generating function: 0 < x <= 1 and |z| <= 0.9.
class GenfuncPoint {
 public:
  static constexpr double kMaxAbsZ = 0.9;

  GenfuncPoint(double x, double z);

  double x() const noexcept { return x_; }
  double z() const noexcept { return z_; }

 private:
  double x_;
  double z_;
};

/// g_n(x) = H_n - log(2 pi x) - int_0^1 n (1-u)^{n-1} log(2 sin(pi x u)) du.
/// This integral form is the definition every other route is checked against.
/// On a quadrature failure the NonConvergence carries the assembled g value.
Estimate eval_integral(const GridPoint& p, const Accuracy& acc = {});

/// x g_n'(x) = -int_0^1 n (1-u)^{n-1} pi x u cot(pi x u) du - 1. Requires x < 1;
/// the cotangent pole at u = 1 makes it diverge at x = 1.
Estimate eval_derivative_cot(const GridPoint& p, const Accuracy& acc = {});

/// Which additive constant closes the even-zeta series for x g_n'(x).
enum class SeriesConstant {
  kAsPrinted,  // -1
  kCorrected,  // -2
};

double series_constant_value(SeriesConstant variant);
const char* series_constant_name(SeriesConstant variant);

/// 2 n! sum_{m>=1} (2m)!/(2m+n)! zeta(2m) x^{2m} + C for 0 <= x < 1.
///
/// The factorial ratio is accumulated as prod_{j=1..n} j/(2m+j). Summation
/// stops once a term drops below series_abs_tol; hitting max_series_terms
/// first returns converged = false with a geometric tail bound as the error.
Estimate eval_derivative_series(int n, double x, SeriesConstant variant,
                                const Accuracy& acc = {});
Estimate eval_derivative_series(const GridPoint& p, SeriesConstant variant,
                                const Accuracy& acc = {});

/// g_{n+1}(x) - g_n(x) as 1/(n+1) minus one integral of the weight difference.
Estimate ladder_delta(int n, double x, const Accuracy& acc = {});

/// g_1(x) plus the ladder steps up to n. Error estimates add up.
Estimate eval_via_ladder(const GridPoint& p, const Accuracy& acc = {});

/// Closed form of sum_{n>=1} g_n(x) z^n.
Estimate genfunc_closed(const GenfuncPoint& q, const Accuracy& acc = {});

/// sum_{n=1..terms} g_n(x) z^n from eval_integral.
Estimate genfunc_partial(const GenfuncPoint& q, int terms, const Accuracy& acc = {});

/// How far past N the tail bound looks for the largest |g_n|.
inline constexpr int kGenfuncTailLookahead = 20;

/// max_{1 <= n <= n_max} |g_n(x)|.
double max_abs_g(double x, int n_max, const Accuracy& acc = {});

/// Bound on the omitted tail of genfunc_partial:
/// max_{n <= terms+20} |g_n(x)| * |z|^{terms+1} / (1 - |z|).
/// Uses the observed magnitudes rather than any assumed decay in n.
double genfunc_tail_bound(const GenfuncPoint& q, int terms, const Accuracy& acc = {});

/// The same bound from an already computed max |g_n|.
double genfunc_tail_bound(double max_abs_g, double z, int terms);

}  // namespace gfam
