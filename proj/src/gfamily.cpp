#include "gfam/gfamily.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "gfam/numerics.hpp"
#include "gfam/quadrature.hpp"
#include "gfam/summation.hpp"

namespace gfam {
namespace {

// zeta(2m) for m = 1..64 from the Bernoulli relation, index 0 unused.
const std::array<double, kMaxBernoulliHalfIndex + 1>& even_zeta_table() {
  static const auto table = [] {
    std::array<double, kMaxBernoulliHalfIndex + 1> t{};
    for (int m = 1; m <= kMaxBernoulliHalfIndex; ++m) t[m] = zeta_even_bernoulli(m);
    return t;
  }();
  return table;
}

double even_zeta(int m, const Accuracy& acc) {
  if (m <= kMaxBernoulliHalfIndex) return even_zeta_table()[m];
  return zeta_even_direct(m, acc);
}

double log_two_pi(double x) { return std::log(2.0 * std::numbers::pi * x); }

}  // namespace

GenfuncPoint::GenfuncPoint(double x, double z) : x_(x), z_(z) {
  require_scale(x);
  if (!(std::abs(z) <= kMaxAbsZ)) throw DomainError("z must satisfy |z| <= 0.9");
}

Estimate eval_integral(const GridPoint& p, const Accuracy& acc) {
  const int n = p.n();
  const double x = p.x();
  const double head = harmonic(n) - log_two_pi(x);
  auto integrand = [n, x](double u, double uc) {
    return weight_from_complement(n, uc) * log_sin_kernel(x, u, uc);
  };
  try {
    const QuadResult q = integrate_de(integrand, acc);
    return {head - q.value, q.err_estimate, true};
  } catch (const NonConvergence& e) {
    throw NonConvergence("g_n(x) integral: " + std::string(e.what()), head - e.value(),
                         e.err_estimate());
  }
}

Estimate eval_derivative_cot(const GridPoint& p, const Accuracy& acc) {
  const int n = p.n();
  const double x = p.x();
  if (!(x < 1.0)) {
    throw DomainError("x must satisfy 0 < x < 1 for the derivative (diverges at x = 1)");
  }
  auto integrand = [n, x](double u, double uc) {
    return weight_from_complement(n, uc) * cot_kernel(x, u);
  };
  const QuadResult q = integrate_de(integrand, acc);
  return {-q.value - 1.0, q.err_estimate, true};
}

double series_constant_value(SeriesConstant variant) {
  return variant == SeriesConstant::kAsPrinted ? -1.0 : -2.0;
}

const char* series_constant_name(SeriesConstant variant) {
  return variant == SeriesConstant::kAsPrinted ? "as_printed" : "corrected";
}

Estimate eval_derivative_series(int n, double x, SeriesConstant variant,
                                const Accuracy& acc) {
  require_order(n);
  acc.validate();
  if (!(x >= 0.0 && x < 1.0)) {
    throw DomainError("x must satisfy 0 <= x < 1 for the zeta series (diverges at x >= 1)");
  }
  const double x2 = x * x;
  CompensatedSum sum;
  double power = 1.0;  // x^{2m}
  double last_term = 0.0;
  bool converged = false;
  for (int m = 1; m <= acc.max_series_terms; ++m) {
    power *= x2;
    double ratio = 1.0;  // n! (2m)! / (2m+n)!
    for (int j = 1; j <= n; ++j) ratio *= static_cast<double>(j) / (2.0 * m + j);
    last_term = 2.0 * ratio * even_zeta(m, acc) * power;
    sum += last_term;
    if (last_term < acc.series_abs_tol) {
      converged = true;
      break;
    }
  }
  // Successive terms shrink at least by x^2, so the tail is geometric.
  const double tail = x2 < 1.0 ? last_term * x2 / (1.0 - x2) : last_term;
  return {sum.value() + series_constant_value(variant), tail, converged};
}

Estimate eval_derivative_series(const GridPoint& p, SeriesConstant variant,
                                const Accuracy& acc) {
  return eval_derivative_series(p.n(), p.x(), variant, acc);
}

Estimate ladder_delta(int n, double x, const Accuracy& acc) {
  require_order(n);
  require_scale(x);
  auto integrand = [n, x](double u, double uc) {
    const double bracket = (n + 1) * std::pow(uc, n) - n * std::pow(uc, n - 1);
    return bracket * log_sin_kernel(x, u, uc);
  };
  const QuadResult q = integrate_de(integrand, acc);
  return {1.0 / (n + 1) - q.value, q.err_estimate, true};
}

Estimate eval_via_ladder(const GridPoint& p, const Accuracy& acc) {
  const Estimate base = eval_integral(GridPoint(1, p.x()), acc);
  CompensatedSum value;
  value += base.value;
  double err = base.err_estimate;
  for (int k = 1; k < p.n(); ++k) {
    const Estimate step = ladder_delta(k, p.x(), acc);
    value += step.value;
    err += step.err_estimate;
  }
  return {value.value(), err, true};
}

Estimate genfunc_closed(const GenfuncPoint& q, const Accuracy& acc) {
  const double x = q.x();
  const double z = q.z();
  auto integrand = [x, z](double u, double uc) {
    const double d = 1.0 - z * uc;
    return log_sin_kernel(x, u, uc) * z / (d * d);
  };
  const QuadResult r = integrate_de(integrand, acc);
  const double value =
      -(z / (1.0 - z)) * log_two_pi(x) - std::log1p(-z) / (1.0 - z) - r.value;
  return {value, r.err_estimate, true};
}

Estimate genfunc_partial(const GenfuncPoint& q, int terms, const Accuracy& acc) {
  if (terms < 1) throw DomainError("term count N must satisfy N >= 1");
  CompensatedSum sum;
  double err = 0.0;
  double power = 1.0;
  for (int n = 1; n <= terms; ++n) {
    power *= q.z();
    const Estimate g = eval_integral(GridPoint(n, q.x()), acc);
    sum += g.value * power;
    err += g.err_estimate * std::abs(power);
  }
  return {sum.value(), err, true};
}

double max_abs_g(double x, int n_max, const Accuracy& acc) {
  require_order(n_max);
  double largest = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    largest = std::max(largest, std::abs(eval_integral(GridPoint(n, x), acc).value));
  }
  return largest;
}

double genfunc_tail_bound(const GenfuncPoint& q, int terms, const Accuracy& acc) {
  if (terms < 1) throw DomainError("term count N must satisfy N >= 1");
  return genfunc_tail_bound(max_abs_g(q.x(), terms + kGenfuncTailLookahead, acc), q.z(), terms);
}

double genfunc_tail_bound(double max_abs_g, double z, int terms) {
  if (terms < 1) throw DomainError("term count N must satisfy N >= 1");
  const double az = std::abs(z);
  if (!(az < 1.0)) throw DomainError("z must satisfy |z| < 1");
  return max_abs_g * std::pow(az, terms + 1) / (1.0 - az);
}

}  // namespace gfam
