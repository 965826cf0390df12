#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <type_traits>

#include "gfam/core.hpp"
#include "gfam/summation.hpp"

namespace gfam {

/// log(2 sin(pi x u)) for 0 < x <= 1 and 0 < u <= 1. Integrable singularity
/// like log(2 pi x u) as u -> 0+, and at u = 1 when x = 1.
double log_sin_kernel(double x, double u);

/// Same kernel given the exact complement 1 - u as well. When x u > 1/2 the
/// sine is evaluated as sin(pi (1 - x u)) from the complement, which keeps
/// full relative accuracy next to u = 1.
double log_sin_kernel(double x, double u, double u_complement);

/// pi x u cot(pi x u), equal to 1 at u = 0. Requires x u < 1.
double cot_kernel(double x, double u);

/// The normalized weight n (1 - u)^{n-1}; integrates to 1 on [0, 1].
double weight(int n, double u);

/// n * u_complement^{n-1}, i.e. weight(n, 1 - u_complement) without rounding
/// the complement.
double weight_from_complement(int n, double u_complement);

struct QuadResult {
  double value = 0.0;
  /// |S_L - S_{L-1}| between the last two refinement levels.
  double err_estimate = 0.0;
  int evaluations = 0;
  int refinements = 0;
};

namespace detail {

/// Half-width of the truncated t axis. At |t| = 4 the abscissa sits about
/// e^{-86} from the endpoint, well past what log singularities can feel.
inline constexpr double kDeHalfWidth = 4.0;

struct DeNode {
  double u;
  double u_complement;
  double jacobian;
};

inline DeNode de_node(double t) {
  const double s = 0.5 * std::numbers::pi * std::sinh(t);
  const double e = std::exp(-2.0 * std::abs(s));
  const double near = e / (1.0 + e);
  const double far = 1.0 / (1.0 + e);
  DeNode node{};
  node.u = s >= 0.0 ? far : near;
  node.u_complement = s >= 0.0 ? near : far;
  node.jacobian = std::numbers::pi * std::cosh(t) * node.u * node.u_complement;
  return node;
}

template <class F>
double sample(F& f, const DeNode& node) {
  if constexpr (std::is_invocable_r_v<double, F&, double, double>) {
    return f(node.u, node.u_complement);
  } else {
    return f(node.u);
  }
}

}  // namespace detail

/// Tanh-sinh quadrature of f over the open interval (0, 1).
///
/// The substitution u = (1 + tanh(pi/2 sinh t)) / 2 maps the real line onto
/// (0, 1); a trapezoid rule on the t axis then converges double-exponentially
/// even with logarithmic endpoint singularities. The step is halved until two
/// consecutive levels agree to quad_rel_tol * max(|value|, 1). Abscissae never
/// reach 0 or 1: nodes whose u rounds to 1 are dropped.
///
/// `f` is called either as f(u) or, when it accepts two arguments, as
/// f(u, 1 - u) with the complement computed without cancellation.
///
/// Throws NumericalError on a non-finite sample and NonConvergence (carrying
/// the best value) when max_quad_refinements halvings do not converge.
template <class F>
QuadResult integrate_de(F&& f, const Accuracy& acc = {}) {
  acc.validate();
  using detail::de_node;
  using detail::kDeHalfWidth;

  QuadResult result;
  CompensatedSum total;

  auto add = [&](double t) {
    const detail::DeNode node = de_node(t);
    // Past t ~ 3.15 the abscissa rounds to 1; the mass beyond is below 2^-53.
    if (node.u >= 1.0) return;
    const double fx = detail::sample(f, node);
    ++result.evaluations;
    if (!std::isfinite(fx)) {
      throw NumericalError("non-finite integrand sample at u = " + std::to_string(node.u));
    }
    total += fx * node.jacobian;
  };

  // Level 0: unit step.
  const int half_nodes = static_cast<int>(kDeHalfWidth);
  for (int k = -half_nodes; k <= half_nodes; ++k) add(static_cast<double>(k));
  double h = 1.0;
  double previous = h * total.value();

  for (int level = 1; level <= acc.max_quad_refinements; ++level) {
    h *= 0.5;
    // New abscissae are the odd multiples of h.
    const int count = static_cast<int>(kDeHalfWidth / h);
    for (int k = -count + 1; k < count; k += 2) add(k * h);
    const double current = h * total.value();
    result.value = current;
    result.err_estimate = std::abs(current - previous);
    result.refinements = level;
    if (level >= 2 &&
        result.err_estimate <= acc.quad_rel_tol * std::max(std::abs(current), 1.0)) {
      return result;
    }
    previous = current;
  }
  throw NonConvergence("tanh-sinh quadrature did not converge within " +
                           std::to_string(acc.max_quad_refinements) + " refinements",
                       result.value, result.err_estimate);
}

}  // namespace gfam
