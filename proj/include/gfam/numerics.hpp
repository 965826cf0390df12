#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "gfam/core.hpp"

namespace gfam {

using Rational = boost::multiprecision::cpp_rational;

/// Largest m accepted by bernoulli_even and zeta_even_bernoulli.
inline constexpr int kMaxBernoulliHalfIndex = 64;

/// H_n = sum_{k=1..n} 1/k, ascending with compensated summation.
double harmonic(int n);

/// Exact B_{2m} for 0 <= m <= 64. The table is built once, on first use.
const Rational& bernoulli_even(int m);

/// zeta(2m) = (-1)^{m+1} (2 pi)^{2m} B_{2m} / (2 (2m)!), for 1 <= m <= 64.
double zeta_even_bernoulli(int m);

/// zeta(2m) by direct summation up to K plus the integral tail K^{1-2m}/(2m-1).
/// K is the smallest integer with K^{-2m} < acc.series_abs_tol, which bounds
/// the error of the tail correction. Throws DomainError when that K would
/// exceed 1e9 terms.
double zeta_even_direct(int m, const Accuracy& acc = {});

/// Truncated Laurent expansion of pi cot(pi z) keeping terms m = 1..terms.
/// Requires 0 < |z| < 1.
double cot_partial(double z, int terms);

/// Twice the magnitude of the first omitted term of cot_partial. Bounds the
/// truncation error for |z| <= 1/2.
double cot_partial_error_bound(double z, int terms);

}  // namespace gfam
