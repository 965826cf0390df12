#include "gfam/numerics.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "gfam/summation.hpp"

namespace gfam {
namespace {

constexpr int kMaxIndex = 2 * kMaxBernoulliHalfIndex;
constexpr double kMaxDirectZetaTerms = 1e9;

// B_0..B_{128} from sum_{j=0..k} C(k+1, j) B_j = 0.
std::array<Rational, kMaxIndex + 1> build_bernoulli() {
  std::array<Rational, kMaxIndex + 1> b;
  b[0] = 1;
  for (int k = 1; k <= kMaxIndex; ++k) {
    if (k > 1 && k % 2 == 1) {
      b[k] = 0;
      continue;
    }
    // binom = C(k+1, j), advanced incrementally.
    boost::multiprecision::cpp_int binom = 1;
    Rational acc = 0;
    for (int j = 0; j < k; ++j) {
      if (b[j] != 0) acc += Rational(binom) * b[j];
      binom = binom * (k + 1 - j) / (j + 1);
    }
    b[k] = -acc / Rational(k + 1);
  }
  return b;
}

const std::array<Rational, kMaxIndex + 1>& bernoulli_table() {
  // Static local initialization is thread-safe; readers only ever see the
  // fully built table.
  static const auto table = build_bernoulli();
  return table;
}

void require_half_index(int m, int lo) {
  if (m < lo || m > kMaxBernoulliHalfIndex) {
    throw DomainError("m must satisfy " + std::to_string(lo) + " <= m <= " +
                      std::to_string(kMaxBernoulliHalfIndex));
  }
}

// 2^{2m} |B_{2m}| / (2m)! as a double, rounded once from the exact rational.
double scaled_bernoulli_magnitude(int m) {
  Rational r = abs(bernoulli_even(m));
  boost::multiprecision::cpp_int factorial = 1;
  for (int j = 2; j <= 2 * m; ++j) factorial *= j;
  r /= Rational(factorial);
  r *= Rational(boost::multiprecision::cpp_int(1) << (2 * m));
  return r.convert_to<double>();
}

}  // namespace

double harmonic(int n) {
  require_order(n);
  CompensatedSum sum;
  for (int k = 1; k <= n; ++k) sum += 1.0 / k;
  return sum.value();
}

const Rational& bernoulli_even(int m) {
  require_half_index(m, 0);
  return bernoulli_table()[2 * m];
}

double zeta_even_bernoulli(int m) {
  require_half_index(m, 1);
  const Rational& b = bernoulli_even(m);
  boost::multiprecision::cpp_int factorial = 1;
  for (int j = 2; j <= 2 * m; ++j) factorial *= j;
  // Extended precision keeps the 2m-fold power from drifting below 1 at large m.
  const auto ratio = (abs(b) / Rational(factorial)).convert_to<long double>();
  const int parity = (m % 2 == 1) ? 1 : -1;  // (-1)^{m+1}
  const auto sign = static_cast<long double>(parity * b.sign());
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  return static_cast<double>(sign * std::pow(two_pi, 2 * m) * ratio / 2.0L);
}

double zeta_even_direct(int m, const Accuracy& acc) {
  if (m < 1) throw DomainError("m must satisfy m >= 1");
  acc.validate();
  const double s = 2.0 * m;
  const double estimate = std::floor(std::pow(acc.series_abs_tol, -1.0 / s));
  if (estimate > kMaxDirectZetaTerms) {
    throw DomainError("series_abs_tol too small for direct zeta summation at m = " +
                      std::to_string(m));
  }
  auto cutoff = static_cast<long long>(estimate);
  if (cutoff < 1) cutoff = 1;
  while (std::pow(static_cast<double>(cutoff), -s) >= acc.series_abs_tol) ++cutoff;

  CompensatedSum sum;
  // Descending k adds the small terms first. k^{2m} stays near
  // 1/series_abs_tol, far from overflow.
  for (long long k = cutoff; k >= 1; --k) {
    const double k2 = static_cast<double>(k) * static_cast<double>(k);
    double power = k2;
    for (int i = 1; i < m; ++i) power *= k2;
    sum += 1.0 / power;
  }
  sum += std::pow(static_cast<double>(cutoff), 1.0 - s) / (s - 1.0);
  return sum.value();
}

double cot_partial(double z, int terms) {
  if (!(std::abs(z) > 0.0 && std::abs(z) < 1.0)) {
    throw DomainError("z must satisfy 0 < |z| < 1");
  }
  if (terms < 1) throw DomainError("term count must be >= 1");
  if (terms > kMaxBernoulliHalfIndex) {
    throw DomainError("term count must be <= " + std::to_string(kMaxBernoulliHalfIndex));
  }
  const double pz = std::numbers::pi * z;
  const double pz2 = pz * pz;
  double power = pz;  // (pi z)^{2m-1}
  CompensatedSum sum;
  for (int m = 1; m <= terms; ++m) {
    // (-1)^m B_{2m} is negative for every m >= 1.
    sum += -scaled_bernoulli_magnitude(m) * power * std::numbers::pi;
    power *= pz2;
  }
  sum += 1.0 / z;
  return sum.value();
}

double cot_partial_error_bound(double z, int terms) {
  if (terms < 0 || terms >= kMaxBernoulliHalfIndex) {
    throw DomainError("term count out of range for the error bound");
  }
  const int m = terms + 1;
  const double pz = std::numbers::pi * z;
  return 2.0 * scaled_bernoulli_magnitude(m) * std::abs(std::pow(pz, 2 * m - 1)) *
         std::numbers::pi;
}

}  // namespace gfam
