#include "gfam/quadrature.hpp"

namespace gfam {
namespace {

// Below this angle the cotangent kernel switches to its Taylor polynomial.
constexpr double kCotSeriesThreshold = 1e-4;

void require_unit_interval(double u, const char* what) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw DomainError(std::string(what) + " must lie in [0, 1]");
  }
}

}  // namespace

double log_sin_kernel(double x, double u) { return log_sin_kernel(x, u, 1.0 - u); }

double log_sin_kernel(double x, double u, double u_complement) {
  require_scale(x);
  if (!(u > 0.0 && u <= 1.0)) throw DomainError("u must satisfy 0 < u <= 1");
  require_unit_interval(u_complement, "u complement");
  const double y = x * u;
  double s = 0.0;
  if (y <= 0.5) {
    s = std::sin(std::numbers::pi * y);
  } else {
    // 1 - x u = (1 - x) + x (1 - u); 1 - x is exact for x >= 1/2.
    s = std::sin(std::numbers::pi * ((1.0 - x) + x * u_complement));
  }
  if (!(s > 0.0)) throw DomainError("log_sin_kernel needs sin(pi x u) > 0");
  return std::log(2.0 * s);
}

double cot_kernel(double x, double u) {
  require_scale(x);
  require_unit_interval(u, "u");
  if (!(x * u < 1.0)) throw DomainError("cot_kernel needs x u < 1");
  const double y = std::numbers::pi * x * u;
  if (y < kCotSeriesThreshold) {
    const double y2 = y * y;
    return 1.0 - y2 / 3.0 - y2 * y2 / 45.0;
  }
  return y * std::cos(y) / std::sin(y);
}

double weight(int n, double u) {
  require_order(n);
  require_unit_interval(u, "u");
  return weight_from_complement(n, 1.0 - u);
}

double weight_from_complement(int n, double u_complement) {
  require_order(n);
  require_unit_interval(u_complement, "u complement");
  return n * std::pow(u_complement, n - 1);
}

}  // namespace gfam
