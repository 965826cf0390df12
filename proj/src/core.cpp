#include "gfam/core.hpp"

#include <cmath>

namespace gfam {

void Accuracy::validate() const {
  if (!(quad_rel_tol > 0.0) || !std::isfinite(quad_rel_tol)) {
    throw DomainError("quad_rel_tol must be a positive finite number");
  }
  if (!(series_abs_tol > 0.0) || !std::isfinite(series_abs_tol)) {
    throw DomainError("series_abs_tol must be a positive finite number");
  }
  if (max_series_terms < 1) {
    throw DomainError("max_series_terms must be >= 1");
  }
  if (max_quad_refinements < 1) {
    throw DomainError("max_quad_refinements must be >= 1");
  }
}

void require_order(int n) {
  if (n < 1) throw DomainError("n must satisfy n >= 1");
}

void require_scale(double x) {
  if (!(x > 0.0 && x <= 1.0)) throw DomainError("x must satisfy 0 < x <= 1");
}

GridPoint::GridPoint(int n, double x) : n_(n), x_(x) {
  require_order(n);
  require_scale(x);
}

}  // namespace gfam
