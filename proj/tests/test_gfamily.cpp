#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "gfam/gfamily.hpp"
#include "gfam/numerics.hpp"
#include "oracles.hpp"

using namespace gfam;

namespace {
double g(int n, double x) { return eval_integral(GridPoint(n, x)).value; }
}  // namespace

TEST_CASE("GridPoint domain") {
  CHECK_NOTHROW(GridPoint(1, 1.0));
  CHECK_THROWS_WITH_AS(GridPoint(1, 0.0), "x must satisfy 0 < x <= 1", DomainError);
  CHECK_THROWS_AS(GridPoint(1, 1.5), DomainError);
  CHECK_THROWS_AS(GridPoint(1, -0.2), DomainError);
  CHECK_THROWS_WITH_AS(GridPoint(0, 0.5), "n must satisfy n >= 1", DomainError);
}

TEST_CASE("eval_integral closed-form checkpoints") {
  CHECK(std::abs(g(1, 0.5) - oracle::g_1_half()) <= 1e-9);
  CHECK(std::abs(g(2, 0.5) - oracle::g_2_half()) <= 1e-9);
  CHECK(std::abs(g(1, 1.0) - oracle::g_1_one()) <= 1e-9);
  CHECK(g(1, 0.5) == doctest::Approx(-0.1447299).epsilon(1e-6));
  CHECK(g(2, 0.5) == doctest::Approx(0.7815491).epsilon(1e-6));
  CHECK(g(1, 1.0) == doctest::Approx(-0.8378771).epsilon(1e-6));
}

TEST_CASE("eval_integral against high-precision quadrature") {
  CHECK(std::abs(g(3, 0.5) - oracle::kG3Half) <= 1e-12);
  CHECK(std::abs(g(2, 1.0) - oracle::kG2One) <= 1e-12);
  CHECK(std::abs(g(10, 0.5) - oracle::kG10Half) <= 1e-12);
  CHECK(std::abs(g(9, 0.3) - oracle::kG9Point3) <= 1e-12);
  CHECK(std::abs(g(10, 0.3) - oracle::kG10Point3) <= 1e-12);
}

TEST_CASE("eval_integral is deterministic in x") {
  const double a = 0.3;
  const double b = 3.0 / 10.0;
  REQUIRE(a == b);
  for (int n : {1, 4, 17}) {
    const Estimate first = eval_integral(GridPoint(n, a));
    const Estimate second = eval_integral(GridPoint(n, b));
    CHECK(first.value == second.value);
    CHECK(first.err_estimate == second.err_estimate);
  }
}

TEST_CASE("eval_integral reports non-convergence with the assembled value") {
  Accuracy acc;
  acc.max_quad_refinements = 1;
  try {
    eval_integral(GridPoint(2, 0.5), acc);
    FAIL("expected NonConvergence");
  } catch (const NonConvergence& e) {
    CHECK(std::abs(e.value() - oracle::g_2_half()) < 0.1);
  }
}

TEST_CASE("eval_derivative_cot") {
  CHECK(eval_derivative_cot(GridPoint(1, 1e-6)).value == doctest::Approx(-2.0).epsilon(1e-10));
  CHECK(std::abs(eval_derivative_cot(GridPoint(1, 0.5)).value - oracle::x_dg_1_half()) <= 1e-12);
  CHECK(std::abs(eval_derivative_cot(GridPoint(2, 0.5)).value - oracle::kXdG2Half) <= 1e-12);
  CHECK_THROWS_AS(eval_derivative_cot(GridPoint(1, 1.0)), DomainError);
}

TEST_CASE("eval_derivative_cot matches finite differences of the integral form") {
  for (int n : {1, 2, 5}) {
    const auto gx = [n](double x) { return g(n, x); };
    const double fd = oracle::x_times_central_difference(gx, 0.5, 1e-5);
    CAPTURE(n);
    CHECK(std::abs(fd - eval_derivative_cot(GridPoint(n, 0.5)).value) <= 1e-6);
  }
}

TEST_CASE("eval_derivative_series constants") {
  const Estimate printed = eval_derivative_series(1, 0.0, SeriesConstant::kAsPrinted);
  const Estimate corrected = eval_derivative_series(1, 0.0, SeriesConstant::kCorrected);
  CHECK(printed.value == -1.0);
  CHECK(corrected.value == -2.0);
  CHECK(series_constant_value(SeriesConstant::kAsPrinted) == -1.0);
  CHECK(series_constant_value(SeriesConstant::kCorrected) == -2.0);
}

TEST_CASE("eval_derivative_series against the cotangent average") {
  const double cot = eval_derivative_cot(GridPoint(1, 0.5)).value;
  const Estimate corrected = eval_derivative_series(GridPoint(1, 0.5), SeriesConstant::kCorrected);
  const Estimate printed = eval_derivative_series(GridPoint(1, 0.5), SeriesConstant::kAsPrinted);
  CHECK(corrected.converged);
  CHECK(std::abs(corrected.value - cot) <= 1e-9);
  CHECK(std::abs((printed.value - cot) - 1.0) <= 1e-9);
  for (int n = 1; n <= 6; ++n) {
    for (double x : {0.2, 0.5, 0.8}) {
      const GridPoint p(n, x);
      CAPTURE(n);
      CAPTURE(x);
      CHECK(std::abs(eval_derivative_series(p, SeriesConstant::kCorrected).value -
                     eval_derivative_cot(p).value) <= 1e-8);
    }
  }
}

TEST_CASE("eval_derivative_series honours the term cap near x = 1") {
  const Estimate capped = eval_derivative_series(1, 0.95, SeriesConstant::kCorrected);
  CHECK_FALSE(capped.converged);
  CHECK(capped.err_estimate > 0.0);
  Accuracy wide;
  wide.max_series_terms = 2000;
  const Estimate full = eval_derivative_series(1, 0.95, SeriesConstant::kCorrected, wide);
  CHECK(full.converged);
  CHECK(std::abs(full.value - capped.value) <= capped.err_estimate);
  CHECK_THROWS_AS(eval_derivative_series(1, 1.0, SeriesConstant::kCorrected), DomainError);
  CHECK_THROWS_AS(eval_derivative_series(1, -0.1, SeriesConstant::kCorrected), DomainError);
}

TEST_CASE("ladder_delta") {
  CHECK(std::abs(ladder_delta(1, 0.5).value - oracle::ladder_1_half()) <= 1e-12);
  CHECK(ladder_delta(1, 0.5).value == doctest::Approx(0.9262790).epsilon(1e-6));
  CHECK(std::abs(ladder_delta(1, 0.5).value - (g(2, 0.5) - g(1, 0.5))) <= 1e-9);
  CHECK(std::abs(ladder_delta(9, 0.3).value - (g(10, 0.3) - g(9, 0.3))) <= 1e-8);
  CHECK_THROWS_AS(ladder_delta(0, 0.5), DomainError);
  CHECK_THROWS_AS(ladder_delta(1, 1.5), DomainError);
}

TEST_CASE("eval_via_ladder") {
  for (double x : {0.1, 0.5, 1.0}) {
    CHECK(eval_via_ladder(GridPoint(1, x)).value == eval_integral(GridPoint(1, x)).value);
  }
  CHECK(eval_via_ladder(GridPoint(2, 0.5)).value == doctest::Approx(0.7815491).epsilon(1e-6));
  const Estimate ladder = eval_via_ladder(GridPoint(10, 0.5));
  const double tol = Accuracy{}.quad_rel_tol * std::max(1.0, std::abs(ladder.value));
  CHECK(std::abs(ladder.value - g(10, 0.5)) <= 9 * tol);
}

TEST_CASE("ladder and path equivalence on random points") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> order(1, 25);
  std::uniform_real_distribution<double> scale(0.01, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = order(rng);
    const double x = scale(rng);
    CAPTURE(n);
    CAPTURE(x);
    CHECK(std::abs(g(n + 1, x) - g(n, x) - ladder_delta(n, x).value) <= 1e-8);
    CHECK(std::abs(eval_via_ladder(GridPoint(n, x)).value - g(n, x)) <= n * 1e-8);
  }
}

TEST_CASE("GenfuncPoint domain") {
  CHECK_NOTHROW(GenfuncPoint(0.5, 0.9));
  CHECK_NOTHROW(GenfuncPoint(0.5, -0.9));
  CHECK_THROWS_AS(GenfuncPoint(0.5, 0.95), DomainError);
  CHECK_THROWS_AS(GenfuncPoint(0.0, 0.5), DomainError);
}

TEST_CASE("genfunc_closed") {
  for (double x : {0.2, 0.5, 1.0}) CHECK(genfunc_closed(GenfuncPoint(x, 0.0)).value == 0.0);
  CHECK(std::abs(genfunc_closed(GenfuncPoint(0.5, 0.5)).value - oracle::kGenfuncHalfHalf) <= 1e-12);
  CHECK(std::abs(genfunc_closed(GenfuncPoint(0.3, -0.5)).value - oracle::kGenfuncPoint3MinusHalf) <=
        1e-12);
}

TEST_CASE("genfunc_closed agrees with partial sums") {
  for (const auto& [x, z] : {std::pair{0.5, 0.5}, std::pair{0.3, -0.5}}) {
    const GenfuncPoint q(x, z);
    const double bound = genfunc_tail_bound(q, 60);
    CHECK(bound < 1e-15);
    CHECK(std::abs(genfunc_closed(q).value - genfunc_partial(q, 60).value) <= 1e-9 + bound);
  }
}

TEST_CASE("genfunc_partial") {
  const GenfuncPoint q(0.5, 0.5);
  CHECK(genfunc_partial(q, 1).value == doctest::Approx(-0.0723650).epsilon(1e-5));
  CHECK(genfunc_partial(q, 1).value == 0.5 * g(1, 0.5));
  CHECK(genfunc_partial(q, 2).value == doctest::Approx(0.1230223).epsilon(1e-5));
  CHECK(genfunc_partial(GenfuncPoint(0.7, 0.0), 10).value == 0.0);
  CHECK_THROWS_AS(genfunc_partial(q, 0), DomainError);
}

TEST_CASE("genfunc_tail_bound uses observed magnitudes") {
  const double largest = max_abs_g(0.5, 80);
  CHECK(largest >= std::abs(g(80, 0.5)));
  CHECK(genfunc_tail_bound(largest, 0.5, 60) ==
        doctest::Approx(largest * std::pow(0.5, 61) / 0.5));
  CHECK(genfunc_tail_bound(GenfuncPoint(0.5, -0.5), 60) == genfunc_tail_bound(largest, -0.5, 60));
}
