#include <doctest.h>

#include <cmath>

#include "hypineq/quadrature.hpp"

using namespace hypineq::quad;

TEST_CASE("finite intervals") {
  const auto r1 = integrate_interval([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(r1.value == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  const auto r2 = integrate_interval([](double x) { return std::sin(x); }, 0.0, M_PI);
  CHECK(r2.value == doctest::Approx(2.0).epsilon(1e-14));
  // cosh 1 - 1
  const auto r3 = integrate_interval([](double x) { return std::sinh(x); }, 0.0, 1.0);
  CHECK(r3.value == doctest::Approx(0.5430806348152437).epsilon(1e-14));
  // coth 1 - coth 2
  const auto r4 = integrate_interval([](double x) { return 1.0 / std::pow(std::sinh(x), 2); }, 1.0, 2.0);
  CHECK(r4.value == doctest::Approx(1.0 / std::tanh(1.0) - 1.0 / std::tanh(2.0)).epsilon(1e-13));
  CHECK(integrate_interval([](double) { return 1.0; }, 2.0, 2.0).value == 0.0);
  CHECK_THROWS_AS(integrate_interval([](double) { return 1.0; }, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("error estimates bound the true error") {
  for (double tol : {1e-4, 1e-8, 1e-12}) {
    const auto r = integrate_interval([](double x) { return std::exp(-x) * std::cos(5 * x); }, 0.0, 3.0,
                                      Tolerance(tol));
    const double exact = (1.0 - std::exp(-3.0) * (std::cos(15.0) - 5.0 * std::sin(15.0))) / 26.0;
    CHECK(std::abs(r.value - exact) <= r.error + 1e-16);
    CHECK(r.error <= tol * std::abs(exact) * 1.01);
  }
}

TEST_CASE("breakpoints and 31-point rule") {
  IntervalOptions opt;
  opt.breakpoints = {0.3};
  const auto r = integrate_interval([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, {}, opt);
  CHECK(r.value == doctest::Approx(0.045 + 0.245).epsilon(1e-14));
  CHECK(r.subdivisions == 2);
  IntervalOptions gk31;
  gk31.rule = Rule::GK31;
  const auto p = integrate_interval([](double x) { return std::pow(x, 40); }, -1.0, 1.0, {}, gk31);
  CHECK(p.value == doctest::Approx(2.0 / 41.0).epsilon(1e-14));
  CHECK(p.subdivisions <= 2);
}

TEST_CASE("semi-infinite with decay envelope") {
  const auto r = integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0, {1.0, 1.0});
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r.truncation_point > 8.0);
  // int_1^inf sinh^-2 = coth 1 - 1
  const auto s = integrate_semi_infinite([](double x) { return 1.0 / std::pow(std::sinh(x), 2); }, 1.0,
                                         {2.0, 4.0 / std::pow(1.0 - std::exp(-2.0), 2)});
  CHECK(s.value == doctest::Approx(0.313035285499331303636).epsilon(1e-10));
  CHECK_THROWS_AS(integrate_semi_infinite([](double) { return 0.0; }, 0.0, {0.0, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("power-singular endpoint") {
  // int_0^1 x^{-1/2} (1 + x) = 8/3
  const auto r = integrate_power_singular([](double x) { return 1.0 + x; }, 0.5, 1.0, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(8.0 / 3.0).epsilon(1e-10));
  // int_0^2 x^{-0.9} e^{-x}: exact via incomplete gamma, check against a graded plain run
  IntervalOptions opt;
  opt.left_singular = true;
  const auto ref = integrate_interval([](double x) { return std::pow(x, -0.9) * std::exp(-x); }, 0.0, 2.0,
                                      Tolerance(1e-12), opt);
  const auto ps = integrate_power_singular([](double x) { return std::exp(-x); }, 0.1, 1.0, 0.0, 2.0);
  CHECK(ps.value == doctest::Approx(ref.value).epsilon(1e-7));
}

TEST_CASE("nested integrals carry inner errors") {
  const auto inner = [](double y) {
    const auto r = integrate_interval([y](double x) { return x * y; }, 0.0, 1.0);
    return Sample{r.value, r.error};
  };
  const auto r = integrate_nested(inner, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(0.25).epsilon(1e-14));
  const auto noisy = integrate_nested([](double y) { return Sample{y, 1e-3}; }, 0.0, 1.0, Tolerance(1e-10));
  CHECK(noisy.error >= 1e-3 * 0.999);
  CHECK_FALSE(noisy.converged);
}

TEST_CASE("panel budget exhaustion reports the best estimate") {
  IntervalOptions opt;
  opt.max_panels = 10;
  try {
    integrate_interval([](double x) { return std::sin(1.0 / x); }, 1e-3, 1.0, Tolerance(1e-14), opt);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(std::isfinite(e.best().value));
    CHECK(e.best().error > 0.0);
  }
  CHECK_THROWS_AS(integrate_interval([](double x) { return 1.0 / x; }, 0.0, 1.0), QuadratureError);
}
