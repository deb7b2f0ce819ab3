#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hypineq/errors.hpp"
#include "hypineq/hyp_core.hpp"

using namespace hypineq;

TEST_CASE("params reject invalid pairs") {
  CHECK_THROWS_AS(Params::make(1, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(Params::make(3, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Params::make(3, NAN), std::invalid_argument);
  CHECK_THROWS_AS(Params::make(3, INFINITY), std::invalid_argument);
  const Params prm = Params::make(13, 4.0);
  CHECK(prm.conjugate_exponent() == doctest::Approx(4.0 / 3.0));
  CHECK(prm.poincare_hardy_admissible());
  CHECK_FALSE(Params::make(6, 3.0).poincare_hardy_admissible());
  CHECK(Params::make(7, 3.0).poincare_hardy_admissible());
  CHECK_FALSE(Params::make(13, 1.5).poincare_hardy_admissible());
}

TEST_CASE("lambda_p closed values") {
  CHECK(lambda_p(Params::make(13, 4.0)) == 81.0);
  CHECK(lambda_p(Params::make(3, 2.0)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(lambda_p(Params::make(2, 2.0)) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("elementary hyperbolic functions") {
  CHECK(log_sinh(0.5) == doctest::Approx(std::log(std::sinh(0.5))).epsilon(1e-15));
  CHECK(log_sinh(800.0) == doctest::Approx(800.0 - std::log(2.0)).epsilon(1e-15));
  CHECK(sinh_pow(2.0, 3.5) == doctest::Approx(std::pow(std::sinh(2.0), 3.5)).epsilon(1e-14));
  CHECK(sinh_pow(1e-5, 2.0) == doctest::Approx(1e-10 * (1.0 + 1e-10 / 3.0)).epsilon(1e-14));
  for (double r : {1e-8, 1e-4, 0.05, 0.0999, 0.1, 0.5, 3.0}) {
    const double expect = r < 1e-3 ? r / 3.0 - r * r * r / 45.0 : 1.0 / std::tanh(r) - 1.0 / r;
    CHECK(coth_minus_inv(r) == doctest::Approx(expect).epsilon(1e-12));
  }
  CHECK(coth_minus_one(1.0) == doctest::Approx(0.313035285499331303636).epsilon(1e-15));
  CHECK(coth_minus_one(40.0) == doctest::Approx(2.0 * std::exp(-80.0)).epsilon(1e-14));
}

TEST_CASE("green function against closed forms") {
  // N=3, p=2: G = coth r - 1
  CHECK(green_gp(Params::make(3, 2.0), 1.0).value ==
        doctest::Approx(0.313035285499331303636).epsilon(1e-10));
  // N=2, p=2 and N=3, p=3: G = log coth(r/2)
  CHECK(green_gp(Params::make(2, 2.0), 1.0).value ==
        doctest::Approx(0.771936832905304725071).epsilon(1e-10));
  CHECK(green_gp(Params::make(3, 3.0), 1.0).value ==
        doctest::Approx(0.771936832905304725071).epsilon(1e-10));
  // N=4, p=2: int_1^inf sinh^-3 (mpmath)
  CHECK(green_gp(Params::make(4, 2.0), 1.0).value ==
        doctest::Approx(0.172674347271984723206).epsilon(1e-10));
  // scaled form stays finite where G underflows
  const auto s = green_gp_scaled(Params::make(40, 2.0), 300.0);
  CHECK(s.value == doctest::Approx(1.0 / 39.0).epsilon(1e-6));
}

TEST_CASE("green function at the origin") {
  // N=2, p=3: int_0^inf sinh^{-1/2} (mpmath)
  const auto g0 = green_gp_at_origin(Params::make(2, 3.0));
  CHECK(g0.value == doctest::Approx(3.70814935460274382275).epsilon(1e-9));
  CHECK(g0.error < 1e-8);
  CHECK_THROWS_AS(green_gp_at_origin(Params::make(3, 2.0)), HypothesisError);
  CHECK_THROWS_AS(green_gp_at_origin(Params::make(3, 3.0)), HypothesisError);
}

TEST_CASE("weight W") {
  // N=3, p=2: |G'/G| = e^r / sinh r
  const Params p32 = Params::make(3, 2.0);
  CHECK(weight_W(p32, 1.0) == doctest::Approx(0.337533057991243268420).epsilon(1e-9));
  for (double r : {0.01, 0.3, 2.0, 10.0, 25.0}) {
    const double expect = std::exp(2.0 * r) / (4.0 * std::sinh(r) * std::sinh(r)) - 1.0;
    CHECK(weight_W(p32, r) == doctest::Approx(expect).epsilon(1e-8));
  }
  // small-r behaviour ((N-p)/p)^p r^{-p}
  const Params p52 = Params::make(5, 2.0);
  CHECK(weight_W(p52, 1e-4) * 1e-8 == doctest::Approx(2.25).epsilon(1e-3));
  // positivity
  for (double r : {0.1, 1.0, 5.0, 15.0}) {
    CHECK(weight_W(Params::make(6, 3.0), r) > 0.0);
    CHECK(weight_W(Params::make(2, 1.5), r) > 0.0);
  }
}

TEST_CASE("weight H_p") {
  CHECK(weight_Hp(Params::make(7, 2.0), 0.3) == 1.0);
  const Params prm = Params::make(13, 4.0);
  CHECK(weight_Hp(prm, 1.0) == doctest::Approx(1.13004401821664481459).epsilon(1e-14));
  CHECK(weight_Hp(prm, 1e-6) > 1.0);
  CHECK(weight_Hp(prm, 15.0) == doctest::Approx(std::pow(1.0 / std::tanh(15.0) - 0.25 / 15.0, 2)));
  CHECK_THROWS_AS(weight_Hp(prm, 0.0), std::invalid_argument);
  // N < p makes the base negative near the origin
  CHECK_THROWS_AS(weight_Hp(Params::make(2, 3.0), 0.1), DomainError);
}

TEST_CASE("half-space geometry") {
  CHECK(weight_V({0.0, 0.0, 2.0}) == 1.0);
  CHECK(weight_V({1.0, 5.0, 1.0}) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(geodesic_distance({0.0, 0.0, 1.0}) == 0.0);
  CHECK(geodesic_distance({0.0, 0.0, std::exp(2.0)}) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(geodesic_distance({1.0, 0.0, 1.0}) == doctest::Approx(std::acosh(1.5)).epsilon(1e-14));
  CHECK(geodesic_distance({0.0, 1.0, 1.0}) == doctest::Approx(std::acosh(1.5)).epsilon(1e-14));
  CHECK(geodesic_distance({1e-9, 0.0, 1.0}) == doctest::Approx(1e-9).epsilon(1e-9));
  // V along the curve x1 -> inf with cosh r = x1^2/(2 beta): V e^{r/2} -> sqrt(beta)
  const double beta = 3.0;
  const double x1 = 1e4;
  const HalfSpacePoint pt{x1, 0.0, beta};
  const double r = geodesic_distance(pt);
  CHECK(weight_V(pt) * std::exp(r / 2.0) == doctest::Approx(std::sqrt(beta)).epsilon(1e-6));
}

TEST_CASE("h and h/r^2") {
  const Params prm = Params::make(13, 4.0);
  CHECK(h_func(prm, 1.0) == doctest::Approx(-7.856706463).epsilon(1e-9));
  CHECK(h_over_r2(13.0, 4.0, 1e-9) == doctest::Approx(3.0 - 12.0).epsilon(1e-12));
  CHECK(h_over_r2(13.0, 4.0, 0.5) == doctest::Approx(h_func(prm, 0.5) / 0.25).epsilon(1e-13));
}
