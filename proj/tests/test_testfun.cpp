#include <doctest.h>

#include <cmath>

#include "hypineq/errors.hpp"
#include "hypineq/parallel.hpp"
#include "hypineq/radial_integrals.hpp"
#include "hypineq/testfun.hpp"

using namespace hypineq;

TEST_CASE("tent bump energy and mass") {
  const RadialTestFunction u = make_bump(1.0, 3.0, BumpShape::Tent);
  CHECK(u.value(2.0) == 1.0);
  CHECK(u.value(1.0) == 0.0);
  CHECK(u.derivative(1.5) == 1.0);
  CHECK(u.derivative(2.5) == -1.0);
  // N=2, p=2: mass int (1-|r-2|)^2 sinh r, energy cosh 3 - cosh 1
  const RadialEnergy e2 = radial_energy(Params::make(2, 2.0), u);
  CHECK(e2.mass.value == doctest::Approx(2.54172109053696905628).epsilon(1e-10));
  CHECK(e2.energy.value == doctest::Approx(std::cosh(3.0) - std::cosh(1.0)).epsilon(1e-10));
  // N=3, p=3 (mpmath)
  const RadialEnergy e3 = radial_energy(Params::make(3, 3.0), u);
  CHECK(e3.mass.value == doctest::Approx(7.55533152452011365645).epsilon(1e-10));
  CHECK(e3.energy.value == doctest::Approx(48.5215742406080523393).epsilon(1e-10));
  // weighted mass r^-2, N=3, p=2
  CHECK(radial_weighted_mass(Params::make(3, 2.0), u, RadialWeight::InverseRadiusPower).value ==
        doctest::Approx(2.36625231848806270056).epsilon(1e-10));
}

TEST_CASE("centered mollifier through the origin") {
  const RadialTestFunction u = make_bump(0.0, 1.0, BumpShape::CenteredMollifier);
  CHECK(u.value(0.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(radial_weighted_mass(Params::make(3, 2.0), u, RadialWeight::InverseRadiusPower).value ==
        doctest::Approx(0.0691828073628725894620).epsilon(1e-9));
  CHECK(radial_weighted_mass(Params::make(5, 2.0), u, RadialWeight::InverseRadiusPower).value ==
        doctest::Approx(0.00912210760988498653340).epsilon(1e-9));
  // r^{-p} weight is not integrable at the origin when N <= p
  CHECK_THROWS_AS(radial_weighted_mass(Params::make(2, 2.0), u, RadialWeight::InverseRadiusPower),
                  HypothesisError);
}

TEST_CASE("mollifier derivative consistent with value") {
  const RadialTestFunction u = make_bump(0.4, 2.7);
  std::mt19937_64 rng = trial_rng(3, 0);
  for (int i = 0; i < 32; ++i) {
    const double r = uniform(rng, 0.5, 2.6);
    const double h = 1e-5;
    const double fd = (u.value(r + h) - u.value(r - h)) / (2.0 * h);
    CHECK(fd == doctest::Approx(u.derivative(r)).epsilon(1e-5).scale(1e-3));
  }
}

TEST_CASE("V_eps profile") {
  const double p = 3.0, eps = 0.1, delta = 0.2;
  const RadialTestFunction v = make_veps(p, eps, delta);
  const double k = (p - 1.0 + delta) / p;
  CHECK(v.value(0.05) == doctest::Approx(std::pow(0.05, k)));
  CHECK(v.value(0.5) == doctest::Approx(std::pow(eps, k)));
  CHECK(v.value(1.5) == doctest::Approx(std::pow(eps, k) * 0.5));
  CHECK(v.value(2.5) == 0.0);
  CHECK(v.derivative(0.5) == 0.0);
  CHECK(v.head.has_value());
  CHECK(v.breakpoints.size() == 2);
}

TEST_CASE("U_eps radial mass in two dimensions") {
  for (double eps : {0.5, 0.1, 0.01}) {
    const Params prm = Params::make(2, 2.0);
    const RadialEnergy e = radial_energy(prm, make_ueps_radial(prm, eps));
    CHECK(e.mass.value == doctest::Approx(std::pow(2.0, -2.0 * eps) / (2.0 * eps)).epsilon(1e-9));
  }
}

TEST_CASE("U_eps half-space form agrees with the radial form") {
  const Params prm = Params::make(3, 2.0);
  const HalfSpaceFunction u = make_ueps(prm, 0.3);
  const RadialTestFunction ur = make_ueps_radial(prm, 0.3);
  for (HalfSpacePoint pt : {HalfSpacePoint{0.3, 0.0, 2.0}, {-1.0, 0.0, 0.2}, {4.0, 0.0, 7.0}}) {
    CHECK(u.value(pt.x1, pt.rho, pt.y) == doctest::Approx(ur.value(geodesic_distance(pt))).epsilon(1e-12));
  }
}

TEST_CASE("half-space gradients against finite differences") {
  const Params prm = Params::make(4, 2.5);
  const HalfSpaceFunction fams[] = {make_ueps(prm, 0.2), make_separable(4, -1.0, 1.5, 2.0, 0.3, 1.7)};
  for (const HalfSpaceFunction& u : fams) {
    std::mt19937_64 rng = trial_rng(5, 1);
    int checked = 0;
    while (checked < 32) {
      const double x = uniform(rng, -0.9, 1.4);
      const double rho = uniform(rng, 0.1, 1.9);
      const double y = uniform(rng, 0.4, 1.6);
      const double g = u.gradient_norm(x, rho, y);
      if (g < 1e-3) continue;
      const double h = 1e-5;
      const double gx = (u.value(x + h, rho, y) - u.value(x - h, rho, y)) / (2 * h);
      const double gr = (u.value(x, rho + h, y) - u.value(x, rho - h, y)) / (2 * h);
      const double gy = (u.value(x, rho, y + h) - u.value(x, rho, y - h)) / (2 * h);
      CHECK(std::hypot(gx, gr, gy) == doctest::Approx(g).epsilon(1e-5));
      ++checked;
    }
  }
}

TEST_CASE("half-space integral: Gaussian product oracle") {
  HalfSpaceIntegrand f;
  f.f = [](double x, double rho, double y) {
    return std::exp(-x * x - rho * rho - (y - 1.0) * (y - 1.0));
  };
  const double yfac = std::sqrt(M_PI) / 2.0 * (1.0 + std::erf(1.0));
  CHECK(halfspace_integral(Params::make(2, 2.0), f).value ==
        doctest::Approx(std::sqrt(M_PI) * yfac).epsilon(1e-8));
  CHECK(halfspace_integral(Params::make(3, 2.0), f).value ==
        doctest::Approx(5.13038120758294271659).epsilon(1e-8));
  CHECK(halfspace_integral(Params::make(4, 2.0), f).value ==
        doctest::Approx(9.09336392799367842196).epsilon(1e-8));
  f.y_variable = YVariable::Log;
  CHECK(halfspace_integral(Params::make(3, 2.0), f).value ==
        doctest::Approx(5.13038120758294271659).epsilon(1e-8));
  CHECK(rho_sphere_measure(3) == doctest::Approx(2.0));
  CHECK(rho_sphere_measure(4) == doctest::Approx(2.0 * M_PI));
  CHECK(rho_sphere_measure(5) == doctest::Approx(4.0 * M_PI));
}

TEST_CASE("half-space integral: separable box against a tensor grid") {
  const HalfSpaceFunction u = make_separable(3, -0.5, 1.0, 0.8, 0.2, 0.9);
  HalfSpaceIntegrand f;
  f.box = u.box;
  f.f = [&](double x, double rho, double y) { return u.value(x, rho, y) * u.value(x, rho, y) / y; };
  const double value = halfspace_integral(Params::make(3, 2.0), f).value;
  // Tensor midpoint grid; the integrand is C^3 so the grid error is O(h^2).
  const int n = 240;
  double sum = 0.0;
  const double hx = 1.5 / n, hr = 0.8 / n, hy = 0.7 / n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double x = -0.5 + (i + 0.5) * hx, r = (j + 0.5) * hr, y = 0.2 + (k + 0.5) * hy;
        sum += f.f(x, r, y);
      }
    }
  }
  CHECK(value == doctest::Approx(2.0 * sum * hx * hr * hy).epsilon(1e-4));
  f.depends_on_unreduced = true;
  CHECK_THROWS_AS(halfspace_integral(Params::make(3, 2.0), f), HypothesisError);
}
