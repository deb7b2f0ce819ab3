#pragma once

// Integrals of radial profiles against the hyperbolic volume (sinh r)^{N-1} dr
// and reduced integrals over the upper half-space.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypineq/hyp_core.hpp"
#include "hypineq/quadrature.hpp"

namespace hypineq {

enum class Smoothness { PiecewiseC1, Smooth };

// u(r) = c r^kappa on (0, end].
struct PowerHead {
  double c = 1.0;
  double kappa = 0.0;
  double end = 0.0;
};

struct RadialTestFunction {
  std::string id;
  std::function<double(double)> value;
  std::function<double(double)> derivative;
  double lo = 0.0;
  double hi = 1.0;  // may be +inf
  Smoothness smoothness = Smoothness::Smooth;
  // Kinks of the profile; panels are split there.
  std::vector<double> breakpoints;
  std::optional<PowerHead> head;
  // Optional log|u| and log|u'| for profiles that under- or overflow on long ranges.
  std::function<double(double)> log_abs_value;
  std::function<double(double)> log_abs_derivative;
  // Required when hi = +inf: bounds on |u|^p sinh^{N-1} and |u'|^p sinh^{N-1}.
  std::optional<quad::DecayEnvelope> mass_envelope;
  std::optional<quad::DecayEnvelope> energy_envelope;
};

struct RadialEnergy {
  quad::QuadResult energy;  // int |u'|^p sinh^{N-1} dr
  quad::QuadResult mass;    // int |u|^p sinh^{N-1} dr
};

RadialEnergy radial_energy(const Params& params, const RadialTestFunction& u, double tol = 1e-10);

enum class RadialWeight {
  One,
  InverseRadiusPower,    // r^{-p}
  InverseSinhPower,      // (sinh r)^{-p}
  Green,                 // W
  HardyPoincare,         // H_p
  RadiusConjugatePower,  // r^{p'}
};

const char* weight_name(RadialWeight w);

// int |u|^p w(r) sinh^{N-1} dr. Throws HypothesisError when the weight is not
// integrable at the origin for a profile that does not vanish there.
quad::QuadResult radial_weighted_mass(const Params& params, const RadialTestFunction& u,
                                      RadialWeight weight, double tol = 1e-10);

// Pointwise weight value.
double radial_weight_value(const Params& params, RadialWeight weight, double r, double tol = 1e-12);

enum class YVariable { Linear, Log };

struct HalfSpaceBox {
  std::array<double, 2> x1{0.0, 0.0};
  std::array<double, 2> rho{0.0, 0.0};
  std::array<double, 2> y{0.0, 0.0};
};

// Integrand f(x1, rho, y) on the half-space, already reduced to the
// coordinates it depends on.
struct HalfSpaceIntegrand {
  std::function<double(double, double, double)> f;
  // Support box; the integral runs over all of R x [0, inf) x (0, inf) when absent.
  std::optional<HalfSpaceBox> box;
  // True when the integrand needs a horizontal coordinate beyond x1 and |x'|.
  bool depends_on_unreduced = false;
  YVariable y_variable = YVariable::Linear;
  // Singularity flags for the y-integral at the lower/upper end of its range.
  bool y_singular_low = false;
};

// |S^{N-3}|, the measure factor of the rho integral; 2 for N = 3.
double rho_sphere_measure(int N);

// int f(x1, rho, y) |S^{N-3}| rho^{N-3} dx1 drho dy; for N = 2 there is no rho integral.
quad::QuadResult halfspace_integral(const Params& params, const HalfSpaceIntegrand& integrand,
                                    double tol = 1e-9);

}  // namespace hypineq
