#pragma once

// Test-function families: radial bumps, the one-dimensional Hardy family
// V_eps^delta and the half-space family U_eps.

#include <functional>
#include <optional>
#include <string>

#include "hypineq/hyp_core.hpp"
#include "hypineq/quadrature.hpp"
#include "hypineq/radial_integrals.hpp"

namespace hypineq {

enum class BumpShape {
  Mollifier,          // exp(-1/(1-t^2)) in t = (2r - lo - hi)/(hi - lo)
  Tent,               // 1 - |t|
  CenteredMollifier,  // exp(-1/(1-(r/hi)^2)) on [0, hi]; smooth through the pole
};

const char* shape_name(BumpShape s);

RadialTestFunction make_bump(double lo, double hi, BumpShape shape = BumpShape::Mollifier);

// r^k on (0, eps), eps^k on [eps, 1), eps^k (2 - r) on [1, 2), 0 after; k = (p-1+delta)/p.
RadialTestFunction make_veps(double p, double eps, double delta);

// U_eps as a function of the distance r from (0, 1):
// (2 cosh(r/2))^{-2(N-1+eps)/p}, supported on [0, inf).
RadialTestFunction make_ueps_radial(const Params& params, double eps);

struct HalfSpaceFunction {
  std::string id;
  std::function<double(double, double, double)> value;
  // Euclidean |grad u| at (x1, rho, y).
  std::function<double(double, double, double)> gradient_norm;
  // |u|^p y^{-N} <= constant * exp(-rate * r) in the distance r from (0, 1).
  quad::DecayEnvelope envelope{1.0, 1.0};
  std::optional<HalfSpaceBox> box;
};

// (y / ((1+y)^2 + x1^2 + rho^2))^{(N-1+eps)/p}
HalfSpaceFunction make_ueps(const Params& params, double eps);

// a(x1) b(rho) c(y) with C^3 factors (1-t^2)^4 on each box side; b depends on
// rho^2 only so the product is C^3 in every horizontal coordinate. For N = 2
// b is omitted.
HalfSpaceFunction make_separable(int N, double x_lo, double x_hi, double rho_max, double y_lo,
                                 double y_hi);

}  // namespace hypineq
