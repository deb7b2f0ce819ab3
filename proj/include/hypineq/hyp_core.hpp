#pragma once

// Hyperbolic-space primitives: the (N, p) parameter pair, the upper half-space
// model, the p-Laplacian Green's function and the radial weights built on it.

#include "hypineq/quadrature.hpp"

namespace hypineq {

class Params {
 public:
  // Throws std::invalid_argument unless N >= 2 and p > 1 (finite).
  static Params make(int N, double p);

  int dimension() const noexcept { return N_; }
  double exponent() const noexcept { return p_; }
  double conjugate_exponent() const noexcept { return p_ / (p_ - 1.0); }
  // ((N-1)/p)^p
  double poincare_constant() const;
  // p >= 2 and N >= 1 + p(p-1); evaluated on every call.
  bool poincare_hardy_admissible() const noexcept;

 private:
  Params(int N, double p) : N_(N), p_(p) {}
  int N_;
  double p_;
};

struct HalfSpacePoint {
  double x1 = 0.0;
  double rho = 0.0;
  double y = 1.0;
};

double lambda_p(const Params& params);

// log(sinh r) without overflow for large r, r > 0.
double log_sinh(double r);
// (sinh r)^a for r > 0.
double sinh_pow(double r, double a);
// coth r - 1/r, accurate for small r.
double coth_minus_inv(double r);
// coth r - 1 = 2 / (e^{2r} - 1).
double coth_minus_one(double r);

// G_p(r) = int_r^inf (sinh s)^{-(N-1)/(p-1)} ds.
quad::QuadResult green_gp(const Params& params, double r, double tol = 1e-10);
// G_p(r) (sinh r)^{(N-1)/(p-1)}, the quantity W actually depends on; finite for all r > 0.
quad::QuadResult green_gp_scaled(const Params& params, double r, double tol = 1e-10);
// G_p(0), finite only when N < p.
quad::QuadResult green_gp_at_origin(const Params& params, double tol = 1e-10);

// W(r) = ((p-1)/p)^p |G_p'/G_p|^p - Lambda_p.
double weight_W(const Params& params, double r, double tol = 1e-10);
// H_p(r) = (coth r - ((p-1)/(N-1))/r)^{p-2}; throws DomainError if the base is <= 0.
double weight_Hp(const Params& params, double r);
// V = y / sqrt(y^2 + x1^2).
double weight_V(const HalfSpacePoint& pt);
// Distance from the base point (x = 0, y = 1).
double geodesic_distance(const HalfSpacePoint& pt);
// h(r) = -(N-1) r^2 + (p-1) sinh^2 r.
double h_func(const Params& params, double r);
// h(r) / r^2, evaluated without cancellation for small r.
double h_over_r2(double N, double p, double r);

}  // namespace hypineq
