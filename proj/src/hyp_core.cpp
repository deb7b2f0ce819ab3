#include "hypineq/hyp_core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hypineq/errors.hpp"

namespace hypineq {

namespace {

constexpr double kLn2 = 0.693147180559945309417232121458176568;

double alpha_of(const Params& params) {
  return (params.dimension() - 1.0) / (params.exponent() - 1.0);
}

// Breakpoints r 2^k below 1 so panels resolve the scale of r when r is small.
quad::IntervalOptions scale_breakpoints(double r) {
  quad::IntervalOptions opt;
  for (double t = r; t < 1.0; t *= 2.0) opt.breakpoints.push_back(t);
  opt.breakpoints.push_back(1.0);
  return opt;
}

// (sinh r / sinh(r + u))^a
double sinh_ratio(double r, double u, double a) {
  return std::exp(a * (log_sinh(r) - log_sinh(r + u)));
}

// 1 - alpha G_p sinh^alpha, as alpha sinh^alpha(r) int_r^inf (coth s - 1) (sinh s)^{-alpha} ds.
quad::QuadResult green_deficit(const Params& params, double r, double tol) {
  const double a = alpha_of(params);
  const double lsr = log_sinh(r);
  const auto f = [&](double u) {
    const double s = r + u;
    return a * std::exp(a * (lsr - log_sinh(s))) * coth_minus_one(s);
  };
  const quad::DecayEnvelope env{a + 2.0, a * coth_minus_one(r)};
  return quad::integrate_semi_infinite(f, 0.0, env, quad::Tolerance(tol), scale_breakpoints(r));
}

}  // namespace

Params Params::make(int N, double p) {
  if (N < 2) throw std::invalid_argument("Params: N must be >= 2, got " + std::to_string(N));
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument("Params: p must be a finite real > 1");
  }
  return Params(N, p);
}

double Params::poincare_constant() const { return std::pow((N_ - 1.0) / p_, p_); }

bool Params::poincare_hardy_admissible() const noexcept {
  // Relative slack absorbs rounding in p(p-1) at the boundary N = 1 + p(p-1).
  return p_ >= 2.0 && N_ >= 1.0 + p_ * (p_ - 1.0) - 1e-12 * N_;
}

double lambda_p(const Params& params) { return params.poincare_constant(); }

double log_sinh(double r) {
  if (r > 20.0) return r - kLn2 + std::log1p(-std::exp(-2.0 * r));
  return std::log(std::sinh(r));
}

double sinh_pow(double r, double a) {
  if (r < 1e-3) {
    const double r2 = r * r;
    return std::pow(r, a) * std::exp(a * std::log1p(r2 / 6.0 + r2 * r2 / 120.0));
  }
  return std::exp(a * log_sinh(r));
}

double coth_minus_inv(double r) {
  if (r < 0.1) {
    const double r2 = r * r;
    return r * (1.0 / 3.0 +
                r2 * (-1.0 / 45.0 +
                      r2 * (2.0 / 945.0 +
                            r2 * (-1.0 / 4725.0 + r2 * (2.0 / 93555.0 -
                                                        r2 * 1382.0 / 638512875.0)))));
  }
  return 1.0 / std::tanh(r) - 1.0 / r;
}

double coth_minus_one(double r) { return 2.0 / std::expm1(2.0 * r); }

quad::QuadResult green_gp_scaled(const Params& params, double r, double tol) {
  if (!(r > 0.0)) throw std::invalid_argument("green_gp: r must be > 0");
  const double a = alpha_of(params);
  // d/ds log sinh s = coth s >= 1 gives the envelope e^{-a u}.
  const quad::DecayEnvelope env{a, 1.0};
  return quad::integrate_semi_infinite([&](double u) { return sinh_ratio(r, u, a); }, 0.0, env,
                                       quad::Tolerance(tol), scale_breakpoints(r));
}

quad::QuadResult green_gp(const Params& params, double r, double tol) {
  quad::QuadResult res = green_gp_scaled(params, r, tol);
  const double scale = sinh_pow(r, -alpha_of(params));
  res.value *= scale;
  res.error *= scale;
  return res;
}

quad::QuadResult green_gp_at_origin(const Params& params, double tol) {
  const double a = alpha_of(params);
  if (!(a < 1.0)) {
    throw HypothesisError("N < p", "G_p(0) is infinite unless N < p");
  }
  // Near 0, (sinh s)^{-a} = s^{-a} (sinh s / s)^{-a}; subtract the power singularity on [0, 1].
  const auto g = [a](double s) {
    if (s < 1e-8) return 1.0;
    return std::exp(-a * (log_sinh(s) - std::log(s)));
  };
  quad::QuadResult head = quad::integrate_power_singular(g, 1.0 - a, 1.0, 0.0, 1.0, tol);
  quad::QuadResult tail = green_gp(params, 1.0, tol);
  head.value += tail.value;
  head.error += tail.error;
  head.subdivisions += tail.subdivisions;
  head.truncation_point = tail.truncation_point;
  head.converged = head.converged && tail.converged;
  return head;
}

double weight_W(const Params& params, double r, double tol) {
  if (!(r > 0.0)) throw std::invalid_argument("weight_W: r must be > 0");
  const double p = params.exponent();
  const double lambda = lambda_p(params);
  // W = Lambda ((1 - t)^{-p} - 1) with 1 - t = alpha G_p sinh^alpha.
  const double t = green_deficit(params, r, tol).value;
  if (t <= 0.5) return lambda * std::expm1(-p * std::log1p(-t));
  const double one_minus_t = alpha_of(params) * green_gp_scaled(params, r, tol).value;
  return lambda * (std::pow(one_minus_t, -p) - 1.0);
}

double weight_Hp(const Params& params, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("weight_Hp: r must be > 0");
  const double p = params.exponent();
  const double k = (p - 1.0) / (params.dimension() - 1.0);
  // base = 1 + F with F = coth r - 1 - k/r, the left side of the r_p equation.
  const double F = coth_minus_one(r) - k / r;
  double base;
  if (std::abs(F) < 0.5) {
    base = 1.0 + F;
  } else {
    base = coth_minus_inv(r) + (1.0 - k) / r;
  }
  if (!(base > 0.0)) {
    throw DomainError("weight_Hp: coth r - ((p-1)/(N-1))/r <= 0 at r = " + std::to_string(r));
  }
  if (p == 2.0) return 1.0;
  if (std::abs(F) < 0.5) return std::exp((p - 2.0) * std::log1p(F));
  return std::pow(base, p - 2.0);
}

double weight_V(const HalfSpacePoint& pt) { return pt.y / std::hypot(pt.y, pt.x1); }

double geodesic_distance(const HalfSpacePoint& pt) {
  const double dy = pt.y - 1.0;
  const double z = (dy * dy + pt.x1 * pt.x1 + pt.rho * pt.rho) / (2.0 * pt.y);
  return std::log1p(z + std::sqrt(z * (z + 2.0)));
}

double h_func(const Params& params, double r) {
  const double s = std::sinh(r);
  return -(params.dimension() - 1.0) * r * r + (params.exponent() - 1.0) * s * s;
}

double h_over_r2(double N, double p, double r) {
  double q;
  if (r < 1e-4) {
    q = 1.0 + r * r / 6.0;
  } else {
    q = std::sinh(r) / r;
  }
  return (p - 1.0) * q * q - (N - 1.0);
}

}  // namespace hypineq
