#pragma once

// Adaptive Gauss-Kronrod integration on finite, semi-infinite and
// endpoint-singular intervals. Every result carries an error estimate; the
// estimate is the sum of |Kronrod - Gauss| over the final panels plus any analytic
// tail or inner-integral error.

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypineq::quad {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int subdivisions = 0;
  // Upper end actually integrated; equals b for finite intervals.
  double truncation_point = 0.0;
  // False when the roundoff floor was hit before the requested tolerance.
  bool converged = true;
};

// Target accuracy: error <= max(abs, rel * |value|).
struct Tolerance {
  double rel = 1e-10;
  double abs = 0.0;

  constexpr Tolerance() = default;
  constexpr Tolerance(double relative) : rel(relative) {}  // NOLINT
  constexpr Tolerance(double relative, double absolute) : rel(relative), abs(absolute) {}

  double target(double value) const;
};

// Thrown when the panel budget runs out; carries the best available result.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadResult best)
      : std::runtime_error(what), best_(best) {}
  const QuadResult& best() const noexcept { return best_; }

 private:
  QuadResult best_;
};

using Integrand = std::function<double(double)>;

// Value of an inner integral plus its absolute error, for nested integration.
struct Sample {
  double value = 0.0;
  double error = 0.0;
};
using NestedIntegrand = std::function<Sample(double)>;

// Gauss-Kronrod pair: 7/15 or 15/31 points.
enum class Rule { GK15, GK31 };

struct IntervalOptions {
  // Interior points where the integrand has kinks; panels are split there.
  std::vector<double> breakpoints;
  // Geometric grading (ratio 1/2, down to 2^-40 of the length) toward the
  // flagged endpoint for integrable power/log singularities.
  bool left_singular = false;
  bool right_singular = false;
  int max_panels = 20000;
  Rule rule = Rule::GK15;
};

QuadResult integrate_interval(const Integrand& f, double a, double b, Tolerance tol = {},
                              const IntervalOptions& options = {});

// Same engine for integrands that are themselves integrals; inner errors are
// accumulated with the outer Kronrod weights.
QuadResult integrate_nested(const NestedIntegrand& f, double a, double b, Tolerance tol = {},
                            const IntervalOptions& options = {});

// |f(r)| <= constant * exp(-rate * r) for every r >= a.
struct DecayEnvelope {
  double rate = 1.0;
  double constant = 1.0;

  double tail(double from) const;
};

// Integrates on [a, R] and bounds [R, inf) by the envelope; R grows until the
// tail bound is below half the target.
QuadResult integrate_semi_infinite(const Integrand& f, double a, const DecayEnvelope& envelope,
                                   Tolerance tol = {}, const IntervalOptions& options = {});

// Integral over [a, b] of (r - a)^(gamma - 1) * g(r), gamma > 0, by singularity
// subtraction: g(a) (b - a)^gamma / gamma plus a bounded remainder.
// `g_at_a` is the limit of g at a (g need not be evaluable there).
QuadResult integrate_power_singular(const Integrand& g, double gamma, double g_at_a, double a,
                                    double b, Tolerance tol = {},
                                    const IntervalOptions& options = {});

}  // namespace hypineq::quad
