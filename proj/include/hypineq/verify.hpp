#pragma once

// Inequality verifiers, sharpness scans and proof-step checks.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hypineq/hyp_core.hpp"
#include "hypineq/radial_integrals.hpp"
#include "hypineq/testfun.hpp"

namespace hypineq {

enum class InequalityKind { PGAP, PROP11, THM23, THM25, COR27, THM29, THM32, THM72, HARDY1D };

const std::vector<InequalityKind>& all_kinds();
const char* kind_tag(InequalityKind kind);
// Case-insensitive tag lookup.
std::optional<InequalityKind> parse_kind(const std::string& tag);
bool is_halfspace_kind(InequalityKind kind);

// Throws HypothesisError naming the failed predicate.
void check_hypotheses(InequalityKind kind, const Params& params);

struct InequalityReport {
  InequalityKind kind = InequalityKind::PGAP;
  int N = 0;
  double p = 0.0;
  std::string test_function_id;
  // COR27 reports both sides divided by (int |u|^p)^p.
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double quad_error = 0.0;
  bool pass = false;
  // HARDY1D exponent l (NaN for other kinds).
  double l = 0.0;
};

struct VerifyOptions {
  double tol = 1e-10;
  // HARDY1D exponent, 1 < l <= p; defaults to p.
  std::optional<double> l;
};

// Radial kinds and HARDY1D (u read as a profile on (0, inf)).
InequalityReport verify(InequalityKind kind, const Params& params, const RadialTestFunction& u,
                        const VerifyOptions& options = {});
// THM23 (hyperbolic form, log-y quadrature) and THM32 (half-space form, linear y).
InequalityReport verify(InequalityKind kind, const Params& params, const HalfSpaceFunction& u,
                        const VerifyOptions& options = {});

// The three half-space integrals of a THM23/THM32 report.
struct HalfSpaceTerms {
  quad::QuadResult energy;  // int |grad u|^p y^{p-N}
  quad::QuadResult mass;    // int |u|^p y^{-N}
  quad::QuadResult weighted;  // int |u|^p y^{1-N} / sqrt(y^2 + x1^2)
};
HalfSpaceTerms halfspace_terms(const Params& params, const HalfSpaceFunction& u, YVariable route,
                               double tol);

struct BatteryOptions {
  int trials = 100;
  std::uint64_t seed = 1;
  double tol = 1e-10;
  bool allow_origin = false;
};

// Random admissible test function for `kind` at `params`, drawn from `rng`.
// For HARDY1D the exponent l is drawn too and returned through `l`.
RadialTestFunction random_radial(InequalityKind kind, const Params& params, std::mt19937_64& rng,
                                 bool allow_origin, double* l);
HalfSpaceFunction random_halfspace(const Params& params, std::mt19937_64& rng);

// Reports for `trials` random test functions; trial i uses trial_rng(seed, i).
// Evaluation errors become failing reports carrying the message as id.
std::vector<InequalityReport> run_battery(InequalityKind kind, const Params& params,
                                          const BatteryOptions& options);
// Trial i runs at grid[i % grid.size()].
std::vector<InequalityReport> run_battery_grid(InequalityKind kind,
                                               const std::vector<std::pair<int, double>>& grid,
                                               const BatteryOptions& options);

struct SharpnessPoint {
  double eps = 0.0;
  double delta = 0.0;
  double quotient = 0.0;
  double quad_error = 0.0;
  double lower = 0.0;  // sharp constant
  double upper = 0.0;  // bound from the extremal family
  bool within = false;
};

// PGAP: U_eps quotients (schedule entries use eps only). HARDY1D: Q(V_eps^delta)
// at exponent l.
std::vector<SharpnessPoint> sharpness_scan(InequalityKind kind, const Params& params,
                                           const std::vector<std::pair<double, double>>& schedule,
                                           double l = 0.0, double tol = 1e-10);

// c = int_1^2 (2-r)^{p-l} coth^{p-l} r dr of the HARDY1D bound.
double hardy1d_tail_constant(double p, double l, double tol = 1e-12);

double check_pconvexity(double p, double xi, double eta);

double ftilde(const Params& params, double r);
struct FtildeResult {
  double min = 0.0;
  double argmin = 0.0;
};
FtildeResult check_Ftilde(const Params& params, const std::vector<double>& grid);
// Geometric grid on [1e-6, r_max], dense near 0.
std::vector<double> ftilde_grid(double r_max = 20.0, int points = 2000);

struct SupersolutionResidual {
  double identity = 0.0;    // relative |L_p g - closed form|
  double derivative = 0.0;  // relative |g' FD - closed form|
  bool step_warning = false;
};
SupersolutionResidual supersolution_residual(const Params& params, double r, double fd_step);

// (N, p) grid used by batteries for each kind.
std::vector<std::pair<int, double>> default_grid(InequalityKind kind);

}  // namespace hypineq
