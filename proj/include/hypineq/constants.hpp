#pragma once

// Closed-form constants of the improved Poincare inequalities and brute-force
// maximizations of the functions that define C(N, p).

#include <functional>
#include <string>

#include "hypineq/hyp_core.hpp"

namespace hypineq {

enum class BoundKind { Exact, LowerBound };

enum class CnpCase { PUpTo4Thirds, P4ThirdsTo2, P2ToCritical, PAboveCritical, N2Refined };

const char* case_name(CnpCase c);
const char* kind_name(BoundKind k);

struct CNPResult {
  double value = 0.0;
  BoundKind kind = BoundKind::Exact;
  CnpCase case_label = CnpCase::P2ToCritical;
  // Maximizing a of mu_1 / mu_2 (NaN for the lower-bound route).
  double optimizer_arg = 0.0;
  // max f for the p <= 2 route (NaN otherwise).
  double M = 0.0;
};

// 1 on [1, 2], b/2 otherwise.
double q_b(double b);

// (1 - (1-s)^b) - (b s - q_b (b-1) s^2).
double check_ni(double b, double s);

CNPResult c_np(const Params& params);

// Closed forms for N = 2, 1 < p < 2, as printed.
CNPResult c_2p(double p);

// N = 2 value gamma(M) evaluated from the exact maximum M of f.
CNPResult c_2p_from_maximizer(double p);

// (N-1)/p * max_a mu_1(a) for a given M = max f.
double gamma_of_M(double N, double p, double M);

struct BruteForceCnp {
  double value = 0.0;
  double argmax_a = 0.0;
  // p <= 2 only: max f and its maximizer.
  double M = 0.0;
  double argmax_c = 0.0;
};

// Dense grid of `grid` points plus golden-section polish to 1e-12.
BruteForceCnp brute_force_cnp(const Params& params, int grid = 2000);

// Maximizes f on [lo, hi]: grid localization then golden section to `xtol`.
// Returns the argmax.
double grid_golden_max(const std::function<double(double)>& f, double lo, double hi, int grid,
                       double xtol = 1e-12);

// (p-1) ((N-1)/p)^{p-2} ((p-1)/p)^2
double poincare_hardy_constant(const Params& params);
// (p-1)^{p-1} (N(p-2)+1) / p^p
double hardy_weight_constant(const Params& params);
// (N-1)(N-1-p(p-1)) (p-1)^{p-2} / p^p
double sinh_weight_constant(const Params& params);
// ((N-1)/p)^{p-2} C(N, p)
double mazya_constant(const Params& params);

}  // namespace hypineq
