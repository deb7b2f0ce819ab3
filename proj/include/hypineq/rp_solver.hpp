#pragma once

// The sign-change radius r_0 of h and the radius r_p where H_p crosses 1.

#include <vector>

#include "hypineq/hyp_core.hpp"

namespace hypineq {

struct RootResult {
  double root = 0.0;  // +inf for the p = 2 sentinel
  double residual = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
  bool infinite = false;
};

// Unique positive root of h(r) = -(N-1) r^2 + (p-1) sinh^2 r; needs p > 2 and N > p.
RootResult solve_r0(const Params& params);

// Root of coth r - 1 - (p-1)/((N-1) r); +inf sentinel for p = 2. Needs
// p >= 2 and N >= 1 + p(p-1).
RootResult solve_rp(const Params& params);

// Same equations for real N, without hypothesis checks beyond p > 2 and N > p.
double rp_equation(double N, double p, double r);
RootResult solve_r0_real(double N, double p);
RootResult solve_rp_real(double N, double p);

// Implicit slopes at the root r = r_p.
double rp_slope_N(double N, double p, double r);
// Slope in p as printed, r sinh^2 r / ((N-1) h(r)).
double rp_slope_p_printed(double N, double p, double r);
// Slope in p from differentiating the r_p equation, r sinh^2 r / h(r).
double rp_slope_p(double N, double p, double r);

struct RpScanRow {
  double N = 0.0;
  double p = 0.0;
  double rp = 0.0;
  double fd_slope = 0.0;
  double implicit_slope = 0.0;
  // p-scans only: the printed p-slope formula.
  double printed_slope = 0.0;
};

// p > 2 and every N in [N_lo, N_hi] satisfying N >= 1 + p(p-1).
std::vector<RpScanRow> rp_scan_N(double p, int N_lo, int N_hi);
// N > 3 and every p in (2, (1 + sqrt(4N-3))/2].
std::vector<RpScanRow> rp_scan_p(int N, const std::vector<double>& ps);

// (1 + sqrt(4N - 3)) / 2, the largest p with N >= 1 + p(p-1).
double max_admissible_p(int N);

}  // namespace hypineq
