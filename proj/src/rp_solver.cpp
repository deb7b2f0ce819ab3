#include "hypineq/rp_solver.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "hypineq/errors.hpp"

namespace hypineq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBracketLo = 1e-8;

// f is positive at lo and negative at hi (or the reverse); bisection to width
// 1e-6, then Newton with fallback to bisection.
RootResult bracketed_root(const std::function<double(double)>& f,
                          const std::function<double(double)>& df, double lo, double hi) {
  RootResult out;
  out.lo = lo;
  out.hi = hi;
  const double flo = f(lo);
  const bool lo_positive = flo > 0.0;
  double a = lo, b = hi;
  int it = 0;
  while (b - a > 1e-6 && it < 200) {
    const double m = 0.5 * (a + b);
    if ((f(m) > 0.0) == lo_positive) {
      a = m;
    } else {
      b = m;
    }
    ++it;
  }
  double x = 0.5 * (a + b);
  for (int k = 0; k < 50; ++k) {
    const double fx = f(x);
    if (fx == 0.0) break;
    if ((fx > 0.0) == lo_positive) {
      a = x;
    } else {
      b = x;
    }
    const double d = df(x);
    double next = x - fx / d;
    if (!(next > a && next < b) || !std::isfinite(next)) next = 0.5 * (a + b);
    ++it;
    if (std::abs(next - x) <= 4.0 * std::numeric_limits<double>::epsilon() * x) {
      x = next;
      break;
    }
    x = next;
  }
  out.root = x;
  out.residual = std::abs(f(x));
  out.iterations = it;
  return out;
}

void require_rp_hypotheses(const Params& params) {
  const double p = params.exponent();
  if (!(p >= 2.0)) throw HypothesisError("p >= 2", "r_p is defined for p >= 2");
  if (!params.poincare_hardy_admissible()) {
    throw HypothesisError("N >= 1 + p(p-1)", "N = " + std::to_string(params.dimension()) +
                                                 ", p = " + std::to_string(p));
  }
}

}  // namespace

double rp_equation(double N, double p, double r) {
  return coth_minus_one(r) - (p - 1.0) / ((N - 1.0) * r);
}

RootResult solve_r0_real(double N, double p) {
  if (!(N > p)) throw HypothesisError("N > p", "h has no sign change on (0, inf) when N <= p");
  const auto f = [N, p](double r) { return h_over_r2(N, p, r); };
  const auto df = [p](double r) {
    const double q = std::sinh(r) / r;
    return 2.0 * (p - 1.0) * q * (r * std::cosh(r) - std::sinh(r)) / (r * r);
  };
  double hi = 1.0;
  while (f(hi) <= 0.0) hi *= 2.0;
  RootResult res = bracketed_root(f, df, kBracketLo, hi);
  const double s = std::sinh(res.root);
  res.residual = std::abs(-(N - 1.0) * res.root * res.root + (p - 1.0) * s * s);
  return res;
}

RootResult solve_r0(const Params& params) {
  if (!(params.exponent() > 2.0)) throw HypothesisError("p > 2", "r_0 is used for p > 2");
  return solve_r0_real(params.dimension(), params.exponent());
}

RootResult solve_rp_real(double N, double p) {
  const RootResult r0 = solve_r0_real(N, p);
  const auto f = [N, p](double r) { return rp_equation(N, p, r); };
  const auto df = [N, p](double r) {
    const double s = std::sinh(r);
    return -1.0 / (s * s) + (p - 1.0) / ((N - 1.0) * r * r);
  };
  RootResult res = bracketed_root(f, df, kBracketLo, r0.root);
  // Keep the root on the side where H_p >= 1.
  for (int k = 0; k < 8 && f(res.root) < 0.0; ++k) {
    res.root = std::nextafter(res.root, 0.0);
  }
  res.residual = std::abs(f(res.root));
  return res;
}

RootResult solve_rp(const Params& params) {
  require_rp_hypotheses(params);
  if (params.exponent() == 2.0) {
    RootResult out;
    out.root = kInf;
    out.lo = 0.0;
    out.hi = kInf;
    out.infinite = true;
    return out;
  }
  return solve_rp_real(params.dimension(), params.exponent());
}

double rp_slope_N(double N, double p, double r) {
  const double s = std::sinh(r);
  const double h = -(N - 1.0) * r * r + (p - 1.0) * s * s;
  return -(p - 1.0) * r * s * s / ((N - 1.0) * h);
}

double rp_slope_p_printed(double N, double p, double r) {
  const double s = std::sinh(r);
  const double h = -(N - 1.0) * r * r + (p - 1.0) * s * s;
  return r * s * s / ((N - 1.0) * h);
}

double rp_slope_p(double N, double p, double r) {
  const double s = std::sinh(r);
  const double h = -(N - 1.0) * r * r + (p - 1.0) * s * s;
  return r * s * s / h;
}

double max_admissible_p(int N) { return (1.0 + std::sqrt(4.0 * N - 3.0)) / 2.0; }

std::vector<RpScanRow> rp_scan_N(double p, int N_lo, int N_hi) {
  if (!(p > 2.0)) throw HypothesisError("p > 2", "rp_scan_N needs p > 2");
  if (N_hi < N_lo) throw std::invalid_argument("rp_scan_N: empty range");
  std::vector<RpScanRow> rows;
  const double step = 1e-3;
  for (int N = N_lo; N <= N_hi; ++N) {
    const Params params = Params::make(N, p);
    require_rp_hypotheses(params);
    RpScanRow row;
    row.N = N;
    row.p = p;
    row.rp = solve_rp(params).root;
    const double up = solve_rp_real(N + step, p).root;
    const double down = solve_rp_real(N - step, p).root;
    row.fd_slope = (up - down) / (2.0 * step);
    row.implicit_slope = rp_slope_N(N, p, row.rp);
    row.printed_slope = row.implicit_slope;
    rows.push_back(row);
  }
  return rows;
}

std::vector<RpScanRow> rp_scan_p(int N, const std::vector<double>& ps) {
  if (N <= 3) throw HypothesisError("N > 3", "rp_scan_p needs N > 3");
  const double pmax = max_admissible_p(N);
  std::vector<RpScanRow> rows;
  for (double p : ps) {
    if (!(p > 2.0) || p > pmax * (1.0 + 1e-12)) {
      throw HypothesisError("2 < p <= (1+sqrt(4N-3))/2",
                            "p = " + std::to_string(p) + " outside (2, " + std::to_string(pmax) +
                                "]");
    }
    const Params params = Params::make(N, p);
    RpScanRow row;
    row.N = N;
    row.p = p;
    row.rp = solve_rp(params).root;
    // One-sided below the admissible endpoint so both samples stay in range.
    const double step = 1e-4;
    const double up_p = std::min(p + step, pmax);
    const double down_p = p - step;
    const double up = solve_rp_real(N, up_p).root;
    const double down = solve_rp_real(N, down_p).root;
    row.fd_slope = (up - down) / (up_p - down_p);
    row.implicit_slope = rp_slope_p(N, p, row.rp);
    row.printed_slope = rp_slope_p_printed(N, p, row.rp);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hypineq
