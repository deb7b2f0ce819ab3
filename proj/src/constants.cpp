#include "hypineq/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hypineq {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double delta_of(double p) {
  const double pp = p / (p - 1.0);
  return q_b(pp / 2.0) * (2.0 - p) / p;
}

// f(c) = c(1 - c(N-1)/2) - c^2 (2-c)^2 q_{p'/2} (2-p)(N-1)/(2p)
double f_of_c(double N, double p, double c) {
  const double d = delta_of(p);
  return c * (1.0 - c * (N - 1.0) / 2.0) - c * c * (2.0 - c) * (2.0 - c) * d * (N - 1.0) / 2.0;
}

double mu1(double N, double p, double M, double a) {
  return a / (1.0 + (a / M) * (1.0 + (N - 1.0) * a / (2.0 * (p - 1.0))));
}

double mu2(double N, double p, double a) {
  return a / (1.0 + 2.0 * (N - 1.0) * a * (1.0 + (N - 1.0) * a / p));
}

}  // namespace

const char* case_name(CnpCase c) {
  switch (c) {
    case CnpCase::PUpTo4Thirds:
      return "p<=4/3";
    case CnpCase::P4ThirdsTo2:
      return "4/3<p<=2";
    case CnpCase::P2ToCritical:
      return "2<p<=2(N-1)^2";
    case CnpCase::PAboveCritical:
      return "p>2(N-1)^2";
    case CnpCase::N2Refined:
      return "N=2-refined";
  }
  return "?";
}

const char* kind_name(BoundKind k) { return k == BoundKind::Exact ? "exact" : "lowerBound"; }

double q_b(double b) {
  if (!(b > 0.0)) throw std::invalid_argument("q_b: b must be > 0");
  return (b >= 1.0 && b <= 2.0) ? 1.0 : b / 2.0;
}

double check_ni(double b, double s) {
  const double lhs = -std::expm1(b * std::log1p(-s));
  const double rhs = b * s - q_b(b) * (b - 1.0) * s * s;
  return lhs - rhs;
}

CNPResult c_np(const Params& params) {
  const double N = params.dimension();
  const double p = params.exponent();
  CNPResult out;
  if (p <= 2.0) {
    const double d = delta_of(p);
    const double t = (p - 1.0) * (1.0 + 4.0 * d);
    out.value = 1.0 / (2.0 * p * (1.0 + 4.0 * d)) / (1.0 + 1.0 / std::sqrt(t));
    out.kind = BoundKind::LowerBound;
    out.case_label = p <= 4.0 / 3.0 ? CnpCase::PUpTo4Thirds : CnpCase::P4ThirdsTo2;
    out.optimizer_arg = kNaN;
    out.M = kNaN;
    return out;
  }
  out.kind = BoundKind::Exact;
  out.M = kNaN;
  if (p <= 2.0 * (N - 1.0) * (N - 1.0)) {
    out.value = 1.0 / (std::sqrt(2.0) * (std::sqrt(2.0) * p + 2.0 * std::sqrt(p)));
    out.case_label = CnpCase::P2ToCritical;
    out.optimizer_arg = std::sqrt(p / 2.0) / (N - 1.0);
  } else {
    out.value = 1.0 / (p / (N - 1.0) + 2.0 * p + 2.0 * (N - 1.0));
    out.case_label = CnpCase::PAboveCritical;
    out.optimizer_arg = 1.0;
  }
  return out;
}

CNPResult c_2p(double p) {
  if (!(p > 1.0 && p < 2.0)) throw std::invalid_argument("c_2p: needs 1 < p < 2");
  const double pp = p / (p - 1.0);
  const double d = delta_of(p);
  CNPResult out;
  out.kind = BoundKind::Exact;
  out.case_label = CnpCase::N2Refined;
  if (p >= 4.0 / 3.0) {
    out.value = (1.0 / pp) * std::sqrt(2.0) / (std::sqrt(2.0) * p + std::sqrt(p));
    out.M = (1.0 - d) / 2.0;
  } else {
    out.value = (1.0 / pp) / (2.0 * (2.0 - p) + std::sqrt(2.0 - p));
    out.M = 1.0 / (8.0 * d);
  }
  out.optimizer_arg = std::min(1.0, std::sqrt(2.0 * (p - 1.0) * out.M));
  return out;
}

double gamma_of_M(double N, double p, double M) {
  const double c = (N - 1.0) / (2.0 * (p - 1.0));
  const double a0 = std::sqrt(M / c);
  if (a0 >= 1.0) return (N - 1.0) / p * mu1(N, p, M, 1.0);
  return (N - 1.0) / p * M / (1.0 + 2.0 * std::sqrt(c * M));
}

CNPResult c_2p_from_maximizer(double p) {
  CNPResult out = c_2p(p);
  out.value = gamma_of_M(2.0, p, out.M);
  return out;
}

double grid_golden_max(const std::function<double(double)>& f, double lo, double hi, int grid,
                       double xtol) {
  if (grid < 2) grid = 2;
  const double h = (hi - lo) / grid;
  int best = 0;
  double best_val = f(lo);
  for (int i = 1; i <= grid; ++i) {
    const double v = f(lo + i * h);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  double a = std::max(lo, lo + (best - 1) * h);
  double b = std::min(hi, lo + (best + 1) * h);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > xtol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    }
  }
  const double mid = 0.5 * (a + b);
  // Endpoint maxima are kept exactly.
  if (best_val >= f(mid) && (best == 0 || best == grid)) return lo + best * h;
  return mid;
}

BruteForceCnp brute_force_cnp(const Params& params, int grid) {
  const double N = params.dimension();
  const double p = params.exponent();
  BruteForceCnp out;
  if (p <= 2.0) {
    const auto f = [&](double c) { return f_of_c(N, p, c); };
    out.argmax_c = grid_golden_max(f, 0.0, 1.0, grid);
    out.M = f(out.argmax_c);
    const auto g = [&](double a) { return mu1(N, p, out.M, a); };
    out.argmax_a = grid_golden_max(g, 0.0, 1.0, grid);
    out.value = (N - 1.0) / p * g(out.argmax_a);
  } else {
    const auto g = [&](double a) { return mu2(N, p, a); };
    out.argmax_a = grid_golden_max(g, 0.0, 1.0, grid);
    out.value = (N - 1.0) / p * g(out.argmax_a);
    out.M = kNaN;
    out.argmax_c = kNaN;
  }
  return out;
}

double poincare_hardy_constant(const Params& params) {
  const double N = params.dimension();
  const double p = params.exponent();
  const double q = (p - 1.0) / p;
  return (p - 1.0) * std::pow((N - 1.0) / p, p - 2.0) * q * q;
}

double hardy_weight_constant(const Params& params) {
  const double N = params.dimension();
  const double p = params.exponent();
  return std::pow(p - 1.0, p - 1.0) * (N * (p - 2.0) + 1.0) / std::pow(p, p);
}

double sinh_weight_constant(const Params& params) {
  const double N = params.dimension();
  const double p = params.exponent();
  return (N - 1.0) * (N - 1.0 - p * (p - 1.0)) * std::pow(p - 1.0, p - 2.0) / std::pow(p, p);
}

double mazya_constant(const Params& params) {
  const double N = params.dimension();
  const double p = params.exponent();
  return std::pow((N - 1.0) / p, p - 2.0) * c_np(params).value;
}

}  // namespace hypineq
