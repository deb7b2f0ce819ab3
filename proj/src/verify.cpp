#include "hypineq/verify.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "hypineq/constants.hpp"
#include "hypineq/errors.hpp"
#include "hypineq/parallel.hpp"
#include "hypineq/rp_solver.hpp"

namespace hypineq {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Term {
  double value = 0.0;
  double error = 0.0;
};

Term term(const quad::QuadResult& r) { return {r.value, r.error}; }
Term operator*(double c, Term t) { return {c * t.value, std::abs(c) * t.error}; }
Term operator+(Term a, Term b) { return {a.value + b.value, a.error + b.error}; }
Term operator-(Term a, Term b) { return {a.value - b.value, a.error + b.error}; }

InequalityReport make_report(InequalityKind kind, const Params& params, const std::string& id,
                             Term lhs, Term rhs) {
  InequalityReport rep;
  rep.kind = kind;
  rep.N = params.dimension();
  rep.p = params.exponent();
  rep.test_function_id = id;
  rep.lhs = lhs.value;
  rep.rhs = rhs.value;
  rep.slack = lhs.value - rhs.value;
  rep.quad_error = lhs.error + rhs.error;
  rep.l = kNaN;
  rep.pass = std::isfinite(rep.slack) && std::isfinite(rep.quad_error) &&
             rep.slack >= -rep.quad_error;
  return rep;
}

// x coth x, equal to 1 at 0.
double x_coth_x(double x) {
  if (x < 1e-8) return 1.0;
  return x / std::tanh(x);
}

struct Hardy1DTerms {
  Term lhs;  // int |v|^{p-l} coth^{p-l} |v'|^l
  Term rhs;  // int |v|^p r^{-p}
};

Hardy1DTerms hardy1d_terms(double p, double l, const RadialTestFunction& v, double tol) {
  if (std::isinf(v.hi)) throw HypothesisError("compact support", "HARDY1D needs a bounded profile");
  const double m = p - l;
  const auto lhs_density = [&](double r) {
    const double d = std::abs(v.derivative(r));
    if (d == 0.0) return 0.0;
    const double a = std::abs(v.value(r));
    return std::pow(a / std::tanh(r), m) * std::pow(d, l);
  };
  const auto rhs_density = [&](double r) { return std::pow(std::abs(v.value(r)) / r, p); };

  std::vector<double> cuts;
  for (double b : v.breakpoints) {
    if (b > v.lo && b < v.hi) cuts.push_back(b);
  }
  double start = v.lo;
  Hardy1DTerms out;

  if (v.lo == 0.0) {
    if (!v.head) {
      if (v.value(0.0) != 0.0) {
        throw HypothesisError("v(0) = 0", v.id + ": HARDY1D needs profiles vanishing at 0");
      }
      throw HypothesisError("power head", v.id + ": profiles starting at 0 need a power head");
    }
    const PowerHead h = *v.head;
    const double gamma = h.kappa * p - p + 1.0;
    if (!(gamma > 0.0)) throw HypothesisError("kappa > (p-1)/p", "HARDY1D head not integrable");
    const double cp = std::pow(std::abs(h.c), p);
    // On (0, end]: v = c r^k, so the lhs density is c^p k^l r^{gamma-1} (r coth r)^{p-l}.
    const double g0 = cp * std::pow(std::abs(h.kappa), l);
    const auto g = [&, g0](double r) { return g0 * std::pow(x_coth_x(r), m); };
    out.lhs = term(quad::integrate_power_singular(g, gamma, g0, 0.0, h.end, quad::Tolerance(tol)));
    out.rhs = {cp * std::pow(h.end, gamma) / gamma, 0.0};
    start = h.end;
    cuts.erase(std::remove_if(cuts.begin(), cuts.end(), [&](double c) { return c <= start; }),
               cuts.end());
  }

  quad::IntervalOptions opt;
  opt.breakpoints = cuts;
  if (start < v.hi) {
    out.lhs = out.lhs + term(quad::integrate_interval(lhs_density, start, v.hi,
                                                      quad::Tolerance(tol), opt));
    out.rhs = out.rhs + term(quad::integrate_interval(rhs_density, start, v.hi,
                                                      quad::Tolerance(tol), opt));
  }
  return out;
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

bool origin_allowed(InequalityKind kind, const Params& params) {
  switch (kind) {
    case InequalityKind::HARDY1D:
      return false;
    case InequalityKind::PROP11:
      return params.dimension() != params.exponent();
    default:
      return true;
  }
}

}  // namespace

const std::vector<InequalityKind>& all_kinds() {
  static const std::vector<InequalityKind> kinds = {
      InequalityKind::PGAP,  InequalityKind::PROP11, InequalityKind::THM23,
      InequalityKind::THM25, InequalityKind::COR27,  InequalityKind::THM29,
      InequalityKind::THM32, InequalityKind::THM72,  InequalityKind::HARDY1D};
  return kinds;
}

const char* kind_tag(InequalityKind kind) {
  switch (kind) {
    case InequalityKind::PGAP:
      return "PGAP";
    case InequalityKind::PROP11:
      return "PROP11";
    case InequalityKind::THM23:
      return "THM23";
    case InequalityKind::THM25:
      return "THM25";
    case InequalityKind::COR27:
      return "COR27";
    case InequalityKind::THM29:
      return "THM29";
    case InequalityKind::THM32:
      return "THM32";
    case InequalityKind::THM72:
      return "THM72";
    case InequalityKind::HARDY1D:
      return "HARDY1D";
  }
  return "?";
}

std::optional<InequalityKind> parse_kind(const std::string& tag) {
  std::string upper = tag;
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (InequalityKind k : all_kinds()) {
    if (upper == kind_tag(k)) return k;
  }
  return std::nullopt;
}

bool is_halfspace_kind(InequalityKind kind) {
  return kind == InequalityKind::THM23 || kind == InequalityKind::THM32;
}

void check_hypotheses(InequalityKind kind, const Params& params) {
  const double p = params.exponent();
  switch (kind) {
    case InequalityKind::THM25:
    case InequalityKind::COR27:
    case InequalityKind::THM29:
    case InequalityKind::THM72:
      if (!(p >= 2.0)) throw HypothesisError("p >= 2", std::string(kind_tag(kind)) + " needs p >= 2");
      if (!params.poincare_hardy_admissible()) {
        throw HypothesisError("N >= 1 + p(p-1)",
                              std::string(kind_tag(kind)) + " at N = " +
                                  std::to_string(params.dimension()) + ", p = " + std::to_string(p));
      }
      break;
    default:
      break;
  }
}

InequalityReport verify(InequalityKind kind, const Params& params, const RadialTestFunction& u,
                        const VerifyOptions& options) {
  if (is_halfspace_kind(kind)) {
    throw std::invalid_argument(std::string(kind_tag(kind)) + " needs a half-space test function");
  }
  check_hypotheses(kind, params);
  const double tol = options.tol;
  const double p = params.exponent();
  const double lambda = lambda_p(params);

  if (kind == InequalityKind::HARDY1D) {
    const double l = options.l.value_or(p);
    if (!(l > 1.0 && l <= p)) throw HypothesisError("1 < l <= p", "HARDY1D exponent out of range");
    const Hardy1DTerms t = hardy1d_terms(p, l, u, tol);
    InequalityReport rep =
        make_report(kind, params, u.id, t.lhs, std::pow((p - 1.0) / p, l) * t.rhs);
    rep.l = l;
    return rep;
  }

  if (kind == InequalityKind::THM72 && p > 2.0) {
    const double rp = solve_rp(params).root;
    if (u.hi > rp) {
      throw HypothesisError("supp u in B(x0, r_p)", u.id + " extends beyond r_p = " +
                                                         std::to_string(rp));
    }
  }

  const RadialEnergy en = radial_energy(params, u, tol);
  const Term E = term(en.energy);
  const Term M = term(en.mass);
  const auto weighted = [&](RadialWeight w) {
    return term(radial_weighted_mass(params, u, w, tol));
  };

  switch (kind) {
    case InequalityKind::PGAP:
      return make_report(kind, params, u.id, E, lambda * M);
    case InequalityKind::PROP11:
      return make_report(kind, params, u.id, E - lambda * M, weighted(RadialWeight::Green));
    case InequalityKind::THM25:
      return make_report(kind, params, u.id, E - lambda * M,
                         poincare_hardy_constant(params) * weighted(RadialWeight::InverseRadiusPower));
    case InequalityKind::COR27: {
      if (std::isinf(u.hi)) throw HypothesisError("compact support", "COR27 needs compact support");
      const Term gap = E - lambda * M;
      const Term B = weighted(RadialWeight::RadiusConjugatePower);
      // Both sides divided by M^p, which overflows for wide supports in high N.
      const double e = p - 1.0;  // p / p'
      const double b = std::pow(B.value / M.value, e);
      const double lhs_value = gap.value / M.value * b;
      const Term lhs{lhs_value, b / M.value * gap.error +
                                    std::abs(lhs_value) * (e * B.error / B.value + p * M.error / M.value)};
      const Term rhs{poincare_hardy_constant(params), 0.0};
      return make_report(kind, params, u.id, lhs, rhs);
    }
    case InequalityKind::THM29: {
      const Term lhs = E - lambda * weighted(RadialWeight::HardyPoincare);
      const Term rhs = hardy_weight_constant(params) * weighted(RadialWeight::InverseRadiusPower) +
                       sinh_weight_constant(params) * weighted(RadialWeight::InverseSinhPower);
      return make_report(kind, params, u.id, lhs, rhs);
    }
    case InequalityKind::THM72: {
      const Term rhs = hardy_weight_constant(params) * weighted(RadialWeight::InverseRadiusPower) +
                       sinh_weight_constant(params) * weighted(RadialWeight::InverseSinhPower);
      return make_report(kind, params, u.id, E - lambda * M, rhs);
    }
    default:
      break;
  }
  throw std::invalid_argument("verify: unsupported kind");
}

HalfSpaceTerms halfspace_terms(const Params& params, const HalfSpaceFunction& u, YVariable route,
                               double tol) {
  const double N = params.dimension();
  const double p = params.exponent();
  const bool hyperbolic = route == YVariable::Log;

  HalfSpaceIntegrand base;
  base.box = u.box;
  base.y_variable = route;

  HalfSpaceTerms out;
  HalfSpaceIntegrand energy = base;
  if (hyperbolic) {
    // |grad_H u|^p dv with grad_H u = y^2 grad u in the metric delta/y^2, so |grad_H u| = y |grad u|.
    energy.f = [&](double x, double rho, double y) {
      const double g = u.gradient_norm(x, rho, y);
      return g == 0.0 ? 0.0 : std::pow(y * g, p) / std::pow(y, N);
    };
  } else {
    energy.f = [&](double x, double rho, double y) {
      const double g = u.gradient_norm(x, rho, y);
      return g == 0.0 ? 0.0 : std::pow(g, p) * std::pow(y, p - N);
    };
  }
  out.energy = halfspace_integral(params, energy, tol);

  HalfSpaceIntegrand mass = base;
  mass.f = [&](double x, double rho, double y) {
    const double v = u.value(x, rho, y);
    return v == 0.0 ? 0.0 : std::pow(std::abs(v), p) / std::pow(y, N);
  };
  out.mass = halfspace_integral(params, mass, tol);

  HalfSpaceIntegrand weighted = base;
  if (hyperbolic) {
    weighted.f = [&](double x, double rho, double y) {
      const double v = u.value(x, rho, y);
      if (v == 0.0) return 0.0;
      return weight_V({x, rho, y}) * std::pow(std::abs(v), p) / std::pow(y, N);
    };
  } else {
    weighted.f = [&](double x, double rho, double y) {
      const double v = u.value(x, rho, y);
      if (v == 0.0) return 0.0;
      return std::pow(std::abs(v), p) / (std::pow(y, N - 1.0) * std::sqrt(y * y + x * x));
    };
  }
  out.weighted = halfspace_integral(params, weighted, tol);
  return out;
}

InequalityReport verify(InequalityKind kind, const Params& params, const HalfSpaceFunction& u,
                        const VerifyOptions& options) {
  if (!is_halfspace_kind(kind)) {
    throw std::invalid_argument(std::string(kind_tag(kind)) + " needs a radial test function");
  }
  check_hypotheses(kind, params);
  const YVariable route = kind == InequalityKind::THM23 ? YVariable::Log : YVariable::Linear;
  const HalfSpaceTerms t = halfspace_terms(params, u, route, options.tol);
  const Term lhs = term(t.energy) - lambda_p(params) * term(t.mass);
  const Term rhs = mazya_constant(params) * term(t.weighted);
  return make_report(kind, params, u.id, lhs, rhs);
}

RadialTestFunction random_radial(InequalityKind kind, const Params& params, std::mt19937_64& rng,
                                 bool allow_origin, double* l) {
  const double p = params.exponent();
  if (kind == InequalityKind::HARDY1D) {
    if (l != nullptr) *l = 1.0 + (p - 1.0) * (1.0 - uniform01(rng));
    if (uniform01(rng) < 0.5) {
      const double eps = log_uniform(rng, 1e-3, 0.5);
      const double delta = log_uniform(rng, 1e-2, 1.0);
      return make_veps(p, eps, delta);
    }
  }

  if (allow_origin && origin_allowed(kind, params) && uniform01(rng) < 0.25) {
    double hi = log_uniform(rng, 0.1, 20.0);
    if (kind == InequalityKind::THM72 && p > 2.0) hi = std::min(hi, solve_rp(params).root);
    return make_bump(0.0, hi, BumpShape::CenteredMollifier);
  }

  double top = 20.0;
  double bottom = 0.1;
  if (kind == InequalityKind::THM72 && p > 2.0) {
    top = solve_rp(params).root;
    bottom = 0.02 * top;
  }
  double a = log_uniform(rng, bottom, top);
  double b = log_uniform(rng, bottom, top);
  if (a > b) std::swap(a, b);
  if (b < a * 1.05) {
    if (a * 1.05 <= top) {
      b = a * 1.05;
    } else {
      a = b / 1.05;
    }
  }
  const BumpShape shape = uniform01(rng) < 0.75 ? BumpShape::Mollifier : BumpShape::Tent;
  return make_bump(a, b, shape);
}

HalfSpaceFunction random_halfspace(const Params& params, std::mt19937_64& rng) {
  const double x_lo = uniform(rng, -3.0, 2.0);
  const double x_hi = x_lo + uniform(rng, 0.2, 3.0);
  const double rho = uniform(rng, 0.3, 2.0);
  const double y_lo = log_uniform(rng, 0.05, 2.0);
  const double y_hi = y_lo * (1.0 + uniform(rng, 0.2, 4.0));
  return make_separable(params.dimension(), x_lo, x_hi, rho, y_lo, y_hi);
}

namespace {

InequalityReport run_trial(InequalityKind kind, const Params& params, const BatteryOptions& options,
                           std::size_t i) {
  std::mt19937_64 rng = trial_rng(options.seed, i);
  VerifyOptions vo;
  vo.tol = options.tol;
  std::string id = "trial-" + std::to_string(i);
  try {
    if (is_halfspace_kind(kind)) {
      const HalfSpaceFunction u = random_halfspace(params, rng);
      id = u.id;
      return verify(kind, params, u, vo);
    }
    double l = params.exponent();
    const RadialTestFunction u = random_radial(kind, params, rng, options.allow_origin, &l);
    id = u.id;
    if (kind == InequalityKind::HARDY1D) vo.l = l;
    return verify(kind, params, u, vo);
  } catch (const std::exception& e) {
    InequalityReport rep;
    rep.kind = kind;
    rep.N = params.dimension();
    rep.p = params.exponent();
    rep.test_function_id = id + " error: " + e.what();
    rep.lhs = rep.rhs = rep.slack = rep.quad_error = kNaN;
    rep.l = kNaN;
    rep.pass = false;
    return rep;
  }
}

}  // namespace

std::vector<InequalityReport> run_battery(InequalityKind kind, const Params& params,
                                          const BatteryOptions& options) {
  check_hypotheses(kind, params);
  const std::size_t n = static_cast<std::size_t>(std::max(0, options.trials));
  return parallel_map<InequalityReport>(
      n, [&](std::size_t i) { return run_trial(kind, params, options, i); });
}

std::vector<InequalityReport> run_battery_grid(InequalityKind kind,
                                               const std::vector<std::pair<int, double>>& grid,
                                               const BatteryOptions& options) {
  if (grid.empty()) throw std::invalid_argument("run_battery_grid: empty grid");
  std::vector<Params> params;
  for (const auto& [N, p] : grid) {
    params.push_back(Params::make(N, p));
    check_hypotheses(kind, params.back());
  }
  const std::size_t n = static_cast<std::size_t>(std::max(0, options.trials));
  return parallel_map<InequalityReport>(n, [&](std::size_t i) {
    return run_trial(kind, params[i % params.size()], options, i);
  });
}

double hardy1d_tail_constant(double p, double l, double tol) {
  const double m = p - l;
  return quad::integrate_interval(
             [m](double r) { return std::pow((2.0 - r) / std::tanh(r), m); }, 1.0, 2.0,
             quad::Tolerance(tol))
      .value;
}

std::vector<SharpnessPoint> sharpness_scan(InequalityKind kind, const Params& params,
                                           const std::vector<std::pair<double, double>>& schedule,
                                           double l, double tol) {
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    if (!(schedule[i].first < schedule[i - 1].first)) {
      throw std::invalid_argument("sharpness_scan: schedule must be strictly decreasing in eps");
    }
  }
  const double N = params.dimension();
  const double p = params.exponent();
  std::vector<SharpnessPoint> out;

  if (kind == InequalityKind::PGAP) {
    for (const auto& [eps, unused] : schedule) {
      (void)unused;
      const RadialTestFunction u = make_ueps_radial(params, eps);
      const RadialEnergy en = radial_energy(params, u, tol);
      SharpnessPoint pt;
      pt.eps = eps;
      pt.delta = kNaN;
      pt.quotient = en.energy.value / en.mass.value;
      pt.quad_error =
          pt.quotient * (en.energy.error / en.energy.value + en.mass.error / en.mass.value);
      pt.lower = lambda_p(params);
      pt.upper = std::pow((N - 1.0 + eps) / p, p);
      pt.within = pt.quotient >= pt.lower - pt.quad_error && pt.quotient <= pt.upper + pt.quad_error;
      out.push_back(pt);
    }
    return out;
  }

  if (kind == InequalityKind::HARDY1D) {
    if (l == 0.0) l = p;
    if (!(l > 1.0 && l <= p)) throw HypothesisError("1 < l <= p", "HARDY1D exponent out of range");
    const double c = hardy1d_tail_constant(p, l);
    for (const auto& [eps, delta] : schedule) {
      const RadialTestFunction v = make_veps(p, eps, delta);
      const Hardy1DTerms t = hardy1d_terms(p, l, v, tol);
      SharpnessPoint pt;
      pt.eps = eps;
      pt.delta = delta;
      pt.quotient = t.lhs.value / t.rhs.value;
      pt.quad_error = pt.quotient * (t.lhs.error / t.lhs.value + t.rhs.error / t.rhs.value);
      pt.lower = std::pow((p - 1.0) / p, l);
      pt.upper = std::pow((p - 1.0 + delta) / p, l) * std::pow(std::cosh(eps), p - l) +
                 c * delta * std::pow(eps, p - 1.0);
      pt.within = pt.quotient >= pt.lower - pt.quad_error && pt.quotient <= pt.upper + pt.quad_error;
      out.push_back(pt);
    }
    return out;
  }
  throw std::invalid_argument("sharpness_scan: kind must be PGAP or HARDY1D");
}

double check_pconvexity(double p, double xi, double eta) {
  if (!(p >= 1.0) || !(xi >= 0.0) || !(xi - eta >= 0.0)) {
    throw std::invalid_argument("check_pconvexity: needs p >= 1, xi >= 0, xi - eta >= 0");
  }
  const double ae = std::abs(eta);
  double lhs;
  if (xi == 0.0) {
    lhs = std::pow(ae, p);
  } else {
    // xi^p [(1-t)^p - 1 + p t] with t = eta/xi, free of cancellation for small t.
    const double t = eta / xi;
    lhs = std::pow(xi, p) * (std::expm1(p * std::log1p(-t)) + p * t);
  }
  double rhs;
  if (p >= 2.0) {
    const double quad = xi == 0.0 ? (p == 2.0 ? eta * eta : 0.0)
                                  : (p - 1.0) * eta * eta * std::pow(xi, p - 2.0);
    rhs = std::max(quad, std::pow(ae, p));
  } else {
    const double s = xi + ae;
    rhs = s == 0.0 ? 0.0 : 0.5 * p * (p - 1.0) * eta * eta / std::pow(s, 2.0 - p);
  }
  return lhs - rhs;
}

double ftilde(const Params& params, double r) {
  const double N = params.dimension();
  const double p = params.exponent();
  const double c = std::pow(std::cosh(r), p - 2.0);
  const double s = std::sinh(r);
  // cosh^{p-2} - sinh^{p-2} = cosh^{p-2} (1 - tanh^{p-2})
  const double log_tanh = std::log1p(-2.0 / (std::exp(2.0 * r) + 1.0));
  const double diff = -std::expm1((p - 2.0) * log_tanh);
  return c * (N - 1.0 - p * (p - 1.0)) + (N - 1.0) * s * s * c * diff;
}

FtildeResult check_Ftilde(const Params& params, const std::vector<double>& grid) {
  FtildeResult out;
  out.min = std::numeric_limits<double>::infinity();
  for (double r : grid) {
    const double v = ftilde(params, r);
    if (v < out.min) {
      out.min = v;
      out.argmin = r;
    }
  }
  return out;
}

std::vector<double> ftilde_grid(double r_max, int points) {
  std::vector<double> g;
  const double lo = std::log(1e-6);
  const double hi = std::log(r_max);
  for (int i = 0; i < points; ++i) g.push_back(std::exp(lo + (hi - lo) * i / (points - 1)));
  return g;
}

SupersolutionResidual supersolution_residual(const Params& params, double r, double fd_step) {
  if (!(r > 0.0) || !(fd_step > 0.0) || fd_step >= r) {
    throw std::invalid_argument("supersolution_residual: needs 0 < fd_step < r");
  }
  const double N = params.dimension();
  const double p = params.exponent();
  const auto g = [&](double x) {
    return std::exp((p - 1.0) / p * std::log(x) - (N - 1.0) / p * log_sinh(x));
  };
  const double gr = g(r);
  const double coth = 1.0 / std::tanh(r);
  const double dg = -(1.0 / p) * ((N - 1.0) * coth - (p - 1.0) / r) * gr;
  const double s = std::sinh(r);
  const double Lg = -(std::pow((N - 1.0) / p, 2) + (p - 1.0) * (p - 1.0) / (p * p * r * r) +
                      (p - 1.0) * (p - 2.0) * (N - 1.0) / (p * p) * coth / r +
                      (N - 1.0) * (N - 1.0 - p * (p - 1.0)) / (p * p) / (s * s)) *
                    gr;

  const auto d1 = [&](double h) { return (g(r + h) - g(r - h)) / (2.0 * h); };
  const auto d2 = [&](double h) { return (g(r + h) - 2.0 * gr + g(r - h)) / (h * h); };
  const auto rich1 = [&](double h) { return (4.0 * d1(0.5 * h) - d1(h)) / 3.0; };

  SupersolutionResidual out;
  const double fd1 = rich1(fd_step);
  out.derivative = std::abs(fd1 - dg) / std::abs(dg);

  const double h2 = std::max(fd_step, 1e-3 * r);
  const double fd2 = (4.0 * d2(0.5 * h2) - d2(h2)) / 3.0;
  const double fd1b = rich1(h2);
  const double L = (p - 1.0) * fd2 + (N - 1.0) * coth * fd1b;
  out.identity = std::abs(L - Lg) / std::abs(Lg);
  out.step_warning = std::abs(fd2 - d2(0.5 * h2)) > 1e-5 * std::abs(fd2) ||
                     std::abs(fd1 - d1(0.5 * fd_step)) > 1e-5 * std::abs(fd1);
  return out;
}

std::vector<std::pair<int, double>> default_grid(InequalityKind kind) {
  switch (kind) {
    case InequalityKind::PGAP:
      return {{3, 2.0}, {13, 4.0}, {2, 1.5}, {5, 3.0}, {7, 2.5}, {2, 2.0}};
    case InequalityKind::PROP11:
      return {{3, 2.0}, {5, 2.0}, {6, 3.0}, {2, 3.0}, {13, 4.0}, {3, 1.5}};
    case InequalityKind::THM25:
    case InequalityKind::COR27:
    case InequalityKind::THM29:
    case InequalityKind::THM72:
      return {{13, 4.0}, {3, 2.0}, {7, 3.0}, {5, 2.0}, {8, 2.5}, {20, 3.0}};
    case InequalityKind::HARDY1D:
      return {{2, 2.0}, {2, 3.0}, {2, 1.5}, {2, 4.0}};
    case InequalityKind::THM23:
    case InequalityKind::THM32:
      return {{2, 1.5}, {2, 2.0}, {2, 3.0}, {3, 1.5}, {3, 2.0}, {3, 3.0}};
  }
  return {};
}

}  // namespace hypineq
