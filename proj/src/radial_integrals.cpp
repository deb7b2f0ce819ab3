#include "hypineq/radial_integrals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypineq/errors.hpp"

namespace hypineq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// (sinh r / r)^{N-1}, equal to 1 at r = 0.
double sinh_over_r_pow(double r, double e) {
  if (r <= 0.0) return 1.0;
  if (r < 1e-3) {
    const double r2 = r * r;
    return std::exp(e * std::log1p(r2 / 6.0 + r2 * r2 / 120.0));
  }
  return std::exp(e * (log_sinh(r) - std::log(r)));
}

double abs_pow_value(const RadialTestFunction& u, double r, double p) {
  if (u.log_abs_value) return std::exp(p * u.log_abs_value(r));
  return std::pow(std::abs(u.value(r)), p);
}

double abs_pow_derivative(const RadialTestFunction& u, double r, double p) {
  if (u.log_abs_derivative) return std::exp(p * u.log_abs_derivative(r));
  return std::pow(std::abs(u.derivative(r)), p);
}

void add_into(quad::QuadResult& total, const quad::QuadResult& part) {
  total.value += part.value;
  total.error += part.error;
  total.subdivisions += part.subdivisions;
  total.converged = total.converged && part.converged;
  total.truncation_point = part.truncation_point;
}

// Behaviour of a density near r = 0: density(r) = r^{gamma-1} g(r), g(0) = g0.
struct OriginForm {
  double gamma = 1.0;
  double g0 = 0.0;
  std::function<double(double)> g;
};

// Integrates `density` over the support of u. When the support starts at 0 the
// first piece uses singularity subtraction with `origin`.
quad::QuadResult integrate_over_support(const RadialTestFunction& u,
                                        const std::function<double(double)>& density,
                                        const OriginForm* origin,
                                        const std::optional<quad::DecayEnvelope>& envelope,
                                        double tol) {
  std::vector<double> cuts;
  for (double b : u.breakpoints) {
    if (b > u.lo && b < u.hi) cuts.push_back(b);
  }
  if (u.head && u.head->end > u.lo && u.head->end < u.hi) cuts.push_back(u.head->end);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const bool infinite = std::isinf(u.hi);
  double finite_end = u.hi;
  if (infinite) {
    if (!envelope) throw std::invalid_argument(u.id + ": infinite support needs a decay envelope");
    finite_end = cuts.empty() ? u.lo + 1.0 : cuts.back();
  }

  quad::QuadResult total;
  total.truncation_point = finite_end;
  double start = u.lo;

  if (u.lo == 0.0 && origin != nullptr) {
    if (!(origin->gamma > 0.0)) {
      throw HypothesisError("integrable at r = 0",
                            u.id + ": density ~ r^" + std::to_string(origin->gamma - 1.0) +
                                " is not integrable at the origin");
    }
    const double first = cuts.empty() ? finite_end : cuts.front();
    add_into(total, quad::integrate_power_singular(origin->g, origin->gamma, origin->g0, 0.0,
                                                   first, quad::Tolerance(tol)));
    start = first;
  }

  if (start < finite_end) {
    quad::IntervalOptions opt;
    opt.breakpoints = cuts;
    opt.left_singular = (start == 0.0);
    add_into(total, quad::integrate_interval(density, start, finite_end, quad::Tolerance(tol), opt));
  }

  if (infinite) {
    // The envelope bounds the density for r >= 0; shift it to the local variable.
    const quad::DecayEnvelope shifted{envelope->rate,
                                      envelope->constant * std::exp(-envelope->rate * finite_end)};
    const auto shifted_density = [&](double t) { return density(finite_end + t); };
    quad::IntervalOptions opt;
    quad::QuadResult tail =
        quad::integrate_semi_infinite(shifted_density, 0.0, shifted, quad::Tolerance(tol), opt);
    tail.truncation_point += finite_end;
    add_into(total, tail);
  }
  return total;
}

double head_kappa(const RadialTestFunction& u) { return u.head ? u.head->kappa : 0.0; }

// |u|^p / r^{p kappa} near 0, and its limit at 0.
double scaled_abs_pow(const RadialTestFunction& u, double r, double p) {
  if (u.head && r <= u.head->end) return std::pow(std::abs(u.head->c), p);
  if (r <= 0.0) return std::pow(std::abs(u.value(0.0)), p);
  return abs_pow_value(u, r, p) / std::pow(r, p * head_kappa(u));
}

struct OriginWeight {
  double s = 0.0;     // w(r) ~ coef r^{-s}
  double coef = 1.0;  // limit of w(r) r^s
};

OriginWeight origin_weight(const Params& params, RadialWeight w, double tol) {
  const double N = params.dimension();
  const double p = params.exponent();
  switch (w) {
    case RadialWeight::One:
      return {0.0, 1.0};
    case RadialWeight::InverseRadiusPower:
    case RadialWeight::InverseSinhPower:
      return {p, 1.0};
    case RadialWeight::RadiusConjugatePower:
      return {-params.conjugate_exponent(), 1.0};
    case RadialWeight::HardyPoincare:
      if (!(N > p)) throw DomainError("H_p is not positive near r = 0 unless N > p");
      return {p - 2.0, p == 2.0 ? 1.0 : std::pow((N - p) / (N - 1.0), p - 2.0)};
    case RadialWeight::Green:
      if (N > p) return {p, std::pow((N - p) / p, p)};
      if (N < p) {
        const double g0 = green_gp_at_origin(params, 0.01 * tol).value;
        return {p * (N - 1.0) / (p - 1.0), std::pow((p - 1.0) / p, p) * std::pow(g0, -p)};
      }
      throw HypothesisError("N != p", "W has a logarithmic singularity at r = 0 when N = p");
  }
  return {0.0, 1.0};
}

}  // namespace

const char* weight_name(RadialWeight w) {
  switch (w) {
    case RadialWeight::One:
      return "1";
    case RadialWeight::InverseRadiusPower:
      return "r^-p";
    case RadialWeight::InverseSinhPower:
      return "sinh^-p";
    case RadialWeight::Green:
      return "W";
    case RadialWeight::HardyPoincare:
      return "H_p";
    case RadialWeight::RadiusConjugatePower:
      return "r^p'";
  }
  return "?";
}

double radial_weight_value(const Params& params, RadialWeight weight, double r, double tol) {
  const double p = params.exponent();
  switch (weight) {
    case RadialWeight::One:
      return 1.0;
    case RadialWeight::InverseRadiusPower:
      return std::pow(r, -p);
    case RadialWeight::InverseSinhPower:
      return sinh_pow(r, -p);
    case RadialWeight::Green:
      return weight_W(params, r, tol);
    case RadialWeight::HardyPoincare:
      return weight_Hp(params, r);
    case RadialWeight::RadiusConjugatePower:
      return std::pow(r, params.conjugate_exponent());
  }
  return 0.0;
}

RadialEnergy radial_energy(const Params& params, const RadialTestFunction& u, double tol) {
  const double p = params.exponent();
  const double e = params.dimension() - 1.0;

  const auto mass_density = [&](double r) {
    if (u.log_abs_value) return std::exp(p * u.log_abs_value(r) + e * log_sinh(r));
    return abs_pow_value(u, r, p) * sinh_pow(r, e);
  };
  const auto energy_density = [&](double r) {
    if (u.log_abs_derivative) return std::exp(p * u.log_abs_derivative(r) + e * log_sinh(r));
    return abs_pow_derivative(u, r, p) * sinh_pow(r, e);
  };

  const double kappa = head_kappa(u);
  OriginForm mass_origin;
  mass_origin.gamma = e + 1.0 + p * kappa;
  mass_origin.g = [&](double r) { return scaled_abs_pow(u, r, p) * sinh_over_r_pow(r, e); };
  mass_origin.g0 = mass_origin.g(0.0);

  OriginForm energy_origin;
  if (u.head) {
    const double c = std::abs(u.head->c * kappa);
    energy_origin.gamma = e + 1.0 + p * (kappa - 1.0);
    energy_origin.g = [&, c](double r) {
      if (r <= u.head->end) return std::pow(c, p) * sinh_over_r_pow(r, e);
      return abs_pow_derivative(u, r, p) / std::pow(r, p * (kappa - 1.0)) * sinh_over_r_pow(r, e);
    };
  } else {
    energy_origin.gamma = e + 1.0;
    energy_origin.g = [&](double r) {
      return abs_pow_derivative(u, r, p) * sinh_over_r_pow(r, e);
    };
  }
  energy_origin.g0 = energy_origin.g(0.0);

  RadialEnergy out;
  out.energy = integrate_over_support(u, energy_density, &energy_origin, u.energy_envelope, tol);
  out.mass = integrate_over_support(u, mass_density, &mass_origin, u.mass_envelope, tol);
  return out;
}

quad::QuadResult radial_weighted_mass(const Params& params, const RadialTestFunction& u,
                                      RadialWeight weight, double tol) {
  const double p = params.exponent();
  const double e = params.dimension() - 1.0;
  if (std::isinf(u.hi) && weight != RadialWeight::One &&
      weight != RadialWeight::InverseRadiusPower && weight != RadialWeight::InverseSinhPower) {
    throw HypothesisError("compact support",
                          std::string("weight ") + weight_name(weight) +
                              " needs a compactly supported profile");
  }
  const double wtol = std::min(1e-12, 0.01 * tol);
  const auto density = [&](double r) {
    const double m = u.log_abs_value ? std::exp(p * u.log_abs_value(r) + e * log_sinh(r))
                                     : abs_pow_value(u, r, p) * sinh_pow(r, e);
    if (m == 0.0) return 0.0;
    return m * radial_weight_value(params, weight, r, wtol);
  };

  std::optional<quad::DecayEnvelope> envelope = u.mass_envelope;
  if (std::isinf(u.hi) && envelope && weight != RadialWeight::One) {
    // r^{-p} and sinh^{-p} are decreasing, so their value at the last cut bounds the tail.
    const double from = u.breakpoints.empty() ? u.lo + 1.0 : u.breakpoints.back();
    envelope->constant *= std::max(1.0, radial_weight_value(params, weight, from));
  }

  if (u.lo > 0.0) return integrate_over_support(u, density, nullptr, envelope, tol);

  const OriginWeight ow = origin_weight(params, weight, wtol);
  OriginForm origin;
  origin.gamma = e + 1.0 - ow.s + p * head_kappa(u);
  origin.g0 = scaled_abs_pow(u, 0.0, p) * ow.coef;
  origin.g = [&, ow](double r) {
    if (r <= 0.0) return scaled_abs_pow(u, 0.0, p) * ow.coef;
    double wr;
    switch (weight) {
      case RadialWeight::InverseRadiusPower:
        wr = 1.0;
        break;
      case RadialWeight::InverseSinhPower:
        wr = sinh_over_r_pow(r, -p);
        break;
      case RadialWeight::RadiusConjugatePower:
        wr = 1.0;
        break;
      default:
        wr = radial_weight_value(params, weight, r, wtol) * std::pow(r, ow.s);
        break;
    }
    return scaled_abs_pow(u, r, p) * wr * sinh_over_r_pow(r, e);
  };
  return integrate_over_support(u, density, &origin, envelope, tol);
}

double rho_sphere_measure(int N) {
  if (N < 3) throw std::invalid_argument("rho_sphere_measure: needs N >= 3");
  const double k = (N - 2) / 2.0;
  return 2.0 * std::pow(M_PI, k) / std::tgamma(k);
}

namespace {

// One coordinate of the half-space integral, possibly mapped from an infinite range.
struct Axis {
  enum class Map { Identity, Both, Upper };
  Map map = Map::Identity;
  double lo = 0.0;
  double hi = 0.0;

  // Coordinate value and Jacobian for the integration variable t.
  std::pair<double, double> at(double t) const {
    switch (map) {
      case Map::Identity:
        return {t, 1.0};
      case Map::Both: {
        const double d = 1.0 - t * t;
        return {t / d, (1.0 + t * t) / (d * d)};
      }
      case Map::Upper: {
        const double d = 1.0 - t;
        return {lo + t / d, 1.0 / (d * d)};
      }
    }
    return {t, 1.0};
  }
  double t_lo() const { return map == Map::Identity ? lo : (map == Map::Both ? -1.0 : 0.0); }
  double t_hi() const { return map == Map::Identity ? hi : 1.0; }
};

quad::Sample as_sample(const quad::QuadResult& r) { return {r.value, r.error}; }

}  // namespace

quad::QuadResult halfspace_integral(const Params& params, const HalfSpaceIntegrand& integrand,
                                    double tol) {
  if (integrand.depends_on_unreduced) {
    throw HypothesisError("reduced integrand",
                          "halfspace_integral needs a function of (x1, |x'|, y) only");
  }
  const int N = params.dimension();

  Axis ax, ar, ay;
  if (integrand.box) {
    const HalfSpaceBox& b = *integrand.box;
    if (!(b.y[0] > 0.0) || !(b.rho[0] >= 0.0)) {
      throw std::invalid_argument("halfspace_integral: box needs y > 0 and rho >= 0");
    }
    ax = {Axis::Map::Identity, b.x1[0], b.x1[1]};
    ar = {Axis::Map::Identity, b.rho[0], b.rho[1]};
    if (integrand.y_variable == YVariable::Log) {
      ay = {Axis::Map::Identity, std::log(b.y[0]), std::log(b.y[1])};
    } else {
      ay = {Axis::Map::Identity, b.y[0], b.y[1]};
    }
  } else {
    ax = {Axis::Map::Both, -kInf, kInf};
    ar = {Axis::Map::Upper, 0.0, kInf};
    ay = integrand.y_variable == YVariable::Log ? Axis{Axis::Map::Both, -kInf, kInf}
                                                : Axis{Axis::Map::Upper, 0.0, kInf};
  }

  const double inner_tol = 0.1 * tol;
  const double measure = N >= 3 ? rho_sphere_measure(N) : 1.0;
  const bool log_y = integrand.y_variable == YVariable::Log;
  quad::IntervalOptions opt;
  opt.rule = quad::Rule::GK31;

  const auto x_integral = [&](double rho, double y) {
    return quad::integrate_interval(
        [&](double t) {
          const auto [x, jx] = ax.at(t);
          if (!std::isfinite(x)) return 0.0;
          const double v = integrand.f(x, rho, y);
          return v == 0.0 ? 0.0 : v * jx;
        },
        ax.t_lo(), ax.t_hi(), quad::Tolerance(inner_tol), opt);
  };

  const auto rho_integral = [&](double y) -> quad::Sample {
    if (N == 2) return as_sample(x_integral(0.0, y));
    return as_sample(quad::integrate_nested(
        [&](double t) -> quad::Sample {
          const auto [rho, jr] = ar.at(t);
          if (!std::isfinite(rho)) return {0.0, 0.0};
          const double w = measure * (N == 3 ? 1.0 : std::pow(rho, N - 3)) * jr;
          if (w == 0.0) return {0.0, 0.0};
          const quad::QuadResult in = x_integral(rho, y);
          return {in.value * w, in.error * w};
        },
        ar.t_lo(), ar.t_hi(), quad::Tolerance(inner_tol), opt));
  };

  quad::IntervalOptions yopt = opt;
  yopt.left_singular = integrand.y_singular_low && !log_y;
  return quad::integrate_nested(
      [&](double t) -> quad::Sample {
        auto [v, jy] = ay.at(t);
        if (!std::isfinite(v)) return {0.0, 0.0};
        double y = v;
        if (log_y) {
          y = std::exp(v);
          jy *= y;
          if (!(y > 0.0) || !std::isfinite(y)) return {0.0, 0.0};
        }
        if (!(y > 0.0)) return {0.0, 0.0};
        const quad::Sample s = rho_integral(y);
        return {s.value * jy, s.error * jy};
      },
      ay.t_lo(), ay.t_hi(), quad::Tolerance(tol), yopt);
}

}  // namespace hypineq
