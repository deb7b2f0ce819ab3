#include "hypineq/testfun.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hypineq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn2 = 0.693147180559945309417232121458176568;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// exp(-1/(1-t^2)) on |t| < 1 with derivative in t.
struct Mollifier {
  static double log_value(double t) {
    const double d = 1.0 - t * t;
    if (!(d > 0.0)) return -kInf;
    return -1.0 / d;
  }
  static double value(double t) {
    const double d = 1.0 - t * t;
    if (!(d > 0.0)) return 0.0;
    return std::exp(-1.0 / d);
  }
  static double derivative(double t) {
    const double d = 1.0 - t * t;
    if (!(d > 0.0)) return 0.0;
    return std::exp(-1.0 / d) * (-2.0 * t / (d * d));
  }
  // log |d/dt|
  static double log_abs_derivative(double t) {
    const double d = 1.0 - t * t;
    if (!(d > 0.0) || t == 0.0) return -kInf;
    return -1.0 / d + std::log(2.0 * std::abs(t)) - 2.0 * std::log(d);
  }
};

// (1-t^2)^4 on |t| < 1: C^3 with compact support, cheap to integrate.
struct PolyBump {
  static double value(double t) {
    const double d = 1.0 - t * t;
    if (!(d > 0.0)) return 0.0;
    const double d2 = d * d;
    return d2 * d2;
  }
  static double derivative(double t) {
    const double d = 1.0 - t * t;
    if (!(d > 0.0)) return 0.0;
    return -8.0 * t * d * d * d;
  }
};

// Mollifier in the variable x on [lo, hi].
template <class Shape>
struct Bump1D {
  double lo;
  double hi;
  double t(double x) const { return (2.0 * x - lo - hi) / (hi - lo); }
  double value(double x) const { return Shape::value(t(x)); }
  double derivative(double x) const { return Shape::derivative(t(x)) * 2.0 / (hi - lo); }
};

// log(2 cosh x)
double log_2cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a));
}

}  // namespace

const char* shape_name(BumpShape s) {
  switch (s) {
    case BumpShape::Mollifier:
      return "mollifier";
    case BumpShape::Tent:
      return "tent";
    case BumpShape::CenteredMollifier:
      return "centered";
  }
  return "?";
}

RadialTestFunction make_bump(double lo, double hi, BumpShape shape) {
  if (!(lo >= 0.0) || !(hi > lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("make_bump: need 0 <= lo < hi < inf");
  }
  RadialTestFunction u;
  u.lo = lo;
  u.hi = hi;
  u.id = std::string(shape_name(shape)) + "[" + fmt(lo) + "," + fmt(hi) + "]";

  if (shape == BumpShape::CenteredMollifier) {
    if (lo != 0.0) throw std::invalid_argument("make_bump: centered shape needs lo = 0");
    u.smoothness = Smoothness::Smooth;
    u.value = [hi](double r) { return Mollifier::value(r / hi); };
    u.derivative = [hi](double r) { return Mollifier::derivative(r / hi) / hi; };
    u.log_abs_value = [hi](double r) { return Mollifier::log_value(r / hi); };
    u.log_abs_derivative = [hi](double r) {
      return Mollifier::log_abs_derivative(r / hi) - std::log(hi);
    };
    return u;
  }

  const double scale = 2.0 / (hi - lo);
  const auto t_of = [lo, hi](double r) { return (2.0 * r - lo - hi) / (hi - lo); };
  if (shape == BumpShape::Mollifier) {
    u.smoothness = Smoothness::Smooth;
    u.value = [t_of](double r) { return Mollifier::value(t_of(r)); };
    u.derivative = [t_of, scale](double r) { return Mollifier::derivative(t_of(r)) * scale; };
    u.log_abs_value = [t_of](double r) { return Mollifier::log_value(t_of(r)); };
    u.log_abs_derivative = [t_of, scale](double r) {
      return Mollifier::log_abs_derivative(t_of(r)) + std::log(scale);
    };
  } else {
    u.smoothness = Smoothness::PiecewiseC1;
    u.breakpoints = {0.5 * (lo + hi)};
    u.value = [t_of](double r) {
      const double t = t_of(r);
      return std::abs(t) < 1.0 ? 1.0 - std::abs(t) : 0.0;
    };
    u.derivative = [t_of, scale](double r) {
      const double t = t_of(r);
      if (!(std::abs(t) < 1.0)) return 0.0;
      return t > 0.0 ? -scale : scale;
    };
  }
  return u;
}

RadialTestFunction make_veps(double p, double eps, double delta) {
  if (!(p > 1.0)) throw std::invalid_argument("make_veps: p must be > 1");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("make_veps: need 0 < eps < 1");
  if (!(delta > 0.0)) throw std::invalid_argument("make_veps: delta must be > 0");
  const double k = (p - 1.0 + delta) / p;
  const double plateau = std::pow(eps, k);

  RadialTestFunction v;
  v.id = "veps[eps=" + fmt(eps) + ",delta=" + fmt(delta) + "]";
  v.lo = 0.0;
  v.hi = 2.0;
  v.smoothness = Smoothness::PiecewiseC1;
  v.breakpoints = {eps, 1.0};
  v.head = PowerHead{1.0, k, eps};
  v.value = [=](double r) {
    if (r <= 0.0) return 0.0;
    if (r < eps) return std::pow(r, k);
    if (r < 1.0) return plateau;
    if (r < 2.0) return plateau * (2.0 - r);
    return 0.0;
  };
  v.derivative = [=](double r) {
    if (r <= 0.0) return 0.0;
    if (r < eps) return k * std::pow(r, k - 1.0);
    if (r < 1.0) return 0.0;
    if (r < 2.0) return -plateau;
    return 0.0;
  };
  return v;
}

RadialTestFunction make_ueps_radial(const Params& params, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("make_ueps_radial: eps must be > 0");
  const double N = params.dimension();
  const double p = params.exponent();
  const double beta = N - 1.0 + eps;
  const double s = 2.0 * beta / p;

  RadialTestFunction u;
  u.id = "ueps[eps=" + fmt(eps) + "]";
  u.lo = 0.0;
  u.hi = kInf;
  u.smoothness = Smoothness::Smooth;
  for (double b = 1.0; b < 64.0; b *= 2.0) u.breakpoints.push_back(b);
  u.value = [s](double r) { return std::exp(-s * log_2cosh(0.5 * r)); };
  u.derivative = [s](double r) {
    return -0.5 * s * std::tanh(0.5 * r) * std::exp(-s * log_2cosh(0.5 * r));
  };
  u.log_abs_value = [s](double r) { return -s * log_2cosh(0.5 * r); };
  u.log_abs_derivative = [s](double r) {
    if (r <= 0.0) return -kInf;
    return std::log(0.5 * s) + std::log(std::tanh(0.5 * r)) - s * log_2cosh(0.5 * r);
  };
  // |U|^p sinh^{N-1} = (tanh(r/2)/2)^{N-1} (2 cosh(r/2))^{-2 eps} <= 2^{1-N} e^{-eps r}.
  const double c = std::exp((1.0 - N) * kLn2);
  u.mass_envelope = quad::DecayEnvelope{eps, c};
  u.energy_envelope = quad::DecayEnvelope{eps, c * std::pow(beta / p, p)};
  return u;
}

HalfSpaceFunction make_ueps(const Params& params, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("make_ueps: eps must be > 0");
  const double N = params.dimension();
  const double p = params.exponent();
  const double beta = N - 1.0 + eps;
  const double k = beta / p;

  HalfSpaceFunction u;
  u.id = "ueps-halfspace[eps=" + fmt(eps) + "]";
  u.value = [k](double x1, double rho, double y) {
    const double x2 = x1 * x1 + rho * rho;
    return std::pow(y / ((1.0 + y) * (1.0 + y) + x2), k);
  };
  u.gradient_norm = [k](double x1, double rho, double y) {
    const double x2 = x1 * x1 + rho * rho;
    const double D = (1.0 + y) * (1.0 + y) + x2;
    const double a = 1.0 - y * y + x2;
    const double factor = std::sqrt(a * a + 4.0 * x2 * y * y) / D;
    return k * std::pow(y / D, k) * factor / y;
  };
  u.envelope = quad::DecayEnvelope{eps, std::exp(-2.0 * beta * kLn2)};
  return u;
}

HalfSpaceFunction make_separable(int N, double x_lo, double x_hi, double rho_max, double y_lo,
                                 double y_hi) {
  if (!(x_hi > x_lo) || !(y_lo > 0.0) || !(y_hi > y_lo)) {
    throw std::invalid_argument("make_separable: invalid box");
  }
  if (N >= 3 && !(rho_max > 0.0)) throw std::invalid_argument("make_separable: rho_max <= 0");
  const Bump1D<PolyBump> a{x_lo, x_hi};
  const Bump1D<PolyBump> c{y_lo, y_hi};
  const bool has_rho = N >= 3;
  const double R = rho_max;

  HalfSpaceFunction u;
  u.id = "separable[x=" + fmt(x_lo) + ":" + fmt(x_hi) + ",rho<" + fmt(rho_max) +
         ",y=" + fmt(y_lo) + ":" + fmt(y_hi) + "]";
  const auto b = [has_rho, R](double rho) {
    return has_rho ? PolyBump::value(rho / R) : 1.0;
  };
  const auto db = [has_rho, R](double rho) {
    return has_rho ? PolyBump::derivative(rho / R) / R : 0.0;
  };
  u.value = [a, c, b](double x1, double rho, double y) {
    return a.value(x1) * b(rho) * c.value(y);
  };
  u.gradient_norm = [a, c, b, db](double x1, double rho, double y) {
    const double av = a.value(x1), bv = b(rho), cv = c.value(y);
    const double gx = a.derivative(x1) * bv * cv;
    const double gr = av * db(rho) * cv;
    const double gy = av * bv * c.derivative(y);
    return std::hypot(gx, gr, gy);
  };
  HalfSpaceBox box;
  box.x1 = {x_lo, x_hi};
  box.rho = {0.0, has_rho ? R : 0.0};
  box.y = {y_lo, y_hi};
  u.box = box;
  u.envelope = quad::DecayEnvelope{1.0, 0.0};
  return u;
}

}  // namespace hypineq
