#include "hypineq/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>

namespace hypineq::quad {

namespace {

// Kronrod abscissae (positive half, descending) and weights for 15 and 31
// points; the odd-indexed abscissae are the embedded Gauss nodes.
constexpr std::array<double, 8> kXgk15 = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk15 = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg15 = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr std::array<double, 16> kXgk31 = {
    0.998002298693397060285172840152271209, 0.987992518020485428489565718586612581,
    0.967739075679139134257347978784337225, 0.937273392400705904307758947710209471,
    0.897264532344081900882509656454495883, 0.848206583410427216200648320774216851,
    0.790418501442465932967649294817947347, 0.72441773136017004741618605461393801,
    0.650996741297416970533735895313274693, 0.570972172608538847537226737253910641,
    0.485081863640239680693655740232350613, 0.394151347077563369897207370981045468,
    0.299180007153168812166780024266388963, 0.201194093997434522300628303394596208,
    0.101142066918717499027074231447392339, 0.0};
constexpr std::array<double, 16> kWgk31 = {
    0.00537747987292334898779205143012764982, 0.0150079473293161225383747630758072681,
    0.0254608473267153201868740010196533594, 0.0353463607913758462220379484783600481,
    0.0445897513247648766082272993732796902, 0.0534815246909280872653431472394302968,
    0.0620095678006706402851392309608029322, 0.0698541213187282587095200770991474758,
    0.0768496807577203788944327774826590067, 0.0830805028231330210382892472861037896,
    0.0885644430562117706472754436937743032, 0.0931265981708253212254868727473457186,
    0.0966427269836236785051799076275893351, 0.0991735987217919593323931734846031311,
    0.100769845523875595044946662617569722, 0.101330007014791549017374792767492547};
constexpr std::array<double, 8> kWg31 = {
    0.0307532419961172683546283935772044177, 0.0703660474881081247092674164506673385,
    0.107159220467171935011869546685869303, 0.139570677926154314447804794511028323,
    0.166269205816993933553200860481208811, 0.186161000015562211026800561866422825,
    0.198431485327111576456118326443839325, 0.202578241925561272880620199967519315};

struct RuleTable {
  const double* xgk;
  const double* wgk;
  const double* wg;
  int half;  // Kronrod nodes in [0, 1), center last
};

RuleTable rule_table(Rule rule) {
  switch (rule) {
    case Rule::GK31:
      return {kXgk31.data(), kWgk31.data(), kWg31.data(), 15};
    default:
      return {kXgk15.data(), kWgk15.data(), kWg15.data(), 7};
  }
}

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kGradingLevels = 40;

struct Panel {
  double lo = 0.0;
  double hi = 0.0;
  double value = 0.0;
  double error = 0.0;
  double abs_value = 0.0;
  double inner_error = 0.0;
};

struct PanelOrder {
  bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

template <class F>
Panel gauss_kronrod(const F& f, double lo, double hi, const RuleTable& rule) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const int n = rule.half;

  const Sample fc = f(center);
  double kronrod = rule.wgk[n] * fc.value;
  double gauss = rule.wg[n / 2] * fc.value;
  double abs_sum = rule.wgk[n] * std::abs(fc.value);
  double inner = rule.wgk[n] * fc.error;

  for (int j = 0; j < n; ++j) {
    const double dx = half * rule.xgk[j];
    const Sample f1 = f(center - dx);
    const Sample f2 = f(center + dx);
    const double sum = f1.value + f2.value;
    kronrod += rule.wgk[j] * sum;
    abs_sum += rule.wgk[j] * (std::abs(f1.value) + std::abs(f2.value));
    inner += rule.wgk[j] * (f1.error + f2.error);
    if (j % 2 == 1) gauss += rule.wg[j / 2] * sum;
  }

  Panel panel;
  panel.lo = lo;
  panel.hi = hi;
  panel.value = kronrod * half;
  panel.error = std::abs((kronrod - gauss) * half);
  panel.abs_value = abs_sum * std::abs(half);
  panel.inner_error = inner * std::abs(half);
  if (!std::isfinite(panel.value) || !std::isfinite(panel.error)) {
    throw QuadratureError("non-finite integrand value on [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "]",
                          QuadResult{});
  }
  return panel;
}

std::vector<double> initial_partition(double a, double b, const IntervalOptions& opt) {
  std::vector<double> pts{a, b};
  for (double x : opt.breakpoints) {
    if (x > a && x < b) pts.push_back(x);
  }
  const double length = b - a;
  if (opt.left_singular) {
    double h = length;
    for (int k = 0; k < kGradingLevels; ++k) {
      h *= 0.5;
      pts.push_back(a + h);
    }
  }
  if (opt.right_singular) {
    double h = length;
    for (int k = 0; k < kGradingLevels; ++k) {
      h *= 0.5;
      pts.push_back(b - h);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

template <class F>
QuadResult adaptive(const F& f, double a, double b, Tolerance tol, const IntervalOptions& opt) {
  if (!(a < b)) {
    if (a == b) return QuadResult{0.0, 0.0, 0, b, true};
    throw std::invalid_argument("integrate: require a < b");
  }

  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> heap;
  std::vector<Panel> frozen;  // panels too narrow to bisect further
  double value = 0.0;
  double error = 0.0;
  double abs_value = 0.0;
  double inner = 0.0;

  const auto add = [&](const Panel& p) {
    value += p.value;
    error += p.error;
    abs_value += p.abs_value;
    inner += p.inner_error;
  };
  const auto remove = [&](const Panel& p) {
    value -= p.value;
    error -= p.error;
    abs_value -= p.abs_value;
    inner -= p.inner_error;
  };

  const RuleTable rule = rule_table(opt.rule);
  const std::vector<double> pts = initial_partition(a, b, opt);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Panel p = gauss_kronrod(f, pts[i], pts[i + 1], rule);
    add(p);
    heap.push(p);
  }

  int panels = static_cast<int>(heap.size());
  bool converged = true;
  while (true) {
    const double target = tol.target(value);
    const double floor = 50.0 * kEps * abs_value;
    const double total = std::max(error, 0.0) + std::max(inner, 0.0);
    if (total <= target) break;
    // Bisection cannot push the total below the inner-integral error.
    if (total <= floor || heap.empty() || error <= 0.01 * std::max(target, floor) ||
        error <= inner) {
      converged = false;
      break;
    }
    if (panels >= opt.max_panels) {
      QuadResult best{value, total, panels, b, false};
      throw QuadratureError("integrate: panel budget exhausted", best);
    }
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi) ||
        (worst.hi - worst.lo) < 8.0 * kEps * std::max(std::abs(worst.lo), std::abs(worst.hi))) {
      frozen.push_back(worst);
      continue;
    }
    remove(worst);
    const Panel left = gauss_kronrod(f, worst.lo, mid, rule);
    const Panel right = gauss_kronrod(f, mid, worst.hi, rule);
    add(left);
    add(right);
    heap.push(left);
    heap.push(right);
    ++panels;
  }

  // Re-sum from scratch so the running totals do not carry cancellation drift.
  QuadResult result;
  result.truncation_point = b;
  result.subdivisions = panels;
  result.converged = converged;
  double v = 0.0;
  double e = 0.0;
  double in = 0.0;
  const auto collect = [&](const Panel& p) {
    v += p.value;
    e += p.error;
    in += p.inner_error;
  };
  for (const Panel& p : frozen) collect(p);
  while (!heap.empty()) {
    collect(heap.top());
    heap.pop();
  }
  result.value = v;
  result.error = e + in;
  return result;
}

}  // namespace

double Tolerance::target(double value) const { return std::max(abs, rel * std::abs(value)); }

double DecayEnvelope::tail(double from) const {
  return constant * std::exp(-rate * from) / rate;
}

QuadResult integrate_interval(const Integrand& f, double a, double b, Tolerance tol,
                              const IntervalOptions& options) {
  const auto wrapped = [&f](double x) { return Sample{f(x), 0.0}; };
  return adaptive(wrapped, a, b, tol, options);
}

QuadResult integrate_nested(const NestedIntegrand& f, double a, double b, Tolerance tol,
                            const IntervalOptions& options) {
  const auto wrapped = [&f](double x) {
    Sample s = f(x);
    s.error = std::abs(s.error);
    return s;
  };
  return adaptive(wrapped, a, b, tol, options);
}

QuadResult integrate_semi_infinite(const Integrand& f, double a, const DecayEnvelope& envelope,
                                   Tolerance tol, const IntervalOptions& options) {
  if (!(envelope.rate > 0.0) || !(envelope.constant >= 0.0)) {
    throw std::invalid_argument("integrate_semi_infinite: envelope needs rate > 0, constant >= 0");
  }
  // Geometric breakpoints a+1, a+2, a+4, ... keep structure near a visible to
  // the first panels of a long interval.
  const auto pieces = [&](double lo, double hi) {
    IntervalOptions opt = options;
    for (double s = 1.0; lo + s < hi; s *= 2.0) {
      if (lo + s > lo) opt.breakpoints.push_back(lo + s);
    }
    opt.left_singular = options.left_singular && lo == a;
    return integrate_interval(f, lo, hi, tol, opt);
  };

  double upper = a + std::max(8.0, 8.0 / envelope.rate);
  QuadResult total = pieces(a, upper);
  int guard = 0;
  while (true) {
    const double target = tol.target(total.value);
    const double tail = envelope.tail(upper);
    if (tail <= 0.5 * target || guard++ > 60) {
      total.error += tail;
      total.truncation_point = upper;
      break;
    }
    double next = upper + (upper - a);
    if (target > 0.0 && envelope.constant > 0.0) {
      const double needed =
          std::log(envelope.constant / (envelope.rate * 0.25 * target)) / envelope.rate;
      if (std::isfinite(needed)) next = std::max(next, needed);
    }
    const QuadResult extra = pieces(upper, next);
    total.value += extra.value;
    total.error += extra.error;
    total.subdivisions += extra.subdivisions;
    total.converged = total.converged && extra.converged;
    upper = next;
  }
  return total;
}

QuadResult integrate_power_singular(const Integrand& g, double gamma, double g_at_a, double a,
                                    double b, Tolerance tol, const IntervalOptions& options) {
  if (!(gamma > 0.0)) throw std::invalid_argument("integrate_power_singular: gamma must be > 0");
  const double length = b - a;
  const double head = g_at_a * std::pow(length, gamma) / gamma;
  IntervalOptions opt = options;
  opt.left_singular = true;
  // The remainder is O((r-a)^gamma) near a; ask for accuracy relative to the head.
  Tolerance rem_tol = tol;
  rem_tol.abs = std::max(tol.abs, 0.25 * tol.rel * std::abs(head));
  const QuadResult rest = integrate_interval(
      [&](double r) {
        const double s = r - a;
        if (s <= 0.0) return 0.0;
        return std::pow(s, gamma - 1.0) * (g(r) - g_at_a);
      },
      a, b, rem_tol, opt);
  QuadResult out = rest;
  out.value = head + rest.value;
  return out;
}

}  // namespace hypineq::quad
