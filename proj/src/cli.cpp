#include "hypineq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypineq/constants.hpp"
#include "hypineq/errors.hpp"
#include "hypineq/hyp_core.hpp"
#include "hypineq/parallel.hpp"
#include "hypineq/report.hpp"
#include "hypineq/rp_solver.hpp"
#include "hypineq/verify.hpp"

namespace hypineq::cli {

namespace {

using report::Cell;
using report::Envelope;

struct Config {
  std::string command;
  int N = 3;
  double p = 2.0;
  double tol = 1e-10;
  std::uint64_t seed = 1;
  int trials = 100;
  std::string format = "csv";
  std::string output;
  std::string golden;
  double rel_tol = 1e-9;
  std::string kind;
  bool allow_origin = false;
  std::vector<double> eps;
  std::vector<double> delta;
  double l = 0.0;
  double r_min = 1e-3;
  double r_max = 20.0;
  int points = 200;
  int N_max = 0;
  std::vector<double> ps;
  int samples = 10000;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Cell num(double x) {
  if (std::isnan(x)) return std::string("nan");
  return x;
}

Cell integer(long long x) { return static_cast<std::int64_t>(x); }

std::string all_kind_tags() {
  std::string s;
  for (InequalityKind k : all_kinds()) {
    if (!s.empty()) s += ", ";
    s += kind_tag(k);
  }
  return s;
}

Envelope base_envelope(const Config& c, const std::string& table_name,
                       std::vector<std::string> columns) {
  Envelope env;
  env.command = c.command;
  env.params["tol"] = c.tol;
  env.table.name = table_name;
  env.table.columns = std::move(columns);
  return env;
}

void echo_np(Envelope& env, const Config& c) {
  env.params["N"] = integer(c.N);
  env.params["p"] = c.p;
}

bool finish_summary(Envelope& env, bool pass) {
  env.summary["pass"] = pass;
  return pass;
}

bool cmd_constants(const Config& c, Envelope& env) {
  const Params params = Params::make(c.N, c.p);
  env = base_envelope(c, "constants", {"quantity", "value", "kind", "case", "check"});
  echo_np(env, c);
  auto& rows = env.table.rows;
  bool pass = true;

  rows.push_back({std::string("LambdaP"), lambda_p(params), std::string("exact"), std::string(""),
                  true});
  const CNPResult cn = c_np(params);
  const BruteForceCnp bf = brute_force_cnp(params);
  const bool exact = cn.kind == BoundKind::Exact;
  const bool c_ok = exact ? std::abs(bf.value - cn.value) <= 1e-8 * cn.value
                          : bf.value >= cn.value * (1.0 - 1e-12);
  pass = pass && c_ok;
  rows.push_back({std::string("C"), cn.value, std::string(kind_name(cn.kind)),
                  std::string(case_name(cn.case_label)), c_ok});
  rows.push_back({std::string("C_bruteforce"), bf.value, std::string("numeric"), std::string(""),
                  true});
  if (!exact) {
    rows.push_back({std::string("M_bruteforce"), bf.M, std::string("numeric"), std::string(""),
                    true});
  }
  if (c.N == 2 && c.p < 2.0) {
    const CNPResult printed = c_2p(c.p);
    const CNPResult corrected = c_2p_from_maximizer(c.p);
    const bool printed_ok = std::abs(printed.value - bf.value) <= 1e-8 * bf.value;
    const bool corrected_ok = std::abs(corrected.value - bf.value) <= 1e-8 * bf.value;
    pass = pass && printed_ok && corrected_ok;
    rows.push_back({std::string("c2p_printed"), printed.value, std::string(kind_name(printed.kind)),
                    std::string(case_name(printed.case_label)), printed_ok});
    rows.push_back({std::string("c2p_corrected"), corrected.value,
                    std::string(kind_name(corrected.kind)),
                    std::string(case_name(corrected.case_label)), corrected_ok});
    if (!printed_ok) {
      env.diagnostics.push_back("closed-form c_2p differs from the brute-force maximum");
    }
  }
  rows.push_back({std::string("mazya"), mazya_constant(params), std::string(kind_name(cn.kind)),
                  std::string(""), true});
  if (params.poincare_hardy_admissible()) {
    rows.push_back({std::string("poincare_hardy"), poincare_hardy_constant(params),
                    std::string("exact"), std::string(""), true});
    rows.push_back({std::string("hardy_weight"), hardy_weight_constant(params),
                    std::string("exact"), std::string(""), true});
    rows.push_back({std::string("sinh_weight"), sinh_weight_constant(params),
                    std::string("exact"), std::string(""), true});
  }
  return finish_summary(env, pass);
}

bool cmd_weights(const Config& c, Envelope& env) {
  const Params params = Params::make(c.N, c.p);
  if (!(c.r_min > 0.0) || !(c.r_max > c.r_min) || c.points < 2) {
    throw UsageError("weights: needs 0 < r-min < r-max and points >= 2");
  }
  env = base_envelope(c, "weights", {"r", "W", "Hp", "V"});
  echo_np(env, c);
  env.params["r_min"] = c.r_min;
  env.params["r_max"] = c.r_max;
  env.params["points"] = integer(c.points);
  const double lo = std::log(c.r_min);
  const double hi = std::log(c.r_max);
  std::vector<double> rs;
  for (int i = 0; i < c.points; ++i) rs.push_back(std::exp(lo + (hi - lo) * i / (c.points - 1)));
  const auto rows = parallel_map<std::vector<Cell>>(rs.size(), [&](std::size_t i) {
    const double r = rs[i];
    Cell hp;
    try {
      hp = weight_Hp(params, r);
    } catch (const DomainError&) {
      hp = std::string("undefined");
    }
    // V on the unit semicircle, the geodesic through the base point.
    const double v = weight_V(HalfSpacePoint{std::tanh(r), 0.0, 1.0 / std::cosh(r)});
    return std::vector<Cell>{r, weight_W(params, r, c.tol), hp, v};
  });
  env.table.rows = rows;
  return finish_summary(env, true);
}

bool cmd_rp(const Config& c, Envelope& env) {
  const Params params = Params::make(c.N, c.p);
  env = base_envelope(c, "rp", {"quantity", "value"});
  echo_np(env, c);
  const RootResult rp = solve_rp(params);
  auto& rows = env.table.rows;
  rows.push_back({std::string("rp"), rp.root});
  if (rp.infinite) {
    env.diagnostics.push_back("p = 2: H_2 = 1 and r_p = +inf");
    return finish_summary(env, true);
  }
  const RootResult r0 = solve_r0(params);
  const double hp = weight_Hp(params, rp.root);
  rows.push_back({std::string("rp_residual"), rp.residual});
  rows.push_back({std::string("Hp_at_rp"), hp});
  rows.push_back({std::string("r0"), r0.root});
  rows.push_back({std::string("r0_residual"), r0.residual});
  const bool pass = rp.residual <= 1e-12 && std::abs(hp - 1.0) <= 1e-10 && rp.root < r0.root;
  return finish_summary(env, pass);
}

bool cmd_rp_scan(const Config& c, Envelope& env) {
  env = base_envelope(c, "rp_scan", {"N", "p", "rp", "fd_slope", "implicit_slope", "printed_slope",
                                     "implicit_ok", "printed_ok"});
  std::vector<RpScanRow> scan;
  bool in_p = !c.ps.empty();
  if (in_p) {
    env.params["N"] = integer(c.N);
    env.params["ps"] = [&] {
      std::string s;
      for (double x : c.ps) s += (s.empty() ? "" : " ") + report::format_double(x);
      return s;
    }();
    scan = rp_scan_p(c.N, c.ps);
  } else {
    if (c.N_max < c.N) throw UsageError("rp-scan: give --ps or --N-max >= --N");
    env.params["N"] = integer(c.N);
    env.params["N_max"] = integer(c.N_max);
    env.params["p"] = c.p;
    scan = rp_scan_N(c.p, c.N, c.N_max);
  }
  bool monotone = true;
  bool implicit_all = true;
  bool printed_all = true;
  for (std::size_t i = 0; i < scan.size(); ++i) {
    const RpScanRow& r = scan[i];
    if (i > 0) monotone = monotone && (in_p ? r.rp < scan[i - 1].rp : r.rp > scan[i - 1].rp);
    const bool implicit_ok = std::abs(r.fd_slope - r.implicit_slope) <= 0.05 * std::abs(r.implicit_slope);
    const bool printed_ok = std::abs(r.fd_slope - r.printed_slope) <= 0.05 * std::abs(r.printed_slope);
    implicit_all = implicit_all && implicit_ok;
    printed_all = printed_all && printed_ok;
    env.table.rows.push_back({r.N, r.p, r.rp, r.fd_slope, r.implicit_slope, r.printed_slope,
                              implicit_ok, printed_ok});
  }
  env.summary["monotone"] = monotone;
  env.summary["implicit_slopes_match"] = implicit_all;
  env.summary["printed_slopes_match"] = printed_all;
  if (!printed_all) {
    env.diagnostics.push_back("printed p-slope r sinh^2 r/((N-1) h) disagrees with finite differences");
  }
  return finish_summary(env, monotone && implicit_all);
}

bool cmd_verify(const Config& c, Envelope& env, bool np_given) {
  const auto kind = parse_kind(c.kind);
  if (!kind) throw UsageError("verify: unknown kind '" + c.kind + "' (kinds: " + all_kind_tags() + ")");
  if (c.allow_origin && (*kind == InequalityKind::HARDY1D || is_halfspace_kind(*kind))) {
    throw UsageError(std::string("verify: --allow-origin is not available for ") + kind_tag(*kind));
  }
  if (c.trials < 1) throw UsageError("verify: --trials must be >= 1");
  env = base_envelope(c, "reports", {"trial", "kind", "N", "p", "l", "test_function", "lhs", "rhs",
                                     "slack", "quad_error", "pass"});
  env.params["kind"] = std::string(kind_tag(*kind));
  env.params["trials"] = integer(c.trials);
  env.params["seed"] = static_cast<std::int64_t>(c.seed);
  env.params["allow_origin"] = c.allow_origin;
  BatteryOptions bo;
  bo.trials = c.trials;
  bo.seed = c.seed;
  bo.tol = c.tol;
  bo.allow_origin = c.allow_origin;
  std::vector<InequalityReport> reports;
  if (np_given) {
    echo_np(env, c);
    reports = run_battery(*kind, Params::make(c.N, c.p), bo);
  } else {
    env.params["grid"] = std::string("default");
    reports = run_battery_grid(*kind, default_grid(*kind), bo);
  }
  std::int64_t passed = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const InequalityReport& r = reports[i];
    if (r.pass) ++passed;
    if (!std::isnan(r.slack)) min_slack = std::min(min_slack, r.slack);
    env.table.rows.push_back({integer(static_cast<long long>(i)), std::string(kind_tag(r.kind)),
                              integer(r.N), r.p, num(r.l), r.test_function_id, num(r.lhs),
                              num(r.rhs), num(r.slack), num(r.quad_error), r.pass});
  }
  env.summary["trials"] = integer(static_cast<long long>(reports.size()));
  env.summary["passed"] = passed;
  env.summary["min_slack"] = min_slack;
  return finish_summary(env, passed == static_cast<std::int64_t>(reports.size()));
}

bool cmd_sharpness(const Config& c, Envelope& env) {
  const auto kind = parse_kind(c.kind.empty() ? "PGAP" : c.kind);
  if (!kind || (*kind != InequalityKind::PGAP && *kind != InequalityKind::HARDY1D)) {
    throw UsageError("sharpness: --kind must be PGAP or HARDY1D");
  }
  const Params params = Params::make(c.N, c.p);
  const std::vector<double> eps = c.eps.empty() ? std::vector<double>{1e-1, 1e-2, 1e-3} : c.eps;
  const std::vector<double> delta = c.delta.empty() ? eps : c.delta;
  if (delta.size() != eps.size()) throw UsageError("sharpness: --delta must match --eps in length");
  std::vector<std::pair<double, double>> schedule;
  for (std::size_t i = 0; i < eps.size(); ++i) schedule.emplace_back(eps[i], delta[i]);
  env = base_envelope(c, "sharpness",
                      {"eps", "delta", "quotient", "quad_error", "lower", "upper", "within"});
  echo_np(env, c);
  env.params["kind"] = std::string(kind_tag(*kind));
  const double l = *kind == InequalityKind::HARDY1D ? (c.l > 0.0 ? c.l : c.p) : 0.0;
  if (*kind == InequalityKind::HARDY1D) env.params["l"] = l;
  const auto points = sharpness_scan(*kind, params, schedule, l, c.tol);
  bool pass = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const SharpnessPoint& pt = points[i];
    pass = pass && pt.within;
    if (*kind == InequalityKind::PGAP && i > 0) {
      pass = pass && pt.quotient < points[i - 1].quotient + pt.quad_error;
    }
    env.table.rows.push_back({pt.eps, num(pt.delta), pt.quotient, pt.quad_error, pt.lower,
                              pt.upper, pt.within});
  }
  env.summary["sharp_constant"] = points.back().lower;
  env.summary["last_relative_gap"] = points.back().quotient / points.back().lower - 1.0;
  return finish_summary(env, pass);
}

bool cmd_figure1(const Config& c, Envelope& env) {
  const Params params = Params::make(c.N, c.p);
  if (!(c.r_max > 0.0) || c.points < 2) throw UsageError("figure1: needs r-max > 0, points >= 2");
  const RootResult rp = solve_rp(params);
  env = base_envelope(c, "curve", {"r", "Hp", "is_ge_one"});
  echo_np(env, c);
  env.params["r_max"] = c.r_max;
  env.params["points"] = integer(c.points);
  bool consistent = true;
  bool marker_done = rp.infinite;
  for (int i = 1; i <= c.points; ++i) {
    const double r = c.r_max * i / c.points;
    if (!marker_done && r >= rp.root) {
      const double h = weight_Hp(params, rp.root);
      env.table.rows.push_back({rp.root, h, h >= 1.0});
      marker_done = true;
      if (r == rp.root) continue;
    }
    const double h = weight_Hp(params, r);
    const bool ge = h >= 1.0;
    consistent = consistent && (ge == (r <= rp.root));
    env.table.rows.push_back({r, h, ge});
  }
  const double h_end = weight_Hp(params, c.r_max);
  env.summary["rp"] = rp.root;
  env.summary["Hp_at_r_max"] = h_end;
  env.summary["crossing_consistent"] = consistent;
  const bool tail_ok = std::abs(h_end - 1.0) <= 1e-3;
  env.summary["tail_within_1e-3"] = tail_ok;
  if (!tail_ok) {
    env.diagnostics.push_back("|H_p(r_max) - 1| = " + report::format_double(std::abs(h_end - 1.0)) +
                              " exceeds 1e-3");
  }
  return finish_summary(env, consistent && tail_ok);
}

struct Extremum {
  double min = std::numeric_limits<double>::infinity();
  std::string where;
};

bool cmd_proofcheck(const Config& c, Envelope& env) {
  const Params params = Params::make(c.N, c.p);
  if (c.samples < 1) throw UsageError("proofcheck: --samples must be >= 1");
  env = base_envelope(c, "proofcheck", {"check", "count", "min_slack", "at", "pass"});
  echo_np(env, c);
  env.params["seed"] = static_cast<std::int64_t>(c.seed);
  env.params["samples"] = integer(c.samples);
  auto& rows = env.table.rows;
  bool pass = true;

  const auto sample_min = [&](std::uint64_t stream,
                              const std::function<std::pair<double, std::string>(std::mt19937_64&)>& f) {
    Extremum e;
    std::mt19937_64 rng = trial_rng(c.seed, stream);
    for (int i = 0; i < c.samples; ++i) {
      const auto [v, where] = f(rng);
      if (v < e.min) {
        e.min = v;
        e.where = where;
      }
    }
    return e;
  };

  const Extremum ni = sample_min(0, [](std::mt19937_64& rng) {
    const double b = std::exp(uniform(rng, std::log(1e-2), std::log(10.0)));
    const double s = uniform01(rng);
    return std::make_pair(check_ni(b, s), "b=" + report::format_double(b) +
                                              " s=" + report::format_double(s));
  });
  const bool ni_ok = ni.min >= -1e-14;
  rows.push_back({std::string("ni"), integer(c.samples), ni.min, ni.where, ni_ok});

  const Extremum pc = sample_min(1, [](std::mt19937_64& rng) {
    const double p = uniform(rng, 1.0, 6.0);
    const double xi = uniform(rng, 0.0, 10.0);
    const double eta = xi - uniform(rng, 0.0, 20.0);
    return std::make_pair(check_pconvexity(p, xi, eta),
                          "p=" + report::format_double(p) + " xi=" + report::format_double(xi) +
                              " eta=" + report::format_double(eta));
  });
  const bool pc_ok = pc.min >= -1e-14;
  rows.push_back({std::string("pconvexity"), integer(c.samples), pc.min, pc.where, pc_ok});

  const std::vector<double> grid = ftilde_grid();
  const FtildeResult ft = check_Ftilde(params, grid);
  const bool admissible = params.poincare_hardy_admissible();
  const bool ft_ok = (ft.min >= 0.0) == admissible;
  rows.push_back({std::string(admissible ? "Ftilde_nonnegative" : "Ftilde_negative_found"),
                  integer(static_cast<long long>(grid.size())), ft.min,
                  "r=" + report::format_double(ft.argmin), ft_ok});
  pass = ni_ok && pc_ok && ft_ok;

  if (admissible) {
    double worst = 0.0;
    std::string where;
    bool warning = false;
    const int radii = 16;
    for (int i = 0; i < radii; ++i) {
      const double r = std::exp(std::log(0.05) + (std::log(10.0) - std::log(0.05)) * i / (radii - 1));
      const SupersolutionResidual res = supersolution_residual(params, r, 1e-3 * r);
      const double m = std::max(res.identity, res.derivative);
      warning = warning || res.step_warning;
      if (m >= worst) {
        worst = m;
        where = "r=" + report::format_double(r);
      }
    }
    const bool ss_ok = worst < 1e-6;
    pass = pass && ss_ok;
    rows.push_back({std::string("supersolution_residual"), integer(radii), -worst, where, ss_ok});
    if (warning) env.diagnostics.push_back("supersolution: finite-difference step sensitivity");
  }
  return finish_summary(env, pass);
}

Envelope error_envelope(const Config& c, const std::string& type, const std::string& predicate,
                        const std::string& message) {
  Envelope env = base_envelope(c, "error", {"error", "predicate", "message"});
  env.params["N"] = integer(c.N);
  env.params["p"] = c.p;
  env.table.rows.push_back({type, predicate, message});
  env.summary["pass"] = false;
  env.diagnostics.push_back(message);
  return env;
}

void write(const Envelope& env, const Config& c) {
  const report::Format f = c.format == "json" ? report::Format::Json : report::Format::Csv;
  if (c.output.empty()) return;
  report::emit_to_file(env, f, c.output);
}

void add_common(CLI::App* sub, Config& c, bool needs_np) {
  if (needs_np) {
    sub->add_option("--N", c.N, "Dimension N >= 2")->capture_default_str();
    sub->add_option("--p", c.p, "Exponent p > 1")->capture_default_str();
  }
  sub->add_option("--tol", c.tol, "Quadrature relative tolerance")->capture_default_str();
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--output", c.output, "Write the report to this path instead of stdout");
  sub->add_option("--golden", c.golden, "Compare against a golden JSON report");
  sub->add_option("--rel-tol", c.rel_tol, "Relative tolerance for --golden")->capture_default_str();
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Numerical checks of improved Lp-Poincare inequalities on hyperbolic space"};
  app.footer("Inequality kinds: " + all_kind_tags() +
             "\nExit codes: 0 all checks pass, 1 a check fails, 2 usage or hypothesis error."
             "\nHYPINEQ_WORKERS caps the number of worker threads.");
  app.require_subcommand(1);

  CLI::App* constants = app.add_subcommand("constants", "Lambda_p, C(N,p), c_2p and brute-force C");
  add_common(constants, c, true);

  CLI::App* weights = app.add_subcommand("weights", "Sample W, H_p and V on a geometric r grid");
  add_common(weights, c, true);
  weights->add_option("--r-min", c.r_min)->capture_default_str();
  weights->add_option("--r-max", c.r_max)->capture_default_str();
  weights->add_option("--points", c.points)->capture_default_str();

  CLI::App* rp = app.add_subcommand("rp", "Critical radius r_p and the sign-change radius r_0");
  add_common(rp, c, true);

  CLI::App* rp_scan = app.add_subcommand("rp-scan", "r_p along N (--N..--N-max) or along p (--ps)");
  add_common(rp_scan, c, true);
  rp_scan->add_option("--N-max", c.N_max, "Last N of an N-scan");
  rp_scan->add_option("--ps", c.ps, "Exponents of a p-scan at fixed N");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Batch of seeded random test functions");
  add_common(verify_cmd, c, true);
  verify_cmd->add_option("--kind", c.kind, "Inequality kind: " + all_kind_tags())->required();
  verify_cmd->add_option("--trials", c.trials, "Number of random test functions")->capture_default_str();
  verify_cmd->add_option("--seed", c.seed, "Batch seed; trial i uses (seed, i)")->capture_default_str();
  verify_cmd->add_flag("--allow-origin", c.allow_origin, "Also draw bumps whose support meets r = 0");

  CLI::App* sharp = app.add_subcommand("sharpness", "Quotients of the extremal families (PGAP, HARDY1D)");
  add_common(sharp, c, true);
  sharp->add_option("--kind", c.kind, "PGAP or HARDY1D")->capture_default_str();
  sharp->add_option("--eps", c.eps, "Decreasing eps schedule");
  sharp->add_option("--delta", c.delta, "delta schedule (HARDY1D), defaults to --eps");
  sharp->add_option("--l", c.l, "HARDY1D exponent, 1 < l <= p (default p)");

  CLI::App* figure1 = app.add_subcommand("figure1", "H_p curve with an r_p marker row");
  add_common(figure1, c, true);
  figure1->add_option("--r-max", c.r_max, "Curve end (default 15)");
  figure1->add_option("--points", c.points, "Samples on (0, r-max] (default 1500)");

  CLI::App* proofcheck = app.add_subcommand("proofcheck", "Elementary lemmas and supersolution residuals");
  add_common(proofcheck, c, true);
  proofcheck->add_option("--seed", c.seed, "Sampling seed")->capture_default_str();
  proofcheck->add_option("--samples", c.samples, "Random samples per elementary check")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  c.command = chosen->get_name();
  if (chosen == figure1) {
    if (figure1->count("--r-max") == 0) c.r_max = 15.0;
    if (figure1->count("--points") == 0) c.points = 1500;
  }
  const bool np_given = chosen->count("--N") > 0 || chosen->count("--p") > 0;

  Envelope env;
  bool pass = false;
  try {
    if (!(c.tol > 0.0)) throw UsageError("--tol must be > 0");
    if (chosen == constants) pass = cmd_constants(c, env);
    else if (chosen == weights) pass = cmd_weights(c, env);
    else if (chosen == rp) pass = cmd_rp(c, env);
    else if (chosen == rp_scan) pass = cmd_rp_scan(c, env);
    else if (chosen == verify_cmd) pass = cmd_verify(c, env, np_given);
    else if (chosen == sharp) pass = cmd_sharpness(c, env);
    else if (chosen == figure1) pass = cmd_figure1(c, env);
    else pass = cmd_proofcheck(c, env);
  } catch (const HypothesisError& e) {
    env = error_envelope(c, "hypothesis", e.predicate(), e.what());
    err << "hypothesis violated: " << e.what() << "\n";
    try {
      if (c.output.empty()) {
        report::emit(env, c.format == "json" ? report::Format::Json : report::Format::Csv, out);
      } else {
        write(env, c);
      }
    } catch (const std::exception& io) {
      err << io.what() << "\n";
    }
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (c.output.empty()) {
      report::emit(env, c.format == "json" ? report::Format::Json : report::Format::Csv, out);
    } else {
      write(env, c);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (!c.golden.empty()) {
    try {
      const report::GoldenDiff diff = report::compare_golden(c.golden, env, c.rel_tol);
      for (const auto& d : diff.entries) err << "golden: " << d << "\n";
      if (!diff.ok()) return 1;
    } catch (const std::exception& e) {
      err << "golden: " << e.what() << "\n";
      return 2;
    }
  }
  return pass ? 0 : 1;
}

}  // namespace hypineq::cli
