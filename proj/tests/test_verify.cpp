#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "hypineq/errors.hpp"
#include "hypineq/parallel.hpp"
#include "hypineq/verify.hpp"

using namespace hypineq;

TEST_CASE("kind tags") {
  CHECK(parse_kind("thm25") == InequalityKind::THM25);
  CHECK(parse_kind("Hardy1D") == InequalityKind::HARDY1D);
  CHECK_FALSE(parse_kind("THM99").has_value());
  for (InequalityKind k : all_kinds()) CHECK(parse_kind(kind_tag(k)) == k);
  CHECK(is_halfspace_kind(InequalityKind::THM32));
  CHECK_FALSE(is_halfspace_kind(InequalityKind::PGAP));
}

TEST_CASE("hypothesis checks") {
  CHECK_THROWS_AS(check_hypotheses(InequalityKind::THM25, Params::make(3, 3.0)), HypothesisError);
  CHECK_THROWS_AS(check_hypotheses(InequalityKind::THM72, Params::make(6, 3.0)), HypothesisError);
  CHECK_NOTHROW(check_hypotheses(InequalityKind::THM25, Params::make(13, 4.0)));
  CHECK_NOTHROW(check_hypotheses(InequalityKind::PGAP, Params::make(2, 1.5)));
  try {
    check_hypotheses(InequalityKind::THM25, Params::make(3, 3.0));
  } catch (const HypothesisError& e) {
    CHECK_FALSE(e.predicate().empty());
  }
}

TEST_CASE("single radial reports") {
  const RadialTestFunction u = make_bump(0.5, 2.5);
  for (InequalityKind k : {InequalityKind::PGAP, InequalityKind::PROP11, InequalityKind::THM25,
                           InequalityKind::COR27, InequalityKind::THM29}) {
    const InequalityReport rep = verify(k, Params::make(13, 4.0), u);
    CHECK(rep.pass);
    CHECK(rep.slack >= 0.0);
    CHECK(rep.lhs >= rep.rhs);
  }
  // support inside B(x0, r_p)
  CHECK(verify(InequalityKind::THM72, Params::make(13, 4.0), make_bump(0.1, 1.1)).pass);
  CHECK_THROWS_AS(verify(InequalityKind::THM72, Params::make(13, 4.0), u), HypothesisError);
  const InequalityReport h = verify(InequalityKind::HARDY1D, Params::make(3, 2.5), u, {1e-10, 2.0});
  CHECK(h.pass);
  CHECK(h.l == 2.0);
}

TEST_CASE("half-space forms agree") {
  const Params prm = Params::make(3, 2.0);
  const HalfSpaceFunction u = make_separable(3, -0.5, 1.0, 0.8, 0.2, 0.9);
  const InequalityReport a = verify(InequalityKind::THM23, prm, u);
  const InequalityReport b = verify(InequalityKind::THM32, prm, u);
  CHECK(a.pass);
  CHECK(b.pass);
  CHECK(a.lhs == doctest::Approx(b.lhs).epsilon(1e-8));
  CHECK(a.rhs == doctest::Approx(b.rhs).epsilon(1e-8));
}

TEST_CASE("batteries are deterministic across worker counts") {
  BatteryOptions opt;
  opt.trials = 12;
  opt.seed = 42;
  setenv("HYPINEQ_WORKERS", "1", 1);
  const auto one = run_battery(InequalityKind::PGAP, Params::make(3, 2.0), opt);
  setenv("HYPINEQ_WORKERS", "4", 1);
  const auto four = run_battery(InequalityKind::PGAP, Params::make(3, 2.0), opt);
  unsetenv("HYPINEQ_WORKERS");
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].test_function_id == four[i].test_function_id);
    CHECK(one[i].lhs == four[i].lhs);
    CHECK(one[i].rhs == four[i].rhs);
    CHECK(one[i].pass);
  }
}

TEST_CASE("proof-step checks") {
  CHECK(check_pconvexity(3.0, 2.0, -1.0) >= 0.0);
  CHECK(check_pconvexity(1.5, 0.0, -4.0) >= 0.0);
  const FtildeResult bad = check_Ftilde(Params::make(6, 3.0), ftilde_grid());
  CHECK(bad.min < 0.0);
  const FtildeResult good = check_Ftilde(Params::make(13, 4.0), ftilde_grid());
  CHECK(good.min >= 0.0);
  for (double r : {0.1, 1.0, 5.0}) {
    const SupersolutionResidual s = supersolution_residual(Params::make(13, 4.0), r, 1e-3 * r);
    CHECK(s.identity < 1e-6);
    CHECK(s.derivative < 1e-6);
  }
}

TEST_CASE("sharpness quotients approach the constant") {
  const auto pts = sharpness_scan(InequalityKind::PGAP, Params::make(3, 2.0),
                                  {{1e-1, 1e-1}, {1e-2, 1e-2}, {1e-3, 1e-3}});
  REQUIRE(pts.size() == 3);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(pts[i].within);
    if (i > 0) CHECK(pts[i].quotient < pts[i - 1].quotient);
  }
  CHECK(hardy1d_tail_constant(2.0, 2.0) == doctest::Approx(1.0));
}
