#include <doctest.h>

#include <cmath>

#include "hypineq/errors.hpp"
#include "hypineq/hyp_core.hpp"
#include "hypineq/rp_solver.hpp"

using namespace hypineq;

TEST_CASE("roots for N = 13, p = 4") {
  const Params prm = Params::make(13, 4.0);
  const RootResult r0 = solve_r0(prm);
  CHECK(r0.root == doctest::Approx(2.17731898496530675263).epsilon(1e-12));
  CHECK(std::abs(r0.residual) <= 1e-12);
  CHECK(std::abs(h_func(prm, r0.root)) / std::pow(std::sinh(r0.root), 2) <= 1e-12);
  const RootResult rp = solve_rp(prm);
  CHECK(rp.root == doctest::Approx(1.16833149113152694059).epsilon(1e-12));
  CHECK(std::abs(rp.residual) <= 1e-12);
  CHECK(weight_Hp(prm, rp.root) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(rp.root < r0.root);
  CHECK(rp.lo <= rp.root);
  CHECK(rp.root <= rp.hi);
}

TEST_CASE("p = 2 sentinel and hypotheses") {
  const RootResult rp = solve_rp(Params::make(5, 2.0));
  CHECK(rp.infinite);
  CHECK(std::isinf(rp.root));
  CHECK_THROWS_AS(solve_r0(Params::make(5, 2.0)), HypothesisError);
  CHECK_THROWS_AS(solve_rp(Params::make(6, 3.0)), HypothesisError);
  CHECK_THROWS_AS(solve_rp(Params::make(13, 1.5)), HypothesisError);
  CHECK_THROWS_AS(solve_r0(Params::make(3, 4.0)), HypothesisError);
  CHECK_NOTHROW(solve_rp(Params::make(7, 3.0)));
}

TEST_CASE("max admissible p") {
  CHECK(max_admissible_p(13) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(max_admissible_p(7) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("r_p scan in N is increasing with matching slopes") {
  const auto rows = rp_scan_N(3.0, 7, 30);
  REQUIRE(rows.size() == 24);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].rp > rows[i - 1].rp);
  for (const auto& row : rows) {
    CHECK(row.implicit_slope > 0.0);
    CHECK(row.fd_slope == doctest::Approx(row.implicit_slope).epsilon(0.05));
  }
}

TEST_CASE("r_p scan in p is decreasing") {
  const auto rows = rp_scan_p(13, {2.2, 2.5, 3.0, 3.5, 3.9});
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].rp < rows[i - 1].rp);
  for (const auto& row : rows) {
    CHECK(row.implicit_slope < 0.0);
    CHECK(row.fd_slope == doctest::Approx(row.implicit_slope).epsilon(0.05));
    CHECK(row.implicit_slope / row.printed_slope == doctest::Approx(12.0).epsilon(1e-12));
  }
}

TEST_CASE("real-N equation") {
  const RootResult r = solve_rp_real(13.0, 4.0);
  CHECK(r.root == doctest::Approx(1.16833149113152694059).epsilon(1e-12));
  CHECK(std::abs(rp_equation(13.0, 4.0, r.root)) <= 1e-12);
}
