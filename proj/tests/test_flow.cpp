#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilmin/flow.hpp"
#include "test_util.hpp"

using namespace nilmin;
using nilmin_test::catalog_bracket;
using nilmin_test::h11_example;
using nilmin_test::pp;

TEST_CASE("soliton residual: exact solitons sit at zero") {
  CHECK(soliton_residual(to_flow(catalog_bracket("h7", {}))) < 1e-12);
  CHECK(soliton_residual(to_flow(h11_example(Rat(0)))) < 1e-12);
  CHECK(soliton_residual(to_flow(h11_example(Rat(1)))) < 1e-12);
  CHECK(soliton_residual(to_flow(h11_example(Rat(2)))) > 1e-3);
  CHECK_THROWS(soliton_residual(FlowBracket(6)));
}

TEST_CASE("residual is scale invariant") {
  FlowBracket mu = to_flow(h11_example(Rat(2)));
  FlowBracket scaled = mu;
  for (auto& v : scaled.c) v *= 2.0;
  CHECK(soliton_residual(mu) ==
        doctest::Approx(soliton_residual(scaled)).epsilon(1e-12));
}

TEST_CASE("h7 converges at step 0") {
  FlowOpts opts;
  FlowResult res = run_flow(to_flow(catalog_bracket("h7", {})), opts);
  CHECK(res.converged);
  CHECK(res.steps == 0);
}

TEST_CASE("feasible h2 instance converges; h26+ degenerates instead") {
  FlowOpts opts;
  opts.max_steps = 60000;
  FlowResult res = run_flow(
      to_flow(catalog_bracket("h2", pp({{"s", "1"}, {"t", "0"}}))), opts);
  CHECK(res.converged);
  CHECK_FALSE(res.degenerated);
  CHECK(res.final_residual < opts.tol);

  // The h26+ trajectory drives the residual down by leaving the orbit: one
  // weight component dies and the limit is a soliton of a different algebra.
  FlowOpts short_opts;
  short_opts.max_steps = 20000;
  FlowResult r26 = run_flow(
      to_flow(catalog_bracket("h26plus", pp({{"sign", "1"}}))), short_opts);
  CHECK_FALSE(r26.converged);
  CHECK(r26.degenerated);
  CHECK(r26.min_component_ratio < 1e-3);
  CHECK_FALSE(r26.blew_up);
}

TEST_CASE("residual is non-increasing along the normalized flow") {
  FlowOpts opts;
  opts.max_steps = 20000;
  FlowResult res = run_flow(
      to_flow(catalog_bracket("h5b", pp({{"s", "1"}, {"t", "1"}}))), opts);
  for (std::size_t i = 1; i < res.trajectory.size(); ++i)
    CHECK(res.trajectory[i].residual <=
          res.trajectory[i - 1].residual + 1e-8);
}

TEST_CASE("scaled initial data follows the same trajectory in rescaled time") {
  // mu' = r mu evolves like mu with time compressed by r^2; with dt' = dt/r^2
  // the sampled residuals coincide.
  FlowBracket mu = to_flow(catalog_bracket("h6", {}));
  FlowBracket mu2 = mu;
  for (auto& v : mu2.c) v *= 2.0;

  FlowOpts a;
  a.dt = 1e-3;
  a.max_steps = 400;
  a.tol = 1e-30;  // never converge; we want the full trajectory
  a.check_every = 100;
  FlowOpts b = a;
  b.dt = a.dt / 4.0;

  FlowResult ra = run_flow(mu, a);
  FlowResult rb = run_flow(mu2, b);
  REQUIRE(ra.trajectory.size() == rb.trajectory.size());
  for (std::size_t i = 0; i < ra.trajectory.size(); ++i)
    CHECK(ra.trajectory[i].residual ==
          doctest::Approx(rb.trajectory[i].residual).epsilon(1e-9));
}

TEST_CASE("flow rejects bad inputs") {
  FlowOpts opts;
  opts.dt = 0;
  CHECK_THROWS(run_flow(to_flow(catalog_bracket("h7", {})), opts));
}
