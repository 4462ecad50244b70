// Numerical bracket flow d mu/dt = -pi(ric_c(mu)) mu in double precision,
// with optional norm renormalization, used to cross-validate the exact
// criterion: trajectories of feasible instances converge to soliton brackets
// (residual -> 0), infeasible ones do not.

#pragma once

#include <functional>
#include <vector>

#include "nilmin/bracket.hpp"

namespace nilmin {

struct FlowBracket {
  int dim = 0;
  std::vector<double> c;  // dense dim^3; antisymmetric in the first two slots

  explicit FlowBracket(int d = 0)
      : dim(d), c(static_cast<std::size_t>(d) * d * d, 0.0) {}

  double& at(int i, int j, int k) {
    return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  }
  double at(int i, int j, int k) const {
    return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  }
  double norm() const;  // tensor norm over ordered pairs
};

FlowBracket to_flow(const LieBracket& mu);

// Scale-invariant soliton defect |pi(ric_c) mu + c* mu| / |mu|^3 with
// c* = -<pi(ric_c) mu, mu> / <mu, mu>.  (The defect is cubic in mu, so the
// cube normalizes it.)
double soliton_residual(const FlowBracket& mu);
double soliton_c_estimate(const FlowBracket& mu);

struct FlowOpts {
  double dt = 1e-3;
  long max_steps = 200000;
  double tol = 1e-6;
  bool normalize = true;
  long check_every = 10;  // residual check cadence (also records trajectory)
  // A weight component of the initial bracket whose norm falls below this
  // fraction of its initial value marks the trajectory as degenerating: the
  // normalized flow is leaving the orbit, and its limit soliton belongs to a
  // different algebra.  Such runs do not count as converged.
  double degeneracy_ratio = 1e-3;
};

struct FlowSample {
  long step;
  double time, norm, residual, c_estimate, min_component_ratio;
};

struct FlowResult {
  bool converged = false;    // residual < tol at a non-degenerate point
  bool degenerated = false;  // residual dropped but a weight component died
  bool blew_up = false;
  double final_residual = 0.0;
  double c_estimate = 0.0;
  double min_component_ratio = 1.0;
  long steps = 0;
  std::vector<FlowSample> trajectory;
};

FlowResult run_flow(const FlowBracket& mu0, const FlowOpts& opts,
                    const std::function<void(const FlowSample&)>& sink = {});

}  // namespace nilmin
