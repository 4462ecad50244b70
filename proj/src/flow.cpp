#include "nilmin/flow.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace nilmin {

namespace {

double inner(const FlowBracket& x, const FlowBracket& y) {
  double s = 0.0;
  for (std::size_t t = 0; t < x.c.size(); ++t) s += x.c[t] * y.c[t];
  return s;
}

// Ricci operator of the canonical metric (dense, double).
void ricci_dense(const FlowBracket& mu, std::vector<double>* r) {
  const int d = mu.dim;
  r->assign(static_cast<std::size_t>(d) * d, 0.0);
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) {
      double s1 = 0.0, s2 = 0.0;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          s1 += mu.at(a, i, j) * mu.at(b, i, j);
          s2 += mu.at(i, j, a) * mu.at(i, j, b);
        }
      double v = 0.25 * s2 - 0.5 * s1;
      (*r)[a * d + b] = v;
      (*r)[b * d + a] = v;
    }
  // complexified part: ric_c = (R - JRJ)/2 with (JRJ)_ab = s_/s_ R_(sig a, sig b)
  std::vector<double> rc(static_cast<std::size_t>(d) * d, 0.0);
  auto sig = [](int a) { return a % 2 == 0 ? a + 1 : a - 1; };
  auto sgn_of = [](int a) { return a % 2 == 0 ? 1.0 : -1.0; };
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      double jrj = sgn_of(sig(a)) * sgn_of(b) * (*r)[sig(a) * d + sig(b)];
      rc[a * d + b] = 0.5 * ((*r)[a * d + b] - jrj);
    }
  *r = std::move(rc);
}

// pi(A) mu with A symmetric dense.
void pi_dense(const std::vector<double>& a, const FlowBracket& mu,
              FlowBracket* out) {
  const int d = mu.dim;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        double v = 0.0;
        for (int l = 0; l < d; ++l) {
          v += a[k * d + l] * mu.at(i, j, l);
          v -= a[l * d + i] * mu.at(l, j, k);
          v -= a[l * d + j] * mu.at(i, l, k);
        }
        out->at(i, j, k) = v;
      }
}

void derivative(const FlowBracket& mu, FlowBracket* out,
                std::vector<double>* scratch) {
  ricci_dense(mu, scratch);
  pi_dense(*scratch, mu, out);
  for (auto& v : out->c) v = -v;
}

struct Residual {
  double res, cstar;
};

Residual residual_of(const FlowBracket& mu, std::vector<double>* scratch,
                     FlowBracket* p) {
  ricci_dense(mu, scratch);
  pi_dense(*scratch, mu, p);
  double nn = inner(mu, mu);
  double cstar = -inner(*p, mu) / nn;
  double num = 0.0;
  for (std::size_t t = 0; t < mu.c.size(); ++t) {
    double v = p->c[t] + cstar * mu.c[t];
    num += v * v;
  }
  return {std::sqrt(num) / (nn * std::sqrt(nn)), cstar};
}

// Flat tensor indices of the initial bracket grouped by projected weight;
// used to detect trajectories that leave the orbit (a component norm decaying
// to zero means the limit is a degeneration, not a soliton of the input).
std::vector<std::vector<std::size_t>> weight_components(
    const FlowBracket& mu) {
  const int d = mu.dim, n = d / 2;
  std::map<std::vector<int>, std::vector<std::size_t>> groups;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        if (mu.at(i, j, k) == 0.0) continue;
        std::vector<int> w(n, 0);
        w[k / 2] += 1;
        w[i / 2] -= 1;
        w[j / 2] -= 1;
        groups[w].push_back((static_cast<std::size_t>(i) * d + j) * d + k);
      }
  std::vector<std::vector<std::size_t>> out;
  for (auto& [w, idx] : groups) {
    (void)w;
    out.push_back(std::move(idx));
  }
  return out;
}

double component_norm(const FlowBracket& mu,
                      const std::vector<std::size_t>& idx) {
  double s = 0.0;
  for (std::size_t t : idx) s += mu.c[t] * mu.c[t];
  return std::sqrt(s);
}

}  // namespace

double FlowBracket::norm() const {
  double s = 0.0;
  for (double v : c) s += v * v;
  return std::sqrt(s);
}

FlowBracket to_flow(const LieBracket& mu) {
  FlowBracket f(mu.dim);
  for (const auto& [key, c] : mu.entries) {
    double v = c.to_double();
    f.at(key[0] - 1, key[1] - 1, key[2] - 1) = v;
    f.at(key[1] - 1, key[0] - 1, key[2] - 1) = -v;
  }
  return f;
}

double soliton_residual(const FlowBracket& mu) {
  if (mu.norm() == 0.0)
    throw std::invalid_argument("soliton_residual: zero bracket");
  std::vector<double> scratch;
  FlowBracket p(mu.dim);
  return residual_of(mu, &scratch, &p).res;
}

double soliton_c_estimate(const FlowBracket& mu) {
  std::vector<double> scratch;
  FlowBracket p(mu.dim);
  return residual_of(mu, &scratch, &p).cstar;
}

FlowResult run_flow(const FlowBracket& mu0, const FlowOpts& opts,
                    const std::function<void(const FlowSample&)>& sink) {
  if (opts.dt <= 0) throw std::invalid_argument("run_flow: dt <= 0");
  FlowResult out;
  FlowBracket mu = mu0;
  const double n0 = mu.norm();
  if (n0 == 0.0) throw std::invalid_argument("run_flow: zero bracket");

  std::vector<double> scratch;
  FlowBracket k1(mu.dim), k2(mu.dim), k3(mu.dim), k4(mu.dim), tmp(mu.dim);
  FlowBracket presid(mu.dim);

  auto components = weight_components(mu);
  std::vector<double> comp0(components.size());
  for (std::size_t i = 0; i < components.size(); ++i)
    comp0[i] = component_norm(mu, components[i]);

  double time = 0.0;
  // returns 1 on genuine convergence, -1 on degeneration, 0 to continue
  auto check = [&](long step) {
    Residual r = residual_of(mu, &scratch, &presid);
    double min_ratio = 1.0;
    for (std::size_t i = 0; i < components.size(); ++i) {
      double ratio = component_norm(mu, components[i]) / comp0[i];
      if (ratio < min_ratio) min_ratio = ratio;
    }
    FlowSample s{step, time, mu.norm(), r.res, r.cstar, min_ratio};
    out.trajectory.push_back(s);
    if (sink) sink(s);
    out.final_residual = r.res;
    out.c_estimate = r.cstar;
    out.min_component_ratio = min_ratio;
    if (min_ratio < opts.degeneracy_ratio) return -1;
    return r.res < opts.tol ? 1 : 0;
  };

  if (int v = check(0); v != 0) {
    out.converged = v > 0;
    out.degenerated = v < 0;
    out.steps = 0;
    return out;
  }

  for (long step = 1; step <= opts.max_steps; ++step) {
    derivative(mu, &k1, &scratch);
    for (std::size_t t = 0; t < mu.c.size(); ++t)
      tmp.c[t] = mu.c[t] + 0.5 * opts.dt * k1.c[t];
    derivative(tmp, &k2, &scratch);
    for (std::size_t t = 0; t < mu.c.size(); ++t)
      tmp.c[t] = mu.c[t] + 0.5 * opts.dt * k2.c[t];
    derivative(tmp, &k3, &scratch);
    for (std::size_t t = 0; t < mu.c.size(); ++t)
      tmp.c[t] = mu.c[t] + opts.dt * k3.c[t];
    derivative(tmp, &k4, &scratch);
    for (std::size_t t = 0; t < mu.c.size(); ++t)
      mu.c[t] += opts.dt / 6.0 * (k1.c[t] + 2 * k2.c[t] + 2 * k3.c[t] +
                                  k4.c[t]);
    time += opts.dt;
    double nm = mu.norm();
    if (!std::isfinite(nm) || nm > 1e12 || nm == 0.0) {
      out.blew_up = true;
      out.steps = step;
      return out;
    }
    if (opts.normalize) {
      double f = n0 / nm;
      for (auto& v : mu.c) v *= f;
    }
    if (step % opts.check_every == 0 || step == opts.max_steps) {
      if (int v = check(step); v != 0) {
        out.converged = v > 0;
        out.degenerated = v < 0;
        out.steps = step;
        return out;
      }
    }
  }
  out.steps = opts.max_steps;
  return out;
}

}  // namespace nilmin
