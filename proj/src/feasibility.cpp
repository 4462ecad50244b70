#include "nilmin/feasibility.hpp"

#include <algorithm>
#include <sstream>

namespace nilmin {

const char* feas_status_name(FeasStatus s) {
  switch (s) {
    case FeasStatus::FeasibleLambdaPositive: return "FeasibleLambdaPositive";
    case FeasStatus::FeasibleLambdaZero: return "FeasibleLambdaZero";
    case FeasStatus::Infeasible: return "Infeasible";
  }
  return "?";
}

namespace {

// ---------------------------------------------------------------------------
// Two-phase exact simplex: maximize c^T x s.t. A x = b, x >= 0.
// ---------------------------------------------------------------------------

struct SimplexOut {
  enum Status { INFEASIBLE, OPTIMAL, UNBOUNDED } status = INFEASIBLE;
  std::vector<Rat> x;    // basic feasible point (length n)
  Rat obj;
  std::vector<Rat> ray;  // improving ray on UNBOUNDED (length n)
};

class Simplex {
 public:
  Simplex(std::vector<std::vector<Rat>> a, std::vector<Rat> b,
          std::vector<Rat> c)
      : m_(static_cast<int>(a.size())),
        n_(static_cast<int>(c.size())),
        t_(std::move(a)),
        rhs_(std::move(b)),
        cost_(std::move(c)) {
    for (int i = 0; i < m_; ++i)
      if (sgn(rhs_[i]) < 0) {
        for (auto& v : t_[i]) v = -v;
        rhs_[i] = -rhs_[i];
      }
    // append artificial columns
    for (int i = 0; i < m_; ++i) {
      for (int r = 0; r < m_; ++r) t_[r].push_back(Rat(r == i ? 1 : 0));
      basis_.push_back(n_ + i);
    }
  }

  SimplexOut run() {
    // Phase 1: maximize -(sum of artificials).
    std::vector<Rat> d(n_ + m_, Rat(0));
    for (int j = n_; j < n_ + m_; ++j) d[j] = Rat(-1);
    pivot_loop(d, /*allow_artificial=*/true);
    Rat phase1 = objective(d);
    SimplexOut out;
    if (sgn(phase1) < 0) {
      out.status = SimplexOut::INFEASIBLE;
      return out;
    }
    purge_artificials();

    // Phase 2.
    std::vector<Rat> d2(n_ + m_, Rat(0));
    for (int j = 0; j < n_; ++j) d2[j] = cost_[j];
    bool unbounded = !pivot_loop(d2, /*allow_artificial=*/false);
    out.x.assign(n_, Rat(0));
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_) out.x[basis_[i]] = rhs_[i];
    out.obj = objective(d2);
    if (unbounded) {
      out.status = SimplexOut::UNBOUNDED;
      out.ray.assign(n_, Rat(0));
      out.ray[ray_col_] = Rat(1);
      for (int i = 0; i < m_; ++i)
        if (basis_[i] < n_) out.ray[basis_[i]] = -t_[i][ray_col_];
    } else {
      out.status = SimplexOut::OPTIMAL;
    }
    return out;
  }

 private:
  Rat objective(const std::vector<Rat>& d) const {
    Rat v(0);
    for (int i = 0; i < m_; ++i) v += d[basis_[i]] * rhs_[i];
    return v;
  }

  // Reduced cost of column j under price vector from d.
  Rat reduced_cost(const std::vector<Rat>& d, int j) const {
    Rat rc = d[j];
    for (int i = 0; i < m_; ++i) rc -= d[basis_[i]] * t_[i][j];
    return rc;
  }

  // Returns false if unbounded (ray_col_ set).
  bool pivot_loop(const std::vector<Rat>& d, bool allow_artificial) {
    for (;;) {
      int enter = -1;
      int limit = allow_artificial ? n_ + m_ : n_;
      for (int j = 0; j < limit; ++j) {
        if (std::find(basis_.begin(), basis_.end(), j) != basis_.end())
          continue;
        if (sgn(reduced_cost(d, j)) > 0) {
          enter = j;  // Bland: smallest index
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m_; ++i) {
        if (sgn(t_[i][enter]) <= 0) continue;
        Rat ratio = rhs_[i] / t_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) {
        ray_col_ = enter;
        return false;
      }
      pivot(leave, enter);
    }
  }

  void pivot(int row, int col) {
    Rat p = t_[row][col];
    for (auto& v : t_[row]) v /= p;
    rhs_[row] /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == row) continue;
      Rat f = t_[i][col];
      if (sgn(f) == 0) continue;
      for (int j = 0; j < n_ + m_; ++j) t_[i][j] -= f * t_[row][j];
      rhs_[i] -= f * rhs_[row];
    }
    basis_[row] = col;
  }

  // After phase 1: pivot artificials out of the basis or drop redundant rows.
  void purge_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      int col = -1;
      for (int j = 0; j < n_; ++j)
        if (sgn(t_[i][j]) != 0) {
          col = j;
          break;
        }
      if (col >= 0) {
        pivot(i, col);
      } else {
        // redundant constraint; remove the row
        t_.erase(t_.begin() + i);
        rhs_.erase(rhs_.begin() + i);
        basis_.erase(basis_.begin() + i);
        --m_;
        --i;
      }
    }
  }

  int m_, n_;
  std::vector<std::vector<Rat>> t_;
  std::vector<Rat> rhs_;
  std::vector<Rat> cost_;
  std::vector<int> basis_;
  int ray_col_ = -1;
};

// ---------------------------------------------------------------------------
// RREF of [U | b] with an identity block tracking row operations, giving
// either the affine solution form or a Farkas certificate.
// ---------------------------------------------------------------------------

struct RrefOut {
  bool consistent = true;
  AffineForm form;            // valid when consistent
  std::vector<Rat> farkas;    // valid when inconsistent
};

RrefOut rref_affine(const std::vector<std::vector<long>>& u) {
  int r = static_cast<int>(u.size());
  // rows: [U | I | b]
  std::vector<std::vector<Rat>> m(r, std::vector<Rat>(2 * r + 1, Rat(0)));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) m[i][j] = Rat(u[i][j]);
    m[i][r + i] = Rat(1);
    m[i][2 * r] = Rat(1);
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < r && row < r; ++col) {
    int p = -1;
    for (int i = row; i < r; ++i)
      if (sgn(m[i][col]) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    Rat pv = m[row][col];
    for (auto& v : m[row]) v /= pv;
    for (int i = 0; i < r; ++i) {
      if (i == row) continue;
      Rat f = m[i][col];
      if (sgn(f) == 0) continue;
      for (int j = 0; j < 2 * r + 1; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  RrefOut out;
  for (int i = row; i < r; ++i) {
    if (sgn(m[i][2 * r]) != 0) {
      out.consistent = false;
      Rat scale = m[i][2 * r];
      out.farkas.assign(r, Rat(0));
      for (int j = 0; j < r; ++j) out.farkas[j] = m[i][r + j] / scale;
      return out;
    }
  }
  std::vector<bool> is_pivot(r, false);
  for (int c : pivot_col) is_pivot[c] = true;
  AffineForm& f = out.form;
  f.constant.assign(r, Rat(0));
  for (int c = 0; c < r; ++c)
    if (!is_pivot[c]) f.free_cols.push_back(c);
  for (int t = 0; t < static_cast<int>(pivot_col.size()); ++t)
    f.constant[pivot_col[t]] = m[t][2 * r];
  for (int fc : f.free_cols) {
    std::vector<Rat> dir(r, Rat(0));
    dir[fc] = Rat(1);
    for (int t = 0; t < static_cast<int>(pivot_col.size()); ++t)
      dir[pivot_col[t]] = -m[t][fc];
    f.directions.push_back(std::move(dir));
  }
  return out;
}

std::string param_name(int idx) {
  if (idx < 26) return std::string(1, static_cast<char>('a' + idx));
  return "p" + std::to_string(idx);
}

// max of epsilon over {U y + (U 1) eps = lambda [1], y >= 0, eps >= 0},
// optionally capped by eps <= 1 (used for lambda = 0).
SimplexOut max_min_coordinate(const std::vector<std::vector<long>>& u,
                              long lambda, bool cap_eps) {
  int r = static_cast<int>(u.size());
  int n = r + 1 + (cap_eps ? 1 : 0);
  int rows = r + (cap_eps ? 1 : 0);
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(n, Rat(0)));
  std::vector<Rat> b(rows, Rat(0));
  for (int i = 0; i < r; ++i) {
    long rowsum = 0;
    for (int j = 0; j < r; ++j) {
      a[i][j] = Rat(u[i][j]);
      rowsum += u[i][j];
    }
    a[i][r] = Rat(rowsum);
    b[i] = Rat(lambda);
  }
  if (cap_eps) {
    a[r][r] = Rat(1);
    a[r][r + 1] = Rat(1);  // slack
    b[r] = Rat(1);
  }
  std::vector<Rat> c(n, Rat(0));
  c[r] = Rat(1);
  return Simplex(a, b, c).run();
}

std::vector<Rat> witness_from(const SimplexOut& s, int r) {
  // x = y + eps * [1]
  Rat eps = s.x[r];
  if (s.status == SimplexOut::UNBOUNDED && sgn(s.ray[r]) > 0 &&
      sgn(eps) <= 0) {
    // walk the ray until eps = 1
    Rat t = (Rat(1) - eps) / s.ray[r];
    std::vector<Rat> w(r, Rat(0));
    for (int i = 0; i < r; ++i) w[i] = s.x[i] + t * s.ray[i] + Rat(1);
    return w;
  }
  std::vector<Rat> w(r, Rat(0));
  for (int i = 0; i < r; ++i) w[i] = s.x[i] + eps;
  return w;
}

}  // namespace

std::string AffineForm::render() const {
  int r = static_cast<int>(constant.size());
  std::vector<std::string> coords(r);
  for (int i = 0; i < r; ++i) {
    std::ostringstream os;
    bool empty = true;
    if (sgn(constant[i]) != 0) {
      os << rat_str(constant[i]);
      empty = false;
    }
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
      const Rat& coef = directions[f][i];
      if (sgn(coef) == 0) continue;
      Rat abs_coef = abs(coef);
      if (empty) {
        if (sgn(coef) < 0) os << "-";
      } else {
        os << (sgn(coef) > 0 ? "+" : "-");
      }
      if (abs_coef != Rat(1)) os << rat_str(abs_coef) << "*";
      os << param_name(static_cast<int>(f));
      empty = false;
    }
    if (empty) os << "0";
    coords[i] = os.str();
  }
  std::string s = "(";
  for (int i = 0; i < r; ++i) {
    if (i) s += ", ";
    s += coords[i];
  }
  return s + ")";
}

FeasibilityResult solve_positive(const GramMatrix& u) {
  if (u.r < 1) throw std::invalid_argument("solve_positive: empty matrix");
  FeasibilityResult out;

  RrefOut rr = rref_affine(u.u);
  if (!rr.consistent) {
    out.farkas = rr.farkas;
  } else {
    out.solution_form = rr.form;
  }

  auto verify = [&](const std::vector<Rat>& w, long lambda) {
    for (const auto& v : w)
      if (sgn(v) <= 0) return false;
    for (int i = 0; i < u.r; ++i) {
      Rat s(0);
      for (int j = 0; j < u.r; ++j) s += Rat(u.u[i][j]) * w[j];
      if (s != Rat(lambda)) return false;
    }
    return true;
  };

  if (rr.consistent) {
    SimplexOut s1 = max_min_coordinate(u.u, 1, /*cap_eps=*/false);
    if (s1.status == SimplexOut::UNBOUNDED ||
        (s1.status == SimplexOut::OPTIMAL && sgn(s1.obj) > 0)) {
      out.status = FeasStatus::FeasibleLambdaPositive;
      out.lambda = Rat(1);
      out.witness = witness_from(s1, u.r);
      if (!verify(out.witness, 1))
        throw std::logic_error("solve_positive: witness verification failed");
      return out;
    }
  }

  SimplexOut s0 = max_min_coordinate(u.u, 0, /*cap_eps=*/true);
  if (s0.status == SimplexOut::OPTIMAL && sgn(s0.obj) > 0) {
    out.status = FeasStatus::FeasibleLambdaZero;
    out.lambda = Rat(0);
    out.witness = witness_from(s0, u.r);
    if (!verify(out.witness, 0))
      throw std::logic_error("solve_positive: witness verification failed");
    return out;
  }

  out.status = FeasStatus::Infeasible;
  return out;
}

bool gram_psd(const GramMatrix& g) {
  int r = g.r;
  std::vector<std::vector<Rat>> m(r, std::vector<Rat>(r, Rat(0)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m[i][j] = Rat(g.u[i][j]);
  std::vector<bool> done(r, false);
  for (;;) {
    int p = -1;
    for (int i = 0; i < r; ++i) {
      if (done[i]) continue;
      int s = sgn(m[i][i]);
      if (s < 0) return false;
      if (s > 0 && p < 0) p = i;
    }
    if (p < 0) {
      // remaining diagonal entries are zero; PSD requires those rows zero
      for (int i = 0; i < r; ++i) {
        if (done[i]) continue;
        for (int j = 0; j < r; ++j)
          if (!done[j] && sgn(m[i][j]) != 0) return false;
      }
      return true;
    }
    for (int i = 0; i < r; ++i) {
      if (done[i] || i == p) continue;
      Rat f = m[i][p] / m[p][p];
      if (sgn(f) == 0) continue;
      for (int j = 0; j < r; ++j)
        if (!done[j]) m[i][j] -= f * m[p][j];
    }
    done[p] = true;
  }
}

}  // namespace nilmin
