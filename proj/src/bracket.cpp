#include "nilmin/bracket.hpp"

#include <sstream>

namespace nilmin {

QRat LieBracket::coeff(int i, int j, int k) const {
  if (i == j) return QRat();
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = entries.find({i, j, k});
  if (it == entries.end()) return QRat();
  return flip ? -it->second : it->second;
}

void LieBracket::set(int i, int j, int k, const QRat& c) {
  if (i == j) throw std::invalid_argument("LieBracket::set: i == j");
  QRat v = c;
  if (i > j) {
    std::swap(i, j);
    v = -v;
  }
  if (v.is_zero())
    entries.erase({i, j, k});
  else
    entries[{i, j, k}] = v;
}

void LieBracket::add(int i, int j, int k, const QRat& c) {
  if (i == j) throw std::invalid_argument("LieBracket::add: i == j");
  if (i > j) {
    add(j, i, k, -c);
    return;
  }
  set(i, j, k, coeff(i, j, k) + c);
}

std::vector<QRat> LieBracket::bracket_basis(int i, int j) const {
  std::vector<QRat> v(dim, QRat());
  for (int k = 1; k <= dim; ++k) {
    QRat c = coeff(i, j, k);
    if (!c.is_zero()) v[k - 1] = c;
  }
  return v;
}

LieBracket LieBracket::plus(const LieBracket& o) const {
  if (dim != o.dim) throw std::invalid_argument("LieBracket: dim mismatch");
  LieBracket out = *this;
  for (const auto& [key, c] : o.entries) out.add(key[0], key[1], key[2], c);
  return out;
}

LieBracket LieBracket::scaled(const QRat& s) const {
  LieBracket out(dim);
  if (s.is_zero()) return out;
  for (const auto& [key, c] : entries) out.entries[key] = c * s;
  return out;
}

// ---------------------------------------------------------------------------

Mat<QRat> ComplexStructure::matrix() const {
  Mat<QRat> j(dim, dim);
  for (int i = 0; i < dim / 2; ++i) {
    j(2 * i, 2 * i + 1) = QRat(-1);
    j(2 * i + 1, 2 * i) = QRat(1);
  }
  return j;
}

std::vector<QRat> ComplexStructure::apply(const std::vector<QRat>& x) const {
  std::vector<QRat> y(dim, QRat());
  for (int i = 0; i < dim / 2; ++i) {
    y[2 * i] = -x[2 * i + 1];
    y[2 * i + 1] = x[2 * i];
  }
  return y;
}

// ---------------------------------------------------------------------------

std::vector<QRat> evaluate(const LieBracket& mu, const std::vector<QRat>& x,
                           const std::vector<QRat>& y) {
  if (static_cast<int>(x.size()) != mu.dim ||
      static_cast<int>(y.size()) != mu.dim)
    throw std::invalid_argument("evaluate: vector length != dim");
  std::vector<QRat> z(mu.dim, QRat());
  for (const auto& [key, c] : mu.entries) {
    int i = key[0], j = key[1], k = key[2];
    QRat w = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1];
    if (!w.is_zero()) z[k - 1] += c * w;
  }
  return z;
}

namespace {

bool is_zero_vec(const std::vector<QRat>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<QRat> basis_vec(int dim, int i) {
  std::vector<QRat> v(dim, QRat());
  v[i - 1] = QRat(1);
  return v;
}

// mu(v, e_j) for a coefficient vector v.
std::vector<QRat> bracket_vec_basis(const LieBracket& mu,
                                    const std::vector<QRat>& v, int j) {
  std::vector<QRat> z(mu.dim, QRat());
  for (int i = 1; i <= mu.dim; ++i) {
    if (v[i - 1].is_zero()) continue;
    for (int k = 1; k <= mu.dim; ++k) {
      QRat c = mu.coeff(i, j, k);
      if (!c.is_zero()) z[k - 1] += v[i - 1] * c;
    }
  }
  return z;
}

}  // namespace

ValidationReport validate(const LieBracket& mu) {
  ValidationReport rep;
  const int d = mu.dim;

  // Jacobi on basis triples.
  for (int a = 1; a <= d && rep.jacobi; ++a)
    for (int b = a + 1; b <= d && rep.jacobi; ++b)
      for (int c = b + 1; c <= d && rep.jacobi; ++c) {
        std::vector<QRat> s(d, QRat());
        auto acc = [&](int i, int j, int k) {
          // [[e_i, e_j], e_k]
          auto v = mu.bracket_basis(i, j);
          auto w = bracket_vec_basis(mu, v, k);
          for (int t = 0; t < d; ++t) s[t] += w[t];
        };
        acc(a, b, c);
        acc(b, c, a);
        acc(c, a, b);
        if (!is_zero_vec(s)) {
          rep.jacobi = false;
          rep.jacobi_failure = {a, b, c};
        }
      }

  // Nilpotency: lower central series g^(1) = g, g^(m+1) = [g, g^(m)];
  // step = largest m with g^(m) != 0 (zero bracket: step 1).
  {
    EchelonBasis<QRat> g2;
    for (const auto& [key, c] : mu.entries) {
      (void)c;
      g2.add(mu.bracket_basis(key[0], key[1]));
    }
    std::vector<std::vector<QRat>> layer = g2.rows;
    int m = 1;
    while (!layer.empty() && m <= d + 2) {
      ++m;  // layer spans g^(m)
      EchelonBasis<QRat> next;
      for (const auto& v : layer)
        for (int j = 1; j <= d; ++j) {
          auto w = bracket_vec_basis(mu, v, j);
          if (!is_zero_vec(w)) next.add(w);
        }
      layer = next.rows;
    }
    if (!layer.empty()) {
      rep.nilpotent = false;
    } else {
      rep.step = m;
    }
  }

  // Integrability and abelian-ness of the standard J on basis pairs.
  ComplexStructure J(d);
  rep.abelian_complex = true;
  for (int a = 1; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b) {
      auto Ja = J.apply(basis_vec(d, a));
      auto Jb = J.apply(basis_vec(d, b));
      auto lhs = evaluate(mu, Ja, Jb);
      auto m_ab = mu.bracket_basis(a, b);
      if (!(lhs == m_ab)) rep.abelian_complex = false;
      auto t1 = J.apply(evaluate(mu, Ja, basis_vec(d, b)));
      auto t2 = J.apply(evaluate(mu, basis_vec(d, a), Jb));
      std::vector<QRat> rhs(d, QRat());
      for (int t = 0; t < d; ++t) rhs[t] = m_ab[t] + t1[t] + t2[t];
      if (!(lhs == rhs) && rep.integrable) {
        rep.integrable = false;
        rep.integrability_failure = {a, b};
      }
    }
  return rep;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << "jacobi=" << (jacobi ? "true" : "false");
  if (!jacobi && jacobi_failure)
    os << " (first failing triple " << (*jacobi_failure)[0] << ","
       << (*jacobi_failure)[1] << "," << (*jacobi_failure)[2] << ")";
  os << " nilpotent=" << (nilpotent ? "true" : "false");
  if (step) os << " step=" << *step;
  os << " integrable=" << (integrable ? "true" : "false");
  if (!integrable && integrability_failure)
    os << " (first failing pair " << (*integrability_failure)[0] << ","
       << (*integrability_failure)[1] << ")";
  os << " abelian_complex=" << (abelian_complex ? "true" : "false");
  return os.str();
}

LieBracket act(const Mat<QRat>& g, const LieBracket& mu) {
  const int d = mu.dim;
  if (g.r != d || g.c != d)
    throw std::invalid_argument("act: matrix dimension mismatch");
  ComplexStructure J(d);
  Mat<QRat> jm = J.matrix();
  if (!(g * jm == jm * g))
    throw std::invalid_argument("act: g does not commute with J");
  auto ginv = g.inverse();
  if (!ginv) throw std::invalid_argument("act: g is singular");

  LieBracket out(d);
  // columns of g^-1 are g^-1 e_i
  std::vector<std::vector<QRat>> cols(d, std::vector<QRat>(d, QRat()));
  for (int i = 0; i < d; ++i)
    for (int r = 0; r < d; ++r) cols[i][r] = (*ginv)(r, i);
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      auto w = evaluate(mu, cols[i - 1], cols[j - 1]);
      if (is_zero_vec(w)) continue;
      auto z = g.mul(w);
      for (int k = 1; k <= d; ++k)
        if (!z[k - 1].is_zero()) out.set(i, j, k, z[k - 1]);
    }
  return out;
}

LieBracket pi_action(const Mat<QRat>& alpha, const LieBracket& mu) {
  const int d = mu.dim;
  if (alpha.r != d || alpha.c != d)
    throw std::invalid_argument("pi_action: matrix dimension mismatch");
  LieBracket out(d);
  std::vector<std::vector<QRat>> acol(d, std::vector<QRat>(d, QRat()));
  for (int i = 0; i < d; ++i)
    for (int r = 0; r < d; ++r) acol[i][r] = alpha(r, i);
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      auto m_ij = mu.bracket_basis(i, j);
      auto t0 = alpha.mul(m_ij);
      auto t1 = evaluate(mu, acol[i - 1], basis_vec(d, j));
      auto t2 = evaluate(mu, basis_vec(d, i), acol[j - 1]);
      for (int k = 1; k <= d; ++k) {
        QRat v = t0[k - 1] - t1[k - 1] - t2[k - 1];
        if (!v.is_zero()) out.set(i, j, k, v);
      }
    }
  return out;
}

QRat tensor_inner(const LieBracket& mu, const LieBracket& la) {
  if (mu.dim != la.dim)
    throw std::invalid_argument("tensor_inner: dim mismatch");
  QRat s;
  for (const auto& [key, c] : mu.entries) {
    QRat lc = la.coeff(key[0], key[1], key[2]);
    if (!lc.is_zero()) s += c * lc;
  }
  return s * QRat(2);  // ordered pairs count twice
}

Mat<QRat> realify_complex_matrix(
    const std::vector<std::vector<QComplex>>& g) {
  int n = static_cast<int>(g.size());
  Mat<QRat> m(2 * n, 2 * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const QComplex& z = g[p][q];
      m(2 * p, 2 * q) = z.re;
      m(2 * p, 2 * q + 1) = -z.im;
      m(2 * p + 1, 2 * q) = z.im;
      m(2 * p + 1, 2 * q + 1) = z.re;
    }
  return m;
}

}  // namespace nilmin
