#include "nilmin/ricci.hpp"

namespace nilmin {

RicciData ricci_operator(const LieBracket& mu) {
  const int d = mu.dim;
  RicciData out;
  out.ric = Mat<QRat>(d, d);

  // Dense structure constants for the quadratic sums.
  std::vector<QRat> c(static_cast<std::size_t>(d) * d * d, QRat());
  auto at = [&](int i, int j, int k) -> QRat& {
    return c[(static_cast<std::size_t>(i) * d + j) * d + k];
  };
  for (const auto& [key, v] : mu.entries) {
    at(key[0] - 1, key[1] - 1, key[2] - 1) = v;
    at(key[1] - 1, key[0] - 1, key[2] - 1) = -v;
  }

  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) {
      QRat s1, s2;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          const QRat& x = at(a, i, j);
          if (!x.is_zero()) s1 += x * at(b, i, j);
          const QRat& y = at(i, j, a);
          if (!y.is_zero()) s2 += y * at(i, j, b);
        }
      QRat v = s2 / QRat(4) - s1 / QRat(2);
      out.ric(a, b) = v;
      out.ric(b, a) = v;
    }

  for (int a = 0; a < d; ++a) out.scal += out.ric(a, a);
  out.ric_c = out.ric;  // filled properly by ricci_complexified
  return out;
}

RicciData ricci_complexified(const LieBracket& mu) {
  RicciData out = ricci_operator(mu);
  const int d = mu.dim;
  ComplexStructure J(d);
  Mat<QRat> jm = J.matrix();
  Mat<QRat> jrj = jm * out.ric * jm;
  Mat<QRat> rc(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      rc(a, b) = (out.ric(a, b) - jrj(a, b)) / QRat(2);
  out.ric_c = rc;
  return out;
}

SolitonDecomposition soliton_decomposition(const LieBracket& mu) {
  if (mu.is_zero())
    throw std::invalid_argument(
        "soliton_decomposition: zero bracket (abelian case handled upstream)");
  RicciData rd = ricci_complexified(mu);
  LieBracket p = pi_action(rd.ric_c, mu);
  QRat nn = tensor_inner(mu, mu);
  QRat cstar = -tensor_inner(p, mu) / nn;

  // defect = pi(ric_c) mu + c* mu
  LieBracket defect = p.plus(mu.scaled(cstar));
  SolitonDecomposition out;
  out.exists = defect.is_zero();
  if (out.exists) {
    out.c = cstar;
    Mat<QRat> D = rd.ric_c;
    for (int a = 0; a < mu.dim; ++a) D(a, a) = D(a, a) - cstar;
    out.D = D;
    // D must be an exact derivation: pi(D) mu = 0.
    if (!pi_action(D, mu).is_zero())
      throw std::logic_error("soliton_decomposition: derivation check failed");
  }
  return out;
}

}  // namespace nilmin
