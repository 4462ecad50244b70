// Test-only curvature oracle: Levi-Civita connection from the Koszul formula
// on structure constants, full curvature tensor, and the Ricci matrix, all in
// exact arithmetic.  Deliberately independent of the closed form used by
// src/ricci.cpp; the two must agree on every valid bracket.

#pragma once

#include <vector>

#include "nilmin/bracket.hpp"
#include "nilmin/linalg.hpp"

namespace nilmin_test {

inline nilmin::Mat<nilmin::QRat> ricci_koszul(const nilmin::LieBracket& mu) {
  using nilmin::QRat;
  const int d = mu.dim;
  auto C = [&](int a, int b, int c) { return mu.coeff(a + 1, b + 1, c + 1); };

  // gamma(a,b,c) = <nabla_{e_a} e_b, e_c>
  //             = (<[a,b],c> - <[b,c],a> + <[c,a],b>) / 2
  std::vector<QRat> gamma(static_cast<std::size_t>(d) * d * d);
  auto G = [&](int a, int b, int c) -> QRat& {
    return gamma[(static_cast<std::size_t>(a) * d + b) * d + c];
  };
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        G(a, b, c) = (C(a, b, c) - C(b, c, a) + C(c, a, b)) / QRat(2);

  auto nabla = [&](int a, const std::vector<QRat>& x) {
    std::vector<QRat> y(d, QRat());
    for (int b = 0; b < d; ++b) {
      if (x[b].is_zero()) continue;
      for (int c = 0; c < d; ++c) y[c] += x[b] * G(a, b, c);
    }
    return y;
  };

  // R(e_a, e_b) e_c = nabla_a nabla_b e_c - nabla_b nabla_a e_c
  //                   - nabla_{[e_a, e_b]} e_c
  auto curv = [&](int a, int b, int c) {
    std::vector<QRat> nb_c(d, QRat()), na_c(d, QRat());
    for (int k = 0; k < d; ++k) {
      nb_c[k] = G(b, c, k);
      na_c[k] = G(a, c, k);
    }
    auto t1 = nabla(a, nb_c);
    auto t2 = nabla(b, na_c);
    auto br = mu.bracket_basis(a + 1, b + 1);
    std::vector<QRat> t3(d, QRat());
    for (int k = 0; k < d; ++k) {
      if (br[k].is_zero()) continue;
      for (int c2 = 0; c2 < d; ++c2) t3[c2] += br[k] * G(k, c, c2);
    }
    std::vector<QRat> r(d, QRat());
    for (int k = 0; k < d; ++k) r[k] = t1[k] - t2[k] - t3[k];
    return r;
  };

  nilmin::Mat<QRat> ric(d, d);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      QRat s;
      for (int k = 0; k < d; ++k) s += curv(k, x, y)[k];
      ric(x, y) = s;
    }
  return ric;
}

}  // namespace nilmin_test
