#include "nilmin/normalize.hpp"

#include <array>
#include <vector>

namespace nilmin {

namespace {

using C2x2 = std::array<std::array<QComplex, 2>, 2>;

QComplex qc(long v) { return QComplex(QRat(v)); }

C2x2 mul(const C2x2& x, const C2x2& y) {
  C2x2 z;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      z[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  return z;
}

C2x2 adjoint(const C2x2& x) {
  C2x2 z;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) z[i][j] = x[j][i].conj();
  return z;
}

C2x2 congr(const C2x2& m, const C2x2& p) { return mul(mul(adjoint(p), m), p); }

QComplex det(const C2x2& x) { return x[0][0] * x[1][1] - x[0][1] * x[1][0]; }

C2x2 inverse(const C2x2& x) {
  QComplex dt = det(x);
  if (dt.is_zero()) throw std::domain_error("C2x2: singular");
  C2x2 z;
  z[0][0] = x[1][1] / dt;
  z[0][1] = -x[0][1] / dt;
  z[1][0] = -x[1][0] / dt;
  z[1][1] = x[0][0] / dt;
  return z;
}

const C2x2 kId = {{{qc(1), qc(0)}, {qc(0), qc(1)}}};
const C2x2 kSwap = {{{qc(0), qc(1)}, {qc(1), qc(0)}}};

// Extracted structure-equation data of the recognized class.
struct EqData {
  int m = 0;      // target complex line (1-based)
  int p = 0, q = 0;  // source complex lines, p < q
  QComplex v;     // coefficient of w^{pq}
  C2x2 M;         // (1,1)-part matrix, M[0][0] = coeff of w^{p ~p} etc.
};

std::optional<EqData> extract(const LieBracket& mu) {
  if (mu.dim != 6 || mu.is_zero()) return std::nullopt;
  EqData e;
  int target = 0;
  for (const auto& [key, c] : mu.entries) {
    (void)c;
    int ci = (key[0] + 1) / 2, cj = (key[1] + 1) / 2, ck = (key[2] + 1) / 2;
    if (target == 0) target = ck;
    if (ck != target || ci == target || cj == target) return std::nullopt;
  }
  e.m = target;
  std::vector<int> src;
  for (int i = 1; i <= 3; ++i)
    if (i != target) src.push_back(i);
  e.p = src[0];
  e.q = src[1];

  const int a = 2 * e.p - 1, a2 = 2 * e.p, b = 2 * e.q - 1, b2 = 2 * e.q;
  auto F = [&](int x, int y) {
    // dw^m coefficient on e^x ^ e^y:  -c_xy^{2m-1} + i c_xy^{2m}
    return QComplex(-mu.coeff(x, y, 2 * e.m - 1), mu.coeff(x, y, 2 * e.m));
  };
  QComplex i2 = qc_i() + qc_i();  // 2i
  e.M[0][0] = F(a, a2) / i2;
  e.M[1][1] = F(b, b2) / i2;
  QComplex s1 = (F(a, b) + F(a2, b2)) / qc(2);    // Mpq - Mqp
  QComplex s2 = (F(a, b) - F(a2, b2)) / qc(2);    // v + vbar
  QComplex s3 = (F(a, b2) + F(a2, b)) / i2;       // vbar - v
  QComplex s4 = (F(a, b2) - F(a2, b)) / i2;       // Mpq + Mqp
  e.v = (s2 - s3) / qc(2);
  QComplex vbar = (s2 + s3) / qc(2);
  if (!vbar.is_zero()) return std::nullopt;  // (0,2)-part present
  e.M[0][1] = (s1 + s4) / qc(2);
  e.M[1][0] = (s4 - s1) / qc(2);
  return e;
}

// *-congruence P with (P* H P) diagonal, for Hermitian H (exact, no
// radicals).
C2x2 hermitian_diagonalizer(const C2x2& h) {
  const QComplex& h11 = h[0][0];
  const QComplex& h12 = h[0][1];
  const QComplex& h22 = h[1][1];
  if (!h11.is_zero()) {
    C2x2 p = kId;
    p[0][1] = -(h12 / h11);
    return p;
  }
  if (!h22.is_zero()) {
    C2x2 p = kSwap;
    // after swap: diag entry h22 first; shear kills the off-diagonal
    C2x2 shear = kId;
    shear[0][1] = -(h12.conj() / h22);
    return mul(p, shear);
  }
  if (!h12.is_zero()) {
    // columns (1, conj(h12)) and (1, -conj(h12)) give values +-2|h12|^2
    C2x2 p;
    p[0][0] = qc(1);
    p[0][1] = qc(1);
    p[1][0] = h12.conj();
    p[1][1] = -h12.conj();
    return p;
  }
  return kId;  // h == 0
}

struct Candidate {
  C2x2 p;
  std::string route;
};

// Null vectors of the sesquilinear form: v with v* M v == 0, v = (1, c).
// Appends up to two columns per parametrization.
void null_vector_candidates(const C2x2& m, std::vector<Candidate>* out) {
  // E(c) = M11 + M12 c + M21 conj(c) + M22 |c|^2, split into two real
  // quadrics F, G in c = x + i y; both share the circle part, so their
  // resultant is a line.
  auto solve_param = [&](const C2x2& mm) -> std::vector<QComplex> {
    const QRat r11 = mm[0][0].re, i11 = mm[0][0].im;
    const QRat r12 = mm[0][1].re, i12 = mm[0][1].im;
    const QRat r21 = mm[1][0].re, i21 = mm[1][0].im;
    const QRat r22 = mm[1][1].re, i22 = mm[1][1].im;
    // F = r11 + x (r12+r21) + y (i21-i12) + (x^2+y^2) r22
    // G = i11 + x (i12+i21) + y (r12-r21) + (x^2+y^2) i22
    QRat fb = r12 + r21, fc = i21 - i12;
    QRat gb = i12 + i21, gc = r12 - r21;
    std::vector<QComplex> sols;
    auto push = [&](const QRat& x, const QRat& y) {
      sols.push_back(QComplex(x, y));
    };
    if (r22.is_zero() && i22.is_zero()) {
      // two linear equations
      QRat det = fb * gc - fc * gb;
      if (!det.is_zero()) {
        QRat x = (-r11 * gc + fc * i11) / det;
        QRat y = (-fb * i11 + gb * r11) / det;
        push(x, y);
      }
      return sols;
    }
    // Line L = F*i22 - G*r22 = A + B x + C y = 0
    QRat A = r11 * i22 - i11 * r22;
    QRat B = fb * i22 - gb * r22;
    QRat C = fc * i22 - gc * r22;
    // Quadric with nonzero circle coefficient
    QRat qa, qb, qcc, q0;  // q0 + qb x + qcc y + qa (x^2+y^2)
    if (!r22.is_zero()) {
      qa = r22; qb = fb; qcc = fc; q0 = r11;
    } else {
      qa = i22; qb = gb; qcc = gc; q0 = i11;
    }
    auto solve_on_line = [&](bool solve_x) {
      // substitute the line into the circle; solve_x: y = -(A+Bx)/C
      // else: x = -(A+Cy)/B
      QRat l0 = -A, lc = solve_x ? -B : -C, den = solve_x ? C : B;
      // dependent = (l0 + lc * t)/den
      // circle: q0 + qb x + qcc y + qa (x^2 + y^2) = 0
      // with t the free variable
      QRat a2, a1, a0;
      if (solve_x) {
        // x = t, y = (l0 + lc t)/den
        a2 = qa * (den * den + lc * lc);
        a1 = qb * den * den + qcc * lc * den + QRat(2) * qa * l0 * lc;
        a0 = q0 * den * den + qcc * l0 * den + qa * l0 * l0;
      } else {
        a2 = qa * (den * den + lc * lc);
        a1 = qcc * den * den + qb * lc * den + QRat(2) * qa * l0 * lc;
        a0 = q0 * den * den + qb * l0 * den + qa * l0 * l0;
      }
      std::vector<QRat> roots;
      if (a2.is_zero()) {
        if (!a1.is_zero()) roots.push_back(-a0 / a1);
      } else {
        QRat disc = a1 * a1 - QRat(4) * a2 * a0;
        if (disc.sign() >= 0) {
          QRat sq = qrat_sqrt(disc);
          roots.push_back((-a1 + sq) / (QRat(2) * a2));
          roots.push_back((-a1 - sq) / (QRat(2) * a2));
        }
      }
      for (const QRat& t : roots) {
        QRat dep = (l0 + lc * t) / den;
        if (solve_x)
          push(t, dep);
        else
          push(dep, t);
      }
    };
    if (!C.is_zero()) {
      solve_on_line(/*solve_x=*/true);
    } else if (!B.is_zero()) {
      solve_on_line(/*solve_x=*/false);
    } else if (A.is_zero()) {
      // the two quadrics coincide: pick points on the circle at small x
      for (long x0 : {0L, 1L, -1L, 2L, -2L}) {
        QRat xq(rat(x0));
        // qa y^2 + qcc y + (q0 + qb x0 + qa x0^2) = 0
        QRat cc = q0 + qb * xq + qa * xq * xq;
        QRat disc = qcc * qcc - QRat(4) * qa * cc;
        if (disc.sign() < 0) continue;
        try {
          QRat sq = qrat_sqrt(disc);
          push(xq, (-qcc + sq) / (QRat(2) * qa));
          push(xq, (-qcc - sq) / (QRat(2) * qa));
        } catch (const std::exception&) {
        }
        if (sols.size() >= 2) break;
      }
    }
    return sols;
  };

  // v = (1, c) parametrization
  std::vector<QComplex> cs = solve_param(m);
  // v = (c, 1): same machinery on the index-swapped form
  C2x2 sw = congr(m, kSwap);
  std::vector<QComplex> cs2 = solve_param(sw);

  std::vector<std::array<QComplex, 2>> nulls;
  for (const auto& c : cs) nulls.push_back({qc(1), c});
  for (const auto& c : cs2) nulls.push_back({c, qc(1)});
  for (std::size_t i = 0; i < nulls.size(); ++i)
    for (std::size_t j = i + 1; j < nulls.size(); ++j) {
      C2x2 p;
      p[0][0] = nulls[i][0];
      p[1][0] = nulls[i][1];
      p[0][1] = nulls[j][0];
      p[1][1] = nulls[j][1];
      if (det(p).is_zero()) continue;
      out->push_back({p, "pencil-offdiagonal"});
      return;  // first independent pair suffices
    }
}

std::vector<Candidate> candidates_for(const C2x2& m) {
  std::vector<Candidate> cands;

  // Hermitian/skew split: M = H + K.
  C2x2 h, ik;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      h[i][j] = (m[i][j] + m[j][i].conj()) / qc(2);
      ik[i][j] = qc_i() * (m[i][j] - h[i][j]);  // i * K, Hermitian
    }
  bool h_zero = h[0][0].is_zero() && h[0][1].is_zero() && h[1][1].is_zero();

  // 1. Diagonalize the Hermitian part; fix up rank-deficient leftovers.
  try {
    C2x2 p1 = h_zero ? hermitian_diagonalizer(ik) : hermitian_diagonalizer(h);
    C2x2 m1 = congr(m, p1);
    // ensure a zero Hermitian diagonal entry sits in slot 2
    if (m1[0][0].re.is_zero() && !m1[1][1].re.is_zero()) {
      p1 = mul(p1, kSwap);
      m1 = congr(m, p1);
    }
    cands.push_back({p1, h_zero ? "skew-diagonal" : "hermitian-diagonal"});
    QRat kappa1 = m1[0][0].im, kappa2 = m1[1][1].im;
    const QComplex& k12 = m1[0][1];
    if (!k12.is_zero() && m1[1][1].re.is_zero() && !kappa2.is_zero()) {
      // lower shear kills the off-diagonal when the (2,2) slot is i*kappa2
      C2x2 p2 = kId;
      p2[1][0] = (qc_i() * k12 / QComplex(kappa2)).conj();
      cands.push_back({mul(p1, p2), "rank-deficient-shear"});
    }
    if (!k12.is_zero() && m1[0][0].re.is_zero() && !kappa1.is_zero()) {
      C2x2 p2 = kId;
      p2[0][1] = qc_i() * k12 / QComplex(kappa1);
      cands.push_back({mul(p1, p2), "rank-deficient-shear"});
    }
  } catch (const std::exception&) {
  }

  // 2. Regular pencil: B = H^{-1} (iK); simultaneous diagonalization when the
  //    eigenvalues are real and distinct, null-vector form when complex.
  try {
    QComplex dh = det(h);
    if (!dh.is_zero()) {
      C2x2 b = mul(inverse(h), ik);
      QComplex trc = b[0][0] + b[1][1];
      QComplex dtc = det(b);
      if (trc.im.is_zero() && dtc.im.is_zero()) {
        QRat disc = trc.re * trc.re - QRat(4) * dtc.re;
        int ds = disc.is_zero() ? 0 : disc.sign();
        if (ds > 0) {
          QRat sq = qrat_sqrt(disc);
          QRat l1 = (trc.re + sq) / QRat(2);
          QRat l2 = (trc.re - sq) / QRat(2);
          auto eigvec = [&](const QRat& l) -> std::array<QComplex, 2> {
            QComplex d11 = b[0][0] - QComplex(l);
            if (!b[0][1].is_zero()) return {b[0][1], QComplex(l) - b[0][0]};
            if (!b[1][0].is_zero()) return {QComplex(l) - b[1][1], b[1][0]};
            // b diagonal
            if (d11.is_zero()) return {qc(1), qc(0)};
            return {qc(0), qc(1)};
          };
          auto v1 = eigvec(l1), v2 = eigvec(l2);
          C2x2 p;
          p[0][0] = v1[0];
          p[1][0] = v1[1];
          p[0][1] = v2[0];
          p[1][1] = v2[1];
          if (!det(p).is_zero()) cands.push_back({p, "pencil-diagonal"});
        } else if (ds < 0) {
          null_vector_candidates(m, &cands);
        } else {
          // parabolic; diagonalizable only if iK is proportional to H
          if (b[0][1].is_zero() && b[1][0].is_zero() && b[0][0] == b[1][1])
            cands.push_back({hermitian_diagonalizer(h), "pencil-scalar"});
        }
      }
    } else if (!h_zero) {
      // H singular but nonzero: the null-vector route can still apply
      null_vector_candidates(m, &cands);
    }
  } catch (const std::exception&) {
  }

  return cands;
}

}  // namespace

std::optional<Normalization> jnice_normalize(const LieBracket& mu,
                                             int samples, std::uint64_t seed) {
  auto eq = extract(mu);
  if (!eq) return std::nullopt;

  for (const auto& cand : candidates_for(eq->M)) {
    try {
      // M' = P* M P corresponds to the coframe change omega = conj(P) sigma,
      // hence to acting on brackets with g = realify(P^{-1}) embedded at the
      // source lines.
      C2x2 pinv = inverse(cand.p);
      std::vector<std::vector<QComplex>> gc(
          3, std::vector<QComplex>(3, QComplex()));
      gc[eq->m - 1][eq->m - 1] = qc(1);
      int idx[2] = {eq->p - 1, eq->q - 1};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          gc[idx[i]][idx[j]] = pinv[i][j];
      Mat<QRat> g = realify_complex_matrix(gc);
      LieBracket mu2 = act(g, mu);
      JNiceStatus st = jnice_status(mu2, samples, seed);
      if (st.method != JNiceMethod::Inconclusive)
        return Normalization{g, mu2, st, cand.route};
    } catch (const std::exception&) {
      // candidate construction or action failed; try the next one
    }
  }
  return std::nullopt;
}

}  // namespace nilmin
