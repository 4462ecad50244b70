// Ricci operator of the canonical metric <e_i, e_j> = delta_ij on the
// nilpotent group N_mu, its J-invariant part, and the decomposition
// Ric^c = cI + D with D a derivation (when it exists).

#pragma once

#include "nilmin/bracket.hpp"

namespace nilmin {

struct RicciData {
  Mat<QRat> ric;    // symmetric 2n x 2n
  Mat<QRat> ric_c;  // (1/2)(ric - J ric J); commutes with J
  QRat scal;        // trace of either
};

// Closed form for nilpotent mu:
//   <Ric X, Y> = -1/2 sum_{i,j} <mu(X,e_i),e_j><mu(Y,e_i),e_j>
//                +1/4 sum_{i,j} <mu(e_i,e_j),X><mu(e_i,e_j),Y>
// (sums over all ordered pairs).  Verified against a Koszul-formula
// curvature oracle in the test suite.
RicciData ricci_operator(const LieBracket& mu);

// Same data with ric_c = (1/2)(ric - J ric J) filled in.
RicciData ricci_complexified(const LieBracket& mu);

struct SolitonDecomposition {
  bool exists = false;
  QRat c;        // present iff exists
  Mat<QRat> D;   // ric_c - cI, an exact derivation, iff exists
};

// Ric^c = cI + D test.  Uses pi(I)mu = -mu: with c* the orthogonal projection
// c* = -<pi(ric_c) mu, mu> / <mu, mu>, the decomposition exists iff
// pi(ric_c) mu + c* mu = 0 exactly.
SolitonDecomposition soliton_decomposition(const LieBracket& mu);

}  // namespace nilmin
