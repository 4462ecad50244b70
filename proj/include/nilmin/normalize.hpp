// J-nice normalization.
//
// Some brackets (notably the families whose third structure equation is
// dw3 = w12 + sum M_jk w^{j ~k}) occupy weight spaces on which Ric^c is not
// diagonal, so the Gram criterion cannot be applied to them directly.  The
// minimal-metric existence question is invariant under the J-commuting group
// action, so we search that orbit for a representative whose weight support
// passes the J-nice cascade.
//
// The search is not generic: it recognizes brackets of complex dimension 3
// whose image lies in a single complex line (the class above), extracts the
// (2,0)-coefficient and the 2x2 sesquilinear (1,1)-matrix M of the structure
// equation, and normalizes M by *-congruence M -> P* M P using exact
// canonical forms for the Hermitian pencil of M.  At most one square root is
// introduced, kept exact by QRat.  Every candidate is verified by the exact
// J-nice cascade before being returned; failure to find one returns nullopt
// and the caller stays Inconclusive.

#pragma once

#include <optional>
#include <string>

#include "nilmin/bracket.hpp"
#include "nilmin/weights.hpp"

namespace nilmin {

struct Normalization {
  Mat<QRat> g;         // invertible, J-commuting; bracket == act(g, input)
  LieBracket bracket;  // the J-nice representative
  JNiceStatus status;  // non-Inconclusive status of `bracket`
  std::string route;   // canonical-form construction that produced g
};

std::optional<Normalization> jnice_normalize(const LieBracket& mu,
                                             int samples, std::uint64_t seed);

}  // namespace nilmin
