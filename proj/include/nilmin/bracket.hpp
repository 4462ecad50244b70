// Exact 2n-dimensional antisymmetric brackets with the standard complex
// structure J e_{2i-1} = e_{2i}.
//
// A LieBracket stores sparse structure constants c_ij^k (i < j, 1-based,
// nonzero only).  Antisymmetry is implicit; the Jacobi identity is a property
// checked by validate(), not an invariant of the storage, so the same type
// carries the outputs of pi_action (which need not be Lie brackets).

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilmin/linalg.hpp"
#include "nilmin/rational.hpp"

namespace nilmin {

struct LieBracket {
  int dim = 0;  // 2n
  std::map<std::array<int, 3>, QRat> entries;  // (i, j, k) with i < j -> c

  LieBracket() = default;
  explicit LieBracket(int d) : dim(d) {}

  int n() const { return dim / 2; }
  bool is_zero() const { return entries.empty(); }

  // c_ij^k with antisymmetric lookup; i == j gives 0.
  QRat coeff(int i, int j, int k) const;

  // Sets c_ij^k (requires i != j; stores the i < j representative).
  // Zero coefficients erase the entry.
  void set(int i, int j, int k, const QRat& c);
  void add(int i, int j, int k, const QRat& c);

  // mu(e_i, e_j) as a coefficient vector.
  std::vector<QRat> bracket_basis(int i, int j) const;

  LieBracket plus(const LieBracket& o) const;
  LieBracket scaled(const QRat& s) const;

  bool operator==(const LieBracket& o) const {
    return dim == o.dim && entries == o.entries;
  }
};

// The fixed complex structure J e_{2i-1} = e_{2i} on R^{2n}; value type only
// carries the dimension.
struct ComplexStructure {
  int dim = 0;
  explicit ComplexStructure(int d) : dim(d) {}
  Mat<QRat> matrix() const;
  std::vector<QRat> apply(const std::vector<QRat>& x) const;
};

struct ValidationReport {
  bool antisymmetric = true;  // by construction of the storage
  bool jacobi = true;
  std::optional<std::array<int, 3>> jacobi_failure;
  bool nilpotent = true;
  std::optional<int> step;  // present iff nilpotent; zero bracket has step 1
  bool integrable = true;
  std::optional<std::array<int, 2>> integrability_failure;
  bool abelian_complex = false;  // mu(JX, JY) == mu(X, Y)

  bool ok() const { return jacobi && nilpotent && integrable; }
  std::string summary() const;
};

// Bilinear antisymmetric evaluation of mu on exact vectors.
std::vector<QRat> evaluate(const LieBracket& mu, const std::vector<QRat>& x,
                           const std::vector<QRat>& y);

// Exact verdicts: Jacobi on all basis triples, nilpotency via the lower
// central series, integrability of the standard J on all basis pairs.
ValidationReport validate(const LieBracket& mu);

// g . mu = g mu(g^-1 ., g^-1 .) for invertible J-commuting g (checked).
LieBracket act(const Mat<QRat>& g, const LieBracket& mu);

// pi(alpha) mu = alpha mu(.,.) - mu(alpha ., .) - mu(., alpha .); the result
// is an antisymmetric bilinear map, not necessarily a Lie bracket.
LieBracket pi_action(const Mat<QRat>& alpha, const LieBracket& mu);

// <mu, lambda> summed over all ordered basis pairs (each unordered pair
// contributes twice).
QRat tensor_inner(const LieBracket& mu, const LieBracket& la);

// Realification of a complex n x n matrix G under J e_{2i-1} = e_{2i}:
// each entry z becomes the 2x2 block [[Re z, -Im z], [Im z, Re z]].
Mat<QRat> realify_complex_matrix(const std::vector<std::vector<QComplex>>& g);

}  // namespace nilmin
