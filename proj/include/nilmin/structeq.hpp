// Parser and realifier for complex structure equations in dw notation.
//
// Surface syntax, one statement per 'dwK = ...' (separated by ';' or
// newlines):
//
//   dw1 = 0
//   dw3 = w12 + w1~1 + w1~2 + (1/4 + 1/2*i)*w2~2
//   dw3 = i*w1~1 + i*(w1~2 - w2~1)
//
// wAB is the wedge of the A-th and B-th (1,0)-forms; wA~B conjugates the
// second factor.  Coefficients are complex rationals built from integers,
// fractions p/q, and the literal i.  Indices are single digits (n <= 9).

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilmin/bracket.hpp"
#include "nilmin/rational.hpp"

namespace nilmin {

struct WedgeKey {
  bool conj_second = false;  // wA~B vs wAB
  int a = 0, b = 0;
  auto operator<=>(const WedgeKey&) const = default;
};

struct StructureEquations {
  int n = 0;  // complex dimension
  // d[k-1]: normalized terms of dw(k); absent statements are closed forms.
  std::vector<std::map<WedgeKey, QComplex>> d;
};

// Throws std::runtime_error with "line L, col C: ..." on syntax errors,
// index-out-of-range, or duplicate dwK definitions.
StructureEquations parse_equations(const std::string& text);

struct RealificationResult {
  LieBracket bracket;  // raw, unnormalized constants
  // A uniform rescaling matching a specific catalog row, when one exists;
  // realify itself leaves this empty (see find_uniform_scaling).
  std::optional<Mat<QRat>> scaling;
};

// Substitutes w^k = e^{2k-1} - i e^{2k}, splits real/imaginary parts, and
// converts d e^k = sum(-c_ij^k) e^i ^ e^j into bracket constants.  Throws
// "d^2 != 0: not a Lie algebra" if the result fails the Jacobi identity.
RealificationResult realify(const StructureEquations& eqs);

// Finds a uniform scaling g = r I with act(g, from) == to, if one exists.
std::optional<Mat<QRat>> find_uniform_scaling(const LieBracket& from,
                                              const LieBracket& to);

}  // namespace nilmin
