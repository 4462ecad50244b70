// Weight system of a bracket under the GL_n(C) action, the root system of
// gl_n(C), the nice-basis and root-difference tests, the randomized exact
// diagonality test, and the Gram matrix U_mu of the projected weights.

#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "nilmin/bracket.hpp"
#include "nilmin/ricci.hpp"

namespace nilmin {

struct Weight {
  std::vector<long> v;  // length n, integer coordinates on the diagonal

  long dot(const Weight& o) const {
    long s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * o.v[i];
    return s;
  }
  long coord_sum() const {
    long s = 0;
    for (long x : v) s += x;
    return s;
  }
  bool operator==(const Weight& o) const { return v == o.v; }
};

struct WeightRow {
  Weight w;
  std::array<int, 3> source;  // the (i, j, k) entry this row comes from
};

// One row per (i, j, k) entry with nonzero coefficient, ordered
// lexicographically by (i, j, k).  Duplicate weights are kept as separate
// rows, matching the printed examples.
using WeightList = std::vector<WeightRow>;

struct RootSystem {
  int n = 0;
  std::set<std::vector<long>> roots;  // +-(e_I - e_J), I < J
  bool contains(const std::vector<long>& v) const { return roots.count(v) > 0; }
};

struct GramMatrix {
  int r = 0;
  std::vector<std::vector<long>> u;  // symmetric integer r x r
};

enum class JNiceMethod {
  NiceBasis,
  RootDifference,
  DiagonalityEvidence,
  Inconclusive,
};

struct JNiceStatus {
  JNiceMethod method = JNiceMethod::Inconclusive;
  int samples = 0;       // set for DiagonalityEvidence
  std::uint64_t seed = 0;
};

const char* jnice_method_name(JNiceMethod m);

// e_K - e_I - e_J on complex-diagonal coordinates, K = ceil(k/2) etc.
Weight weight_of(int i, int j, int k, int n);

WeightList weight_support(const LieBracket& mu);

GramMatrix gram_matrix(const WeightList& w);

RootSystem roots(int n);

// True iff every bracket of basis vectors is a multiple of a single basis
// vector and two pairs hitting the same target have disjoint index sets.
bool nice_basis_test(const LieBracket& mu);

// True iff no difference of two distinct weights in the list lies in Phi.
bool root_difference_test(const WeightList& w, const RootSystem& phi);

// Is a matrix in the diagonal subalgebra a (diagonal, equal on each complex
// pair)?
bool in_diagonal_subalgebra(const Mat<QRat>& m);

// Draws `samples` positive diagonal J-commuting rational matrices g
// (entries are small primes and their ratios, deterministic from the seed)
// and checks exactly that ric_c(g . mu) lies in the diagonal subalgebra.
// Evidence, not proof: reported as DiagonalityEvidence vs Inconclusive.
JNiceStatus diagonality_test(const LieBracket& mu, int samples,
                             std::uint64_t seed);

// Cascade: root_difference_test, then nice_basis_test, then the randomized
// diagonality test.
JNiceStatus jnice_status(const LieBracket& mu, int samples,
                         std::uint64_t seed);

}  // namespace nilmin
