#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilmin/analysis.hpp"
#include "nilmin/feasibility.hpp"
#include "nilmin/weights.hpp"
#include "test_util.hpp"

using namespace nilmin;
using nilmin_test::catalog_bracket;
using nilmin_test::h11_example;
using nilmin_test::pp;

namespace {

std::vector<long> wv(std::initializer_list<long> xs) { return xs; }

std::vector<std::vector<long>> weight_vectors(const WeightList& w) {
  std::vector<std::vector<long>> out;
  for (const auto& row : w) out.push_back(row.w.v);
  return out;
}

}  // namespace

TEST_CASE("weight_of printed examples") {
  CHECK(weight_of(1, 2, 4, 3).v == wv({-2, 1, 0}));
  CHECK(weight_of(1, 3, 5, 3).v == wv({-1, -1, 1}));
  CHECK(weight_of(1, 5, 3, 3).v == wv({-1, 1, -1}));
  CHECK(weight_of(3, 4, 5, 3).v == wv({0, -2, 1}));
  CHECK_THROWS(weight_of(2, 1, 4, 3));
  CHECK_THROWS(weight_of(1, 7, 4, 3));
}

TEST_CASE("weight_support of the worked examples") {
  WeightList w = weight_support(h11_example(Rat(2)));
  CHECK(weight_vectors(w) ==
        std::vector<std::vector<long>>{
            {-2, 1, 0}, {-1, -1, 1}, {-1, -1, 1}, {-1, -1, 1}});

  WeightList w5 =
      weight_support(catalog_bracket("h5b", pp({{"s", "1"}, {"t", "1"}})));
  CHECK(w5.size() == 7);
  CHECK(weight_vectors(w5) ==
        std::vector<std::vector<long>>{{-2, 0, 1},
                                       {-1, -1, 1},
                                       {-1, -1, 1},
                                       {-1, -1, 1},
                                       {-1, -1, 1},
                                       {0, -2, 1},
                                       {0, -2, 1}});

  WeightList w50 =
      weight_support(catalog_bracket("h5b", pp({{"s", "0"}, {"t", "0"}})));
  CHECK(w50.size() == 5);

  CHECK(weight_support(LieBracket(6)).empty());
}

TEST_CASE("gram_matrix golden values") {
  GramMatrix u11 = gram_matrix(weight_support(h11_example(Rat(2))));
  CHECK(u11.u == std::vector<std::vector<long>>{
                     {5, 1, 1, 1}, {1, 3, 3, 3}, {1, 3, 3, 3}, {1, 3, 3, 3}});

  GramMatrix u5 = gram_matrix(
      weight_support(catalog_bracket("h5b", pp({{"s", "1"}, {"t", "1"}}))));
  CHECK(u5.u[0] == std::vector<long>{5, 3, 3, 3, 3, 1, 1});
  for (int i = 1; i <= 4; ++i)
    CHECK(u5.u[i] == std::vector<long>{3, 3, 3, 3, 3, 3, 3});
  CHECK(u5.u[5] == std::vector<long>{1, 3, 3, 3, 3, 5, 5});
  CHECK(u5.u[6] == std::vector<long>{1, 3, 3, 3, 3, 5, 5});

  GramMatrix u26 =
      gram_matrix(weight_support(catalog_bracket("h26plus", pp({{"sign", "1"}}))));
  CHECK(u26.u == std::vector<std::vector<long>>{{5, 3, 1, 3, 1},
                                                {3, 3, -1, 3, -1},
                                                {1, -1, 3, -1, 3},
                                                {3, 3, -1, 3, -1},
                                                {1, -1, 3, -1, 3}});

  CHECK_THROWS(gram_matrix(WeightList{}));
}

TEST_CASE("roots") {
  CHECK(roots(1).roots.empty());
  RootSystem r2 = roots(2);
  CHECK(r2.roots.size() == 2);
  CHECK(r2.contains({1, -1}));
  RootSystem r3 = roots(3);
  CHECK(r3.roots.size() == 6);
  CHECK(r3.contains({1, -1, 0}));
  CHECK(r3.contains({0, -1, 1}));
  CHECK_FALSE(r3.contains({1, 1, -2}));
  CHECK_THROWS(roots(0));
}

TEST_CASE("nice_basis_test") {
  CHECK(nice_basis_test(catalog_bracket("h26plus", pp({{"sign", "1"}}))));
  CHECK_FALSE(
      nice_basis_test(catalog_bracket("h5b", pp({{"s", "1"}, {"t", "1"}}))));
  CHECK(nice_basis_test(h11_example(Rat(2))));
  // same target from overlapping pairs is not nice
  LieBracket bad(6);
  bad.set(1, 2, 5, QRat(1));
  bad.set(1, 3, 5, QRat(1));
  CHECK_FALSE(nice_basis_test(bad));
}

TEST_CASE("root_difference_test") {
  RootSystem phi = roots(3);
  CHECK(root_difference_test(weight_support(h11_example(Rat(2))), phi));
  CHECK_FALSE(root_difference_test(
      weight_support(catalog_bracket("h5b", pp({{"s", "1"}, {"t", "1"}}))),
      phi));
  WeightList single{{weight_of(1, 2, 4, 3), {1, 2, 4}}};
  CHECK(root_difference_test(single, phi));
}

TEST_CASE("diagonality_test: h5 family passes, corrupted bracket fails") {
  LieBracket h5 = catalog_bracket("h5b", pp({{"s", "1"}, {"t", "1"}}));
  JNiceStatus st = diagonality_test(h5, 32, 1729);
  CHECK(st.method == JNiceMethod::DiagonalityEvidence);
  CHECK(st.samples == 32);

  // corrupting the cancellation pattern makes ric_c non-diagonal
  LieBracket bad = h5;
  bad.set(1, 4, 6, QRat(3));
  CHECK(diagonality_test(bad, 32, 1729).method == JNiceMethod::Inconclusive);
  CHECK_THROWS(diagonality_test(h5, 0, 1729));
}

TEST_CASE("diagonality is deterministic in the seed") {
  LieBracket h5 = catalog_bracket("h5b", pp({{"s", "0"}, {"t", "1"}}));
  auto a = diagonality_test(h5, 8, 42);
  auto b = diagonality_test(h5, 8, 42);
  CHECK(a.method == b.method);
}

TEST_CASE("jnice_status cascade on the three worked examples") {
  CHECK(jnice_status(catalog_bracket("h26plus", pp({{"sign", "1"}})), 32, 1729)
            .method == JNiceMethod::NiceBasis);
  CHECK(jnice_status(h11_example(Rat(2)), 32, 1729).method ==
        JNiceMethod::RootDifference);
  CHECK(jnice_status(catalog_bracket("h5b", pp({{"s", "1"}, {"t", "1"}})), 32,
                     1729)
            .method == JNiceMethod::DiagonalityEvidence);
}

TEST_CASE("the raw h2-family bracket is not J-nice (normalization needed)") {
  // ric_c of the table's h2/h4/h6 brackets has an off-diagonal entry on the
  // whole diagonal orbit, so the cascade is Inconclusive on the raw bracket.
  LieBracket h2 = catalog_bracket("h2", pp({{"s", "1"}, {"t", "0"}}));
  CHECK(jnice_status(h2, 8, 1729).method == JNiceMethod::Inconclusive);
}

TEST_CASE("weight properties across the catalog") {
  std::mt19937_64 rng(5);
  for (const auto& f : families()) {
    for (const auto& p : f.default_grid) {
      if (f.domain_violation(p)) continue;
      LieBracket mu = f.make(p);
      WeightList w = weight_support(mu);
      for (const auto& row : w) CHECK(row.w.coord_sum() == -1);
      CHECK(gram_psd(gram_matrix(w)));
      // support is invariant under positive diagonal scalings
      LieBracket moved = act(nilmin_test::random_diag_scaling(rng, 3), mu);
      WeightList w2 = weight_support(moved);
      CHECK(weight_vectors(w) == weight_vectors(w2));
      // nice implies J-nice (diagonality evidence)
      if (nice_basis_test(mu))
        CHECK(diagonality_test(mu, 8, 99).method ==
              JNiceMethod::DiagonalityEvidence);
    }
  }
}
