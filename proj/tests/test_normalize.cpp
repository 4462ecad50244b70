#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilmin/analysis.hpp"
#include "nilmin/normalize.hpp"
#include "test_util.hpp"

using namespace nilmin;
using nilmin_test::catalog_bracket;
using nilmin_test::pp;

namespace {

bool has_entry(const LieBracket& mu, int i, int j) {
  for (int k = 1; k <= mu.dim; ++k)
    if (!mu.coeff(i, j, k).is_zero()) return true;
  return false;
}

Verdict verdict_of(const LieBracket& mu) {
  AnalysisOptions opts;
  return analyze(mu, opts).verdict;
}

}  // namespace

TEST_CASE("h4 normalizes rationally for every nonzero t") {
  for (const char* t : {"-1", "1/8", "1/4", "1", "2", "-1/2"}) {
    LieBracket mu = catalog_bracket("h4", pp({{"t", t}}));
    auto norm = jnice_normalize(mu, 16, 1729);
    CAPTURE(t);
    REQUIRE(norm.has_value());
    CHECK(norm->status.method != JNiceMethod::Inconclusive);
    CHECK(act(norm->g, mu) == norm->bracket);
    CHECK(validate(norm->bracket).ok());
    // Hermitian part of the normalized equation is diagonal: the support has
    // a (1,2)-block, the middle 4-block, and a (3,4)-block exactly when
    // t != 1/4 (where the second Hermitian eigenvalue vanishes).
    bool has34 = has_entry(norm->bracket, 3, 4);
    CHECK(has34 == (parse_rat(t) != Rat(1, 4)));
  }
}

TEST_CASE("h4 verdicts flip exactly at t = 1/4") {
  CHECK(verdict_of(catalog_bracket("h4", pp({{"t", "1/4"}}))) ==
        Verdict::NoMinimalMetric);
  for (const char* t : {"-1", "1/8", "1", "2"})
    CHECK(verdict_of(catalog_bracket("h4", pp({{"t", t}}))) ==
          Verdict::MinimalMetricExists);
}

TEST_CASE("h6 normalizes rationally and is feasible") {
  LieBracket mu = catalog_bracket("h6", {});
  auto norm = jnice_normalize(mu, 16, 1729);
  REQUIRE(norm.has_value());
  // all coefficients stay rational (no radical was needed)
  for (const auto& [key, c] : norm->bracket.entries) {
    (void)key;
    CHECK(c.is_rational());
  }
  CHECK(verdict_of(mu) == Verdict::MinimalMetricExists);
}

TEST_CASE("h2 normalizes on both sides of the pencil discriminant") {
  // s^2 + t - 1/4 > 0: simultaneous diagonalization (one radical)
  for (auto [s, t] : std::vector<std::pair<const char*, const char*>>{
           {"1", "0"}, {"1/2", "1/2"}, {"2", "3"}}) {
    LieBracket mu = catalog_bracket("h2", pp({{"s", s}, {"t", t}}));
    auto norm = jnice_normalize(mu, 16, 1729);
    CAPTURE(s);
    CAPTURE(t);
    REQUIRE(norm.has_value());
    CHECK(verdict_of(mu) == Verdict::MinimalMetricExists);
  }
  // s^2 + t - 1/4 < 0: pure off-diagonal canonical form
  {
    LieBracket mu = catalog_bracket("h2", pp({{"s", "1/4"}, {"t", "-1"}}));
    auto norm = jnice_normalize(mu, 16, 1729);
    REQUIRE(norm.has_value());
    CHECK(norm->route == "pencil-offdiagonal");
    // support lies entirely in the middle weight block
    for (const auto& [key, c] : norm->bracket.entries) {
      (void)c;
      CHECK(weight_of(key[0], key[1], key[2], 3).v ==
            std::vector<long>{-1, -1, 1});
    }
    CHECK(verdict_of(mu) == Verdict::MinimalMetricExists);
  }
}

TEST_CASE("h5c normalizes in all three regions") {
  for (auto [s, t] : std::vector<std::pair<const char*, const char*>>{
           {"0", "1/2"}, {"1/16", "1/2"}, {"0", "3/4"}, {"1", "2"},
           {"0", "-2"}}) {
    LieBracket mu = catalog_bracket("h5c", pp({{"s", s}, {"t", t}}));
    CAPTURE(s);
    CAPTURE(t);
    CHECK(jnice_status(mu, 8, 1729).method == JNiceMethod::Inconclusive);
    auto norm = jnice_normalize(mu, 16, 1729);
    REQUIRE(norm.has_value());
    CHECK(verdict_of(mu) == Verdict::MinimalMetricExists);
  }
}

TEST_CASE("normalization declines brackets outside the recognized class") {
  // image spans two complex lines: not the one-line class
  CHECK_FALSE(
      jnice_normalize(catalog_bracket("h26plus", pp({{"sign", "1"}})), 8, 1729)
          .has_value());
  CHECK_FALSE(jnice_normalize(LieBracket(6), 8, 1729).has_value());
}

TEST_CASE("existence verdict is invariant under the diagonal action") {
  std::mt19937_64 rng(23);
  for (auto& [name, params] :
       std::vector<std::pair<std::string, Params>>{
           {"h4", pp({{"t", "1/4"}})},
           {"h4", pp({{"t", "2"}})},
           {"h2", pp({{"s", "1"}, {"t", "0"}})},
           {"h5b", pp({{"s", "0"}, {"t", "0"}})}}) {
    LieBracket mu = catalog_bracket(name, params);
    Verdict want = verdict_of(mu);
    for (int trial = 0; trial < 4; ++trial) {
      LieBracket moved = act(nilmin_test::random_diag_scaling(rng, 3), mu);
      CHECK(verdict_of(moved) == want);
    }
  }
}
