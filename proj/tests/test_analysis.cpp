#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilmin/analysis.hpp"
#include "nilmin/io.hpp"
#include "test_util.hpp"

using namespace nilmin;
using nilmin_test::catalog_bracket;
using nilmin_test::h11_example;
using nilmin_test::pp;

TEST_CASE("analyze: h11 t=2 exists with an exact witness") {
  AnalysisOptions opts;
  AnalysisReport rep = analyze(h11_example(Rat(2)), opts, "h11-t2");
  CHECK(rep.valid);
  CHECK(rep.verdict == Verdict::MinimalMetricExists);
  CHECK(rep.jnice.method == JNiceMethod::RootDifference);
  REQUIRE(rep.feasibility.has_value());
  CHECK(rep.feasibility->status == FeasStatus::FeasibleLambdaPositive);
  REQUIRE(rep.soliton.has_value());
  CHECK_FALSE(rep.soliton->exists);
}

TEST_CASE("analyze: h26+ has no minimal metric, with the printed form") {
  AnalysisOptions opts;
  AnalysisReport rep =
      analyze(catalog_bracket("h26plus", pp({{"sign", "1"}})), opts);
  CHECK(rep.verdict == Verdict::NoMinimalMetric);
  REQUIRE(rep.feasibility.has_value());
  REQUIRE(rep.feasibility->solution_form.has_value());
  CHECK(rep.feasibility->solution_form->render() == "(-2, 3-a, 2-b, a, b)");
}

TEST_CASE("analyze: zero bracket short-circuits to AbelianFlat") {
  AnalysisOptions opts;
  AnalysisReport rep = analyze(LieBracket(6), opts);
  CHECK(rep.verdict == Verdict::AbelianFlat);
  CHECK(rep.valid);
}

TEST_CASE("analyze: invalid bracket is reported, not decided") {
  LieBracket mu(4);
  mu.set(1, 2, 3, QRat(1));
  mu.set(1, 3, 2, QRat(1));
  AnalysisOptions opts;
  AnalysisReport rep = analyze(mu, opts);
  CHECK_FALSE(rep.valid);
  CHECK(rep.verdict == Verdict::Inconclusive);
}

TEST_CASE("reports are byte-identical across runs") {
  AnalysisOptions opts;
  auto j1 = report_json(analyze(catalog_bracket("h2", pp({{"s", "1"}, {"t", "0"}})), opts));
  auto j2 = report_json(analyze(catalog_bracket("h2", pp({{"s", "1"}, {"t", "0"}})), opts));
  CHECK(j1.dump() == j2.dump());
  CHECK(j1["schema_version"] == 1);
  CHECK(j1["jnice"]["normalized"] == true);
}

TEST_CASE("json report carries witness and verdict") {
  AnalysisOptions opts;
  auto j = report_json(analyze(h11_example(Rat(2)), opts, "x"));
  CHECK(j["verdict"] == "MinimalMetricExists");
  CHECK(j["feasibility"]["status"] == "FeasibleLambdaPositive");
  CHECK(j["feasibility"]["witness"].size() == 4);
  CHECK(j["soliton"]["exists"] == false);
}

TEST_CASE("algebra JSON round trip") {
  LieBracket mu = h11_example(Rat(1, 2));
  std::string text = write_algebra_json("h11-half", mu);
  AlgebraSpec spec = read_algebra_json(text);
  CHECK(spec.name == "h11-half");
  CHECK(spec.bracket == mu);
}

TEST_CASE("algebra JSON rejects malformed input") {
  CHECK_THROWS(read_algebra_json("{"));
  CHECK_THROWS(read_algebra_json(R"({"dim": 5, "brackets": []})"));
  CHECK_THROWS(read_algebra_json(
      R"({"dim": 6, "brackets": [{"i": 2, "j": 1, "k": 3, "c": "1"}]})"));
  CHECK_THROWS(read_algebra_json(
      R"({"dim": 6, "brackets": [{"i": 1, "j": 2, "k": 9, "c": "1"}]})"));
  CHECK_THROWS(read_algebra_json(
      R"({"dim": 6, "brackets": [{"i": 1, "j": 2, "k": 3, "c": "0"}]})"));
  CHECK_THROWS(read_algebra_json(
      R"({"dim": 6, "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1"},
                                 {"i": 1, "j": 2, "k": 3, "c": "2"}]})"));
  CHECK_THROWS(read_algebra_json(
      R"({"dim": 6, "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1.5"}]})"));
}

TEST_CASE("irrational coefficients cannot be serialized") {
  LieBracket mu =
      nilmin::instantiate("h12", pp({{"s", "1/2"}, {"t", "1/2"}})).first;
  CHECK_THROWS(write_algebra_json("h12", mu));
}
