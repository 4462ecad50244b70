#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilmin/catalog.hpp"
#include "test_util.hpp"

using namespace nilmin;
using nilmin_test::pp;

TEST_CASE("every default-grid instantiation validates") {
  for (const auto& f : families()) {
    CHECK(!f.default_grid.empty());
    int in_domain = 0;
    for (const auto& p : f.default_grid) {
      if (f.domain_violation(p)) continue;
      ++in_domain;
      CAPTURE(f.name);
      CAPTURE(params_str(p));
      ValidationReport rep = validate(f.make(p));
      CHECK(rep.jacobi);
      CHECK(rep.nilpotent);
      CHECK(rep.integrable);
    }
    CHECK(in_domain >= 1);
  }
}

TEST_CASE("instantiate reports the violated predicate") {
  CHECK_THROWS_WITH_AS(instantiate("h4", pp({{"t", "0"}})),
                       doctest::Contains("t != 0"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(instantiate("h5b", pp({{"s", "-1"}, {"t", "0"}})),
                       doctest::Contains("s >= 0"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(instantiate("h16", pp({{"s", "1"}, {"t", "0"}})),
                       doctest::Contains("(s, t) != (1, 0)"),
                       std::invalid_argument);
  CHECK_THROWS_AS(instantiate("nope", {}), std::invalid_argument);
  CHECK_THROWS_AS(instantiate("h4", {}), std::invalid_argument);
}

TEST_CASE("expected verdict transcription") {
  CHECK_FALSE(instantiate("h4", pp({{"t", "1/4"}})).second.existence);
  CHECK(instantiate("h4", pp({{"t", "1"}})).second.existence);
  CHECK(*instantiate("h4", pp({{"t", "-1"}})).second.canonical_minimal);
  CHECK_FALSE(
      instantiate("h5b", pp({{"s", "0"}, {"t", "0"}})).second.existence);
  CHECK(instantiate("h5b", pp({{"s", "0"}, {"t", "1"}})).second.existence);
  CHECK(*instantiate("h5b", pp({{"s", "0"}, {"t", "1"}}))
             .second.canonical_minimal);
  CHECK_FALSE(instantiate("h26plus", pp({{"sign", "1"}})).second.existence);
  CHECK_FALSE(instantiate("h26plus", pp({{"sign", "1"}}))
                  .second.canonical_minimal.has_value());
  CHECK(*instantiate("h12", pp({{"s", "1/2"}, {"t", "1/2"}}))
             .second.canonical_minimal);
  CHECK_FALSE(*instantiate("h12", pp({{"s", "1"}, {"t", "1"}}))
                   .second.canonical_minimal);
  CHECK(*instantiate("h16", pp({{"s", "0"}, {"t", "1"}}))
             .second.canonical_minimal);
}

TEST_CASE("h12 at (1/2, 1/2) is exact in Q(sqrt(2))") {
  LieBracket mu = instantiate("h12", pp({{"s", "1/2"}, {"t", "1/2"}})).first;
  bool has_radical = false;
  for (const auto& [key, c] : mu.entries) {
    (void)key;
    if (!c.is_rational()) {
      has_radical = true;
      CHECK(c.d == 2);
    }
  }
  CHECK(has_radical);
  CHECK(validate(mu).ok());
}

TEST_CASE("sweep: worked-example grids") {
  TableReport r11a = sweep("h11a", {pp({{"t", "-1"}}), pp({{"t", "1/2"}})},
                           16, 1729);
  TableReport r11b = sweep("h11b", {pp({{"t", "2"}}), pp({{"t", "3"}})}, 16,
                           1729);
  for (const auto& row : r11a.rows) CHECK(row.existence_computed);
  for (const auto& row : r11b.rows) CHECK(row.existence_computed);
  CHECK(r11a.mismatches_existence == 0);
  CHECK(r11b.mismatches_existence == 0);

  TableReport r5 = sweep(
      "h5b",
      {pp({{"s", "0"}, {"t", "0"}}), pp({{"s", "0"}, {"t", "1"}}),
       pp({{"s", "1/2"}, {"t", "3/4"}})},
      16, 1729);
  CHECK(r5.mismatches_existence == 0);
  CHECK_FALSE(r5.rows[0].existence_computed);
  CHECK(r5.rows[1].existence_computed);
  CHECK(r5.rows[2].existence_computed);

  TableReport r7 = sweep("h7", {Params{}}, 16, 1729);
  CHECK(r7.rows[0].existence_computed);
  REQUIRE(r7.rows[0].minimal_computed.has_value());
  CHECK(*r7.rows[0].minimal_computed);
  CHECK(r7.rows[0].match);
}

TEST_CASE("sweep skips out-of-domain points with a note") {
  TableReport r = sweep("h4", {pp({{"t", "0"}}), pp({{"t", "1"}})}, 8, 1729);
  CHECK(r.skipped == 1);
  CHECK(r.rows[0].note ==
        "skipped (out of domain: t != 0)");
  CHECK(r.rows[1].match);
}

TEST_CASE("reproduce_tables has no mismatches") {
  TableReport rep = reproduce_tables(16, 1729);
  for (const auto& row : rep.rows) {
    CAPTURE(row.family);
    CAPTURE(params_str(row.params));
    CAPTURE(row.note);
    CHECK((row.match || !row.note.empty()));
  }
  CHECK(rep.mismatches_existence == 0);
  CHECK(rep.mismatches_minimal == 0);
  CHECK(rep.inconclusive_count == 0);
  CHECK(rep.skipped == 0);

  std::string csv = table_csv(rep);
  CHECK(csv.find("family,params,step,jnice_method") == 0);
  CHECK(csv.find("h26plus") != std::string::npos);
  auto js = table_json(rep);
  CHECK(js["mismatches_existence"] == 0);
}
