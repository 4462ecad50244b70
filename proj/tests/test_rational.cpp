#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilmin/rational.hpp"

using nilmin::QComplex;
using nilmin::QRat;
using nilmin::Rat;

TEST_CASE("parse_rat accepts p, p/q, signs") {
  CHECK(nilmin::parse_rat("3") == Rat(3));
  CHECK(nilmin::parse_rat("-1/2") == Rat(-1, 2));
  CHECK(nilmin::parse_rat("4/6") == Rat(2, 3));
  CHECK_THROWS(nilmin::parse_rat("1.5"));
  CHECK_THROWS(nilmin::parse_rat(""));
  CHECK_THROWS(nilmin::parse_rat("1/0"));
  CHECK_THROWS(nilmin::parse_rat("a/2"));
}

TEST_CASE("QRat field arithmetic in Q(sqrt(2))") {
  QRat a(Rat(1), Rat(1), 2);   // 1 + sqrt(2)
  QRat b(Rat(3), Rat(-1), 2);  // 3 - sqrt(2)
  CHECK((a + b) == QRat(Rat(4)));
  // (1+s)(3-s) = 3 - s + 3s - 2 = 1 + 2s
  CHECK((a * b) == QRat(Rat(1), Rat(2), 2));
  CHECK((a / a) == QRat(1));
  CHECK((a * a.inv()) == QRat(1));
  QRat zero = a - a;
  CHECK(zero.is_zero());
  CHECK(zero.is_rational());
}

TEST_CASE("QRat exact sign with opposite-sign parts") {
  // 3 - 2*sqrt(2) > 0 since 9 > 8
  CHECK(QRat(Rat(3), Rat(-2), 2).sign() == 1);
  // 2 - 2*sqrt(2) < 0
  CHECK(QRat(Rat(2), Rat(-2), 2).sign() == -1);
  CHECK(QRat(Rat(-3), Rat(2), 2).sign() == -1);
  CHECK(QRat(Rat(0), Rat(1), 5).sign() == 1);
}

TEST_CASE("QRat rejects mixed radicals") {
  QRat a(Rat(0), Rat(1), 2), b(Rat(0), Rat(1), 3);
  CHECK_THROWS(a + b);
  CHECK_NOTHROW(a + QRat(Rat(5)));
}

TEST_CASE("qrat_sqrt extracts square parts") {
  CHECK(nilmin::qrat_sqrt(QRat(Rat(9, 4))) == QRat(Rat(3, 2)));
  CHECK(nilmin::qrat_sqrt(QRat(Rat(1, 2))) == QRat(Rat(0), Rat(1, 2), 2));
  CHECK(nilmin::qrat_sqrt(QRat(Rat(12))) == QRat(Rat(0), Rat(2), 3));
  CHECK(nilmin::qrat_sqrt(QRat(Rat(0))).is_zero());
  // consistency: sqrt(x)^2 == x
  QRat s = nilmin::qrat_sqrt(QRat(Rat(41, 25)));
  CHECK((s * s) == QRat(Rat(41, 25)));
  CHECK_THROWS(nilmin::qrat_sqrt(QRat(Rat(-1))));
}

TEST_CASE("QComplex arithmetic") {
  QComplex i = nilmin::qc_i();
  CHECK((i * i) == QComplex(QRat(-1)));
  QComplex z(QRat(1), QRat(2));
  CHECK((z * z.conj()) == QComplex(QRat(5)));
  CHECK((z / z) == QComplex(QRat(1)));
}

TEST_CASE("to_double") {
  CHECK(QRat(Rat(1, 2)).to_double() == doctest::Approx(0.5));
  CHECK(QRat(Rat(0), Rat(1), 2).to_double() == doctest::Approx(1.41421356));
}
