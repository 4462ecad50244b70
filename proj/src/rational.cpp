#include "nilmin/rational.hpp"

#include <cctype>
#include <cmath>

namespace nilmin {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  bool seen_digit = false, seen_slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      seen_digit = true;
    } else if (s[i] == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw std::invalid_argument("bad rational literal: '" + s + "'");
    }
  }
  if (!seen_digit)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (sgn(r.get_den()) == 0)
    throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

// ---------------------------------------------------------------------------

namespace {

// Unifies the radicands of x and y; returns the common d.
long common_d(const QRat& x, const QRat& y) {
  if (x.d == y.d) return x.d;
  if (x.d == 0) return y.d;
  if (y.d == 0) return x.d;
  throw std::logic_error("QRat: arithmetic on different radicals sqrt(" +
                         std::to_string(x.d) + ") and sqrt(" +
                         std::to_string(y.d) + ")");
}

}  // namespace

int QRat::sign() const {
  int sa = sgn(a), sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against b^2 d; sign follows the larger term.
  Rat lhs = a * a, rhs = b * b * Rat(d);
  int c = cmp(lhs, rhs);
  if (c == 0) throw std::logic_error("QRat: radicand is a perfect square");
  return c > 0 ? sa : sb;
}

QRat& QRat::operator+=(const QRat& o) {
  d = common_d(*this, o);
  a += o.a;
  b += o.b;
  normalize();
  return *this;
}

QRat& QRat::operator-=(const QRat& o) {
  d = common_d(*this, o);
  a -= o.a;
  b -= o.b;
  normalize();
  return *this;
}

QRat& QRat::operator*=(const QRat& o) {
  long nd = common_d(*this, o);
  Rat na = a * o.a + b * o.b * Rat(nd);
  Rat nb = a * o.b + b * o.a;
  a = na;
  b = nb;
  d = nd;
  normalize();
  return *this;
}

QRat QRat::inv() const {
  if (is_zero()) throw std::domain_error("QRat: division by zero");
  Rat den = a * a - b * b * Rat(d);
  if (sgn(den) == 0) throw std::logic_error("QRat: radicand is a perfect square");
  return QRat(a / den, -b / den, d);
}

QRat& QRat::operator/=(const QRat& o) { return *this *= o.inv(); }

QRat operator+(QRat x, const QRat& y) { return x += y; }
QRat operator-(QRat x, const QRat& y) { return x -= y; }
QRat operator*(QRat x, const QRat& y) { return x *= y; }
QRat operator/(QRat x, const QRat& y) { return x /= y; }

double QRat::to_double() const {
  double v = a.get_d();
  if (sgn(b) != 0) v += b.get_d() * std::sqrt(static_cast<double>(d));
  return v;
}

std::string QRat::str() const {
  if (d == 0) return rat_str(a);
  std::string s = rat_str(a);
  if (sgn(b) >= 0) s += "+";
  s += rat_str(b) + "*sqrt(" + std::to_string(d) + ")";
  return s;
}

QRat qrat_sqrt(const QRat& x) {
  if (!x.is_rational()) throw std::domain_error("qrat_sqrt: nested radical");
  if (sgn(x.a) < 0) throw std::domain_error("qrat_sqrt: negative radicand");
  if (sgn(x.a) == 0) return QRat();
  // sqrt(p/q) = sqrt(p*q)/q.  Split p*q = m^2 * d with d squarefree.
  mpz_class pq = x.a.get_num() * x.a.get_den();
  mpz_class m = 1, rem = pq;
  for (mpz_class f = 2; f * f <= rem; ++f) {
    while (rem % (f * f) == 0) {
      rem /= f * f;
      m *= f;
    }
  }
  if (rem == 1) return QRat(Rat(m) / Rat(x.a.get_den()));
  if (!rem.fits_slong_p())
    throw std::domain_error("qrat_sqrt: radicand too large");
  Rat coeff = Rat(m) / Rat(x.a.get_den());
  return QRat(Rat(0), coeff, rem.get_si());
}

// ---------------------------------------------------------------------------

QComplex operator+(const QComplex& x, const QComplex& y) {
  return QComplex(x.re + y.re, x.im + y.im);
}
QComplex operator-(const QComplex& x, const QComplex& y) {
  return QComplex(x.re - y.re, x.im - y.im);
}
QComplex operator*(const QComplex& x, const QComplex& y) {
  return QComplex(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
}
QComplex operator/(const QComplex& x, const QComplex& y) {
  QRat n2 = y.norm2();
  if (n2.is_zero()) throw std::domain_error("QComplex: division by zero");
  QComplex num = x * y.conj();
  return QComplex(num.re / n2, num.im / n2);
}

std::string QComplex::str() const {
  if (im.is_zero()) return re.str();
  return "(" + re.str() + ")+(" + im.str() + ")*i";
}

}  // namespace nilmin
