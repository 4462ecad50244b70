// Exact scalar types used throughout the library.
//
// Rat   -- arbitrary-precision rational (GMP mpq_class).
// QRat  -- element of a real quadratic extension Q(sqrt(d)): a + b*sqrt(d)
//          with a, b rational and d a squarefree integer >= 2 (d == 0 and
//          b == 0 encode a plain rational).  All arithmetic is exact; mixing
//          two different radicals throws.
// QComplex -- complex numbers with QRat real/imaginary parts.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nilmin {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "p/q" or "-p/q".  Whitespace around the token is not accepted.
Rat parse_rat(const std::string& s);

std::string rat_str(const Rat& r);

inline double rat_double(const Rat& r) { return r.get_d(); }

inline int rat_sign(const Rat& r) { return sgn(r); }

// ---------------------------------------------------------------------------
// QRat
// ---------------------------------------------------------------------------

struct QRat {
  Rat a;        // rational part
  Rat b;        // coefficient of sqrt(d)
  long d = 0;   // 0 iff b == 0

  QRat() : a(0), b(0), d(0) {}
  QRat(long v) : a(v, 1), b(0), d(0) {}            // NOLINT(runtime/explicit)
  QRat(const Rat& v) : a(v), b(0), d(0) {}         // NOLINT(runtime/explicit)
  QRat(Rat ra, Rat rb, long rd) : a(std::move(ra)), b(std::move(rb)), d(rd) {
    normalize();
  }

  void normalize() {
    if (sgn(b) == 0) d = 0;
    if (d == 0 && sgn(b) != 0)
      throw std::logic_error("QRat: radical part without radicand");
  }

  bool is_rational() const { return d == 0; }
  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }

  // Exact sign of a + b*sqrt(d).
  int sign() const;

  QRat operator-() const { return QRat(-a, -b, d); }
  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);

  QRat inv() const;
  QRat conj() const { return QRat(a, -b, d); }  // a - b*sqrt(d)

  double to_double() const;
  std::string str() const;
};

QRat operator+(QRat x, const QRat& y);
QRat operator-(QRat x, const QRat& y);
QRat operator*(QRat x, const QRat& y);
QRat operator/(QRat x, const QRat& y);

inline bool operator==(const QRat& x, const QRat& y) {
  return (x - y).is_zero();
}
inline bool operator!=(const QRat& x, const QRat& y) { return !(x == y); }
inline bool operator<(const QRat& x, const QRat& y) {
  return (x - y).sign() < 0;
}
inline bool operator>(const QRat& x, const QRat& y) { return y < x; }
inline bool operator<=(const QRat& x, const QRat& y) { return !(y < x); }
inline bool operator>=(const QRat& x, const QRat& y) { return !(x < y); }

// Exact square root of a nonnegative rational, as an element of Q(sqrt(d)).
// Throws if x < 0 or if x carries a radical part already.
QRat qrat_sqrt(const QRat& x);

// ---------------------------------------------------------------------------
// QComplex
// ---------------------------------------------------------------------------

struct QComplex {
  QRat re, im;

  QComplex() = default;
  QComplex(QRat r) : re(std::move(r)) {}                    // NOLINT
  QComplex(long r) : re(r) {}                               // NOLINT
  QComplex(QRat r, QRat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  QComplex conj() const { return QComplex(re, -im); }
  QRat norm2() const { return re * re + im * im; }  // |z|^2
  QComplex operator-() const { return QComplex(-re, -im); }

  std::string str() const;
};

QComplex operator+(const QComplex& x, const QComplex& y);
QComplex operator-(const QComplex& x, const QComplex& y);
QComplex operator*(const QComplex& x, const QComplex& y);
QComplex operator/(const QComplex& x, const QComplex& y);
inline bool operator==(const QComplex& x, const QComplex& y) {
  return x.re == y.re && x.im == y.im;
}
inline bool operator!=(const QComplex& x, const QComplex& y) {
  return !(x == y);
}

inline QComplex qc_i() { return QComplex(QRat(0), QRat(1)); }

}  // namespace nilmin
