#include "nilmin/structeq.hpp"

#include <cctype>
#include <sstream>

namespace nilmin {

namespace {

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

enum class Tok { DW, WEDGE, NUMBER, IMAG, PLUS, MINUS, STAR, LPAREN, RPAREN,
                 EQUALS, SEP, END };

struct Token {
  Tok kind;
  int line = 1, col = 1;
  int index = 0;            // DW: k
  WedgeKey wedge;           // WEDGE
  Rat value;                // NUMBER
};

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "line " << line << ", col " << col << ": " << msg;
    throw std::runtime_error(os.str());
  }

  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  char take() {
    char c = s[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  Token next() {
    while (pos < s.size() && (peek() == ' ' || peek() == '\t' ||
                              peek() == '\r')) {
      take();
    }
    Token t;
    t.line = line;
    t.col = col;
    if (pos >= s.size()) {
      t.kind = Tok::END;
      return t;
    }
    char c = peek();
    if (c == '\n' || c == ';') {
      take();
      t.kind = Tok::SEP;
      return t;
    }
    switch (c) {
      case '+': take(); t.kind = Tok::PLUS; return t;
      case '-': take(); t.kind = Tok::MINUS; return t;
      case '*': take(); t.kind = Tok::STAR; return t;
      case '(': take(); t.kind = Tok::LPAREN; return t;
      case ')': take(); t.kind = Tok::RPAREN; return t;
      case '=': take(); t.kind = Tok::EQUALS; return t;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (std::isdigit(static_cast<unsigned char>(peek()))) num += take();
      if (peek() == '/') {
        num += take();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
          fail("expected digits after '/'");
        while (std::isdigit(static_cast<unsigned char>(peek()))) num += take();
      }
      t.kind = Tok::NUMBER;
      t.value = parse_rat(num);
      return t;
    }
    if (c == 'i') {
      take();
      t.kind = Tok::IMAG;
      return t;
    }
    if (c == 'd') {
      take();
      if (peek() != 'w') fail("expected 'w' after 'd'");
      take();
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected digit after 'dw'");
      t.kind = Tok::DW;
      t.index = take() - '0';
      if (t.index < 1) fail("dw index must be >= 1");
      return t;
    }
    if (c == 'w') {
      take();
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected digit after 'w'");
      int a = take() - '0';
      bool conj = false;
      if (peek() == '~') {
        take();
        conj = true;
      }
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected second index in wedge");
      int b = take() - '0';
      if (a < 1 || b < 1) fail("wedge indices must be >= 1");
      t.kind = Tok::WEDGE;
      t.wedge = {conj, a, b};
      return t;
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

// ---------------------------------------------------------------------------
// Parser: expression values are scalar + linear combination of wedges.
// ---------------------------------------------------------------------------

struct Value {
  QComplex scalar;
  std::map<WedgeKey, QComplex> terms;

  bool pure_scalar() const { return terms.empty(); }
};

struct Parser {
  Lexer lex;
  Token cur;

  explicit Parser(const std::string& text) : lex(text) { cur = lex.next(); }

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "line " << cur.line << ", col " << cur.col << ": " << msg;
    throw std::runtime_error(os.str());
  }

  void advance() { cur = lex.next(); }

  Value parse_factor() {
    Value v;
    switch (cur.kind) {
      case Tok::NUMBER:
        v.scalar = QComplex(QRat(cur.value));
        advance();
        return v;
      case Tok::IMAG:
        v.scalar = qc_i();
        advance();
        return v;
      case Tok::WEDGE: {
        WedgeKey k = cur.wedge;
        advance();
        if (!k.conj_second && k.a == k.b) fail("wedge wAA is zero");
        QComplex coef(QRat(1));
        if (!k.conj_second && k.a > k.b) {
          std::swap(k.a, k.b);
          coef = QComplex(QRat(-1));
        }
        v.terms[k] = coef;
        return v;
      }
      case Tok::LPAREN: {
        advance();
        Value inner = parse_expr();
        if (cur.kind != Tok::RPAREN) fail("expected ')'");
        advance();
        return inner;
      }
      default:
        fail("expected number, i, wedge, or '('");
    }
  }

  static Value mul(const Value& x, const Value& y, Parser& p) {
    if (!x.pure_scalar() && !y.pure_scalar())
      p.fail("product of two forms is not supported");
    const Value& sc = x.pure_scalar() ? x : y;
    const Value& other = x.pure_scalar() ? y : x;
    Value out;
    out.scalar = sc.scalar * other.scalar;
    for (const auto& [k, c] : other.terms) out.terms[k] = sc.scalar * c;
    return out;
  }

  Value parse_term() {
    Value v = parse_factor();
    while (cur.kind == Tok::STAR) {
      advance();
      Value f = parse_factor();
      v = mul(v, f, *this);
    }
    return v;
  }

  Value parse_expr() {
    int sign = 1;
    if (cur.kind == Tok::PLUS) advance();
    else if (cur.kind == Tok::MINUS) {
      sign = -1;
      advance();
    }
    Value acc = parse_term();
    if (sign < 0) acc = negate(acc);
    while (cur.kind == Tok::PLUS || cur.kind == Tok::MINUS) {
      bool minus = cur.kind == Tok::MINUS;
      advance();
      Value t = parse_term();
      if (minus) t = negate(t);
      add_into(acc, t);
    }
    return acc;
  }

  static Value negate(Value v) {
    v.scalar = -v.scalar;
    for (auto& [k, c] : v.terms) c = -c;
    return v;
  }

  void add_into(Value& acc, const Value& t) {
    if (!t.scalar.is_zero() && !t.terms.empty())
      fail("cannot add a scalar to a form");
    if (!t.scalar.is_zero() && !acc.terms.empty())
      fail("cannot add a scalar to a form");
    if (!acc.scalar.is_zero() && !t.terms.empty())
      fail("cannot add a scalar to a form");
    acc.scalar = acc.scalar + t.scalar;
    for (const auto& [k, c] : t.terms) {
      auto it = acc.terms.find(k);
      if (it == acc.terms.end())
        acc.terms[k] = c;
      else
        it->second = it->second + c;
    }
  }
};

}  // namespace

StructureEquations parse_equations(const std::string& text) {
  Parser p(text);
  std::map<int, std::map<WedgeKey, QComplex>> defs;
  int max_index = 0;
  while (p.cur.kind != Tok::END) {
    if (p.cur.kind == Tok::SEP) {
      p.advance();
      continue;
    }
    if (p.cur.kind != Tok::DW) p.fail("expected 'dwK = ...'");
    int k = p.cur.index;
    if (defs.count(k)) p.fail("duplicate definition of dw" + std::to_string(k));
    max_index = std::max(max_index, k);
    p.advance();
    if (p.cur.kind != Tok::EQUALS) p.fail("expected '='");
    p.advance();
    Value v = p.parse_expr();
    if (p.cur.kind != Tok::SEP && p.cur.kind != Tok::END)
      p.fail("expected ';' or end of line");
    if (v.pure_scalar() && !v.scalar.is_zero())
      p.fail("dw must be a 2-form or 0");
    std::map<WedgeKey, QComplex> clean;
    for (const auto& [key, c] : v.terms) {
      if (c.is_zero()) continue;
      max_index = std::max({max_index, key.a, key.b});
      clean[key] = c;
    }
    defs[k] = std::move(clean);
  }
  StructureEquations eqs;
  eqs.n = max_index;
  if (eqs.n < 1) throw std::runtime_error("no equations given");
  eqs.d.resize(eqs.n);
  for (auto& [k, terms] : defs) {
    if (k > eqs.n) throw std::runtime_error("dw index out of range");
    eqs.d[k - 1] = std::move(terms);
  }
  return eqs;
}

RealificationResult realify(const StructureEquations& eqs) {
  const int n = eqs.n;
  LieBracket mu(2 * n);

  for (int k = 1; k <= n; ++k) {
    // Accumulate dw^k as a complex-valued real 2-form: pair (x < y) -> coeff.
    std::map<std::pair<int, int>, QComplex> f;
    auto add = [&](int x, int y, const QComplex& c) {
      if (x == y) return;
      if (x < y) {
        auto& v = f[{x, y}];
        v = v + c;
      } else {
        auto& v = f[{y, x}];
        v = v - c;
      }
    };
    for (const auto& [key, c] : eqs.d[k - 1]) {
      int a = 2 * key.a - 1, a2 = 2 * key.a;
      int b = 2 * key.b - 1, b2 = 2 * key.b;
      if (key.a > n || key.b > n)
        throw std::runtime_error("wedge index out of range");
      QComplex ic = c * qc_i();
      if (!key.conj_second) {
        // w^a ^ w^b = (e^a e^b - e^a2 e^b2) - i (e^a e^b2 + e^a2 e^b)
        add(a, b, c);
        add(a2, b2, -c);
        add(a, b2, -ic);
        add(a2, b, -ic);
      } else if (key.a == key.b) {
        // w^a ^ conj(w^a) = 2i e^a e^a2
        add(a, a2, ic + ic);
      } else {
        // w^a ^ conj(w^b) = (e^a e^b + e^a2 e^b2) + i (e^a e^b2 - e^a2 e^b)
        add(a, b, c);
        add(a2, b2, c);
        add(a, b2, ic);
        add(a2, b, -ic);
      }
    }
    // dw^k = de^{2k-1} - i de^{2k};  de^m = sum(-c_ij^m) e^i ^ e^j.
    for (const auto& [pr, c] : f) {
      if (!c.re.is_zero()) mu.add(pr.first, pr.second, 2 * k - 1, -c.re);
      if (!c.im.is_zero()) mu.add(pr.first, pr.second, 2 * k, c.im);
    }
  }

  ValidationReport rep = validate(mu);
  if (!rep.jacobi)
    throw std::runtime_error("d^2 != 0: not a Lie algebra");
  if (!rep.integrable)
    throw std::logic_error("realify: integrability failed unexpectedly");
  RealificationResult out;
  out.bracket = std::move(mu);
  return out;
}

std::optional<Mat<QRat>> find_uniform_scaling(const LieBracket& from,
                                              const LieBracket& to) {
  if (from.dim != to.dim) return std::nullopt;
  if (from.is_zero() && to.is_zero())
    return Mat<QRat>::identity(from.dim);
  if (from.entries.size() != to.entries.size()) return std::nullopt;
  // act(rI, from) = (1/r) from, so r = c_from / c_to on every entry.
  auto itf = from.entries.begin();
  auto itt = to.entries.begin();
  if (itf->first != itt->first) return std::nullopt;
  QRat r = itf->second / itt->second;
  if (r.is_zero()) return std::nullopt;
  Mat<QRat> g = Mat<QRat>::identity(from.dim).scaled(r);
  if (act(g, from) == to) return g;
  return std::nullopt;
}

}  // namespace nilmin
