#include "nilmin/catalog.hpp"

#include <sstream>

namespace nilmin {

namespace {

Rat P(const Params& p, const std::string& k) {
  auto it = p.find(k);
  if (it == p.end())
    throw std::invalid_argument("missing parameter '" + k + "'");
  return it->second;
}

struct E {
  int i, j, k;
  QRat c;
};

LieBracket build(std::initializer_list<E> es) {
  LieBracket mu(6);
  for (const auto& e : es)
    if (!e.c.is_zero()) mu.set(e.i, e.j, e.k, e.c);
  return mu;
}

Params pm(std::initializer_list<std::pair<std::string, Rat>> kv) {
  Params p;
  for (auto& [k, v] : kv) p[k] = v;
  return p;
}

Rat Q(const char* s) { return parse_rat(s); }

// h12..h16 share one bracket shape; c is the fourth coefficient (h12
// substitutes c = sqrt((s-1)^2 + t^2), kept exact in Q(sqrt(d))).
LieBracket h12_shape(const Rat& s, const Rat& t, const QRat& c) {
  QRat qs(s), qt(t);
  return build({{1, 2, 4, QRat(2)},
                {1, 3, 5, -(qs + QRat(1) - c)},
                {1, 3, 6, qt},
                {1, 4, 5, qt},
                {1, 4, 6, qs - QRat(1) + c},
                {2, 3, 5, -qt},
                {2, 3, 6, -(qs + QRat(1) + c)},
                {2, 4, 5, -(qs - QRat(1) - c)},
                {2, 4, 6, qt}});
}

std::optional<std::string> h13_style_domain(const Params& p, int quartic_sign) {
  Rat s = P(p, "s"), t = P(p, "t"), c = P(p, "c");
  if (sgn(c) < 0) return "c >= 0";
  Rat alpha2 = (s - 1) * (s - 1) + t * t;
  if (c * c == alpha2) return "c != sqrt((s-1)^2+t^2)";
  Rat beta2 = s * s + t * t;
  if (sgn(c) == 0 && beta2 == Rat(1)) return "(c, beta) != (0, 1)";
  Rat quartic = c * c * c * c - 2 * (beta2 + 1) * c * c +
                (beta2 - 1) * (beta2 - 1);
  int qs = sgn(quartic);
  if (quartic_sign < 0 && qs >= 0)
    return "c^4 - 2(beta^2+1)c^2 + (beta^2-1)^2 < 0";
  if (quartic_sign == 0 && qs != 0)
    return "c^4 - 2(beta^2+1)c^2 + (beta^2-1)^2 = 0";
  if (quartic_sign > 0 && qs <= 0)
    return "c^4 - 2(beta^2+1)c^2 + (beta^2-1)^2 > 0";
  return std::nullopt;
}

Expected h13_style_expected(const Params& p) {
  Rat s = P(p, "s"), t = P(p, "t"), c = P(p, "c");
  return {true, c * c + s * s + t * t == Rat(1)};
}

std::vector<Family> make_families() {
  std::vector<Family> fs;

  // -- h2: [e1,e2]=e6, [e1,e3]=-e5, [e2,e3]=-e6, [e3,e4]=s e5 + t e6 --------
  fs.push_back(Family{
      "h2",
      {"s", "t"},
      "s > 0",
      [](const Params& p) -> std::optional<std::string> {
        if (sgn(P(p, "s")) <= 0) return "s > 0";
        return std::nullopt;
      },
      [](const Params& p) {
        QRat s(P(p, "s")), t(P(p, "t"));
        return build({{1, 2, 6, QRat(1)},
                      {1, 3, 5, QRat(-1)},
                      {2, 3, 6, QRat(-1)},
                      {3, 4, 5, s},
                      {3, 4, 6, t}});
      },
      [](const Params&) { return Expected{true, false}; },
      {pm({{"s", Q("1")}, {"t", Q("0")}}),
       pm({{"s", Q("1/2")}, {"t", Q("1/2")}}),
       pm({{"s", Q("1/4")}, {"t", Q("-1")}}),
       pm({{"s", Q("2")}, {"t", Q("3")}})},
  });

  // -- h4: as h2 with [e3,e4] = t e6, t != 0 --------------------------------
  fs.push_back(Family{
      "h4",
      {"t"},
      "t != 0",
      [](const Params& p) -> std::optional<std::string> {
        if (sgn(P(p, "t")) == 0) return "t != 0";
        return std::nullopt;
      },
      [](const Params& p) {
        QRat t(P(p, "t"));
        return build({{1, 2, 6, QRat(1)},
                      {1, 3, 5, QRat(-1)},
                      {2, 3, 6, QRat(-1)},
                      {3, 4, 6, t}});
      },
      [](const Params& p) {
        Rat t = P(p, "t");
        return Expected{t != Q("1/4"), t == Q("-1")};
      },
      {pm({{"t", Q("-1")}}), pm({{"t", Q("1/4")}}), pm({{"t", Q("1")}}),
       pm({{"t", Q("2")}}), pm({{"t", Q("-1/2")}})},
  });

  // -- h5 row 1 (parameterless) ---------------------------------------------
  fs.push_back(Family{
      "h5a",
      {},
      "no parameters",
      [](const Params&) -> std::optional<std::string> { return std::nullopt; },
      [](const Params&) {
        return build({{1, 3, 5, QRat(-1)},
                      {1, 4, 6, QRat(-1)},
                      {2, 3, 6, QRat(-1)},
                      {2, 4, 5, QRat(1)}});
      },
      [](const Params&) { return Expected{true, true}; },
      {pm({})},
  });

  // -- h5 row 2 --------------------------------------------------------------
  fs.push_back(Family{
      "h5b",
      {"s", "t"},
      "s >= 0, 4s^2 < 1 + 4t",
      [](const Params& p) -> std::optional<std::string> {
        Rat s = P(p, "s"), t = P(p, "t");
        if (sgn(s) < 0) return "s >= 0";
        if (!(4 * s * s < 1 + 4 * t)) return "4s^2 < 1 + 4t";
        return std::nullopt;
      },
      [](const Params& p) {
        QRat s(P(p, "s")), t(P(p, "t"));
        return build({{1, 2, 6, QRat(2)},
                      {1, 3, 5, QRat(-1)},
                      {1, 4, 6, QRat(-1)},
                      {2, 3, 6, QRat(-1)},
                      {2, 4, 5, QRat(1)},
                      {3, 4, 5, QRat(2) * s},
                      {3, 4, 6, QRat(2) * t}});
      },
      [](const Params& p) {
        Rat s = P(p, "s"), t = P(p, "t");
        bool exist = sgn(s) != 0 || sgn(t) != 0;
        return Expected{exist, s * s + t * t == Rat(1)};
      },
      {pm({{"s", Q("0")}, {"t", Q("0")}}), pm({{"s", Q("0")}, {"t", Q("1")}}),
       pm({{"s", Q("1/2")}, {"t", Q("3/4")}}),
       pm({{"s", Q("1")}, {"t", Q("1")}}),
       pm({{"s", Q("0")}, {"t", Q("-1/5")}})},
  });

  // -- h5 row 3 --------------------------------------------------------------
  fs.push_back(Family{
      "h5c",
      {"s", "t"},
      "s >= 0 and one of: 0<t^2<1/2 & s<t^2/2; 1/2<=t^2<1 & s<(1-t^2)/2; "
      "t^2>1 & s<(t^2-1)/2",
      [](const Params& p) -> std::optional<std::string> {
        Rat s = P(p, "s"), t = P(p, "t");
        if (sgn(s) < 0) return "s >= 0";
        Rat t2 = t * t;
        bool r1 = sgn(t2) > 0 && t2 < Q("1/2") && 2 * s < t2;
        bool r2 = t2 >= Q("1/2") && t2 < Rat(1) && 2 * s < 1 - t2;
        bool r3 = t2 > Rat(1) && 2 * s < t2 - 1;
        if (!(r1 || r2 || r3)) return "(s, t) in one of the three regions";
        return std::nullopt;
      },
      [](const Params& p) {
        QRat s(P(p, "s")), t(P(p, "t"));
        return build({{1, 2, 6, QRat(2)},
                      {1, 3, 5, -(t + QRat(1))},
                      {1, 4, 6, t - QRat(1)},
                      {2, 3, 6, -(t + QRat(1))},
                      {2, 4, 5, QRat(1) - t},
                      {3, 4, 5, QRat(2) * s}});
      },
      [](const Params&) { return Expected{true, false}; },
      {pm({{"s", Q("0")}, {"t", Q("1/2")}}),
       pm({{"s", Q("1/16")}, {"t", Q("1/2")}}),
       pm({{"s", Q("0")}, {"t", Q("3/4")}}),
       pm({{"s", Q("1/8")}, {"t", Q("3/4")}}),
       pm({{"s", Q("1")}, {"t", Q("2")}}),
       pm({{"s", Q("0")}, {"t", Q("-2")}})},
  });

  // -- h6 ---------------------------------------------------------------------
  fs.push_back(Family{
      "h6",
      {},
      "no parameters",
      [](const Params&) -> std::optional<std::string> { return std::nullopt; },
      [](const Params&) {
        return build({{1, 2, 6, QRat(1)},
                      {1, 3, 5, QRat(-1)},
                      {2, 3, 6, QRat(-1)}});
      },
      [](const Params&) { return Expected{true, false}; },
      {pm({})},
  });

  // -- h7 ---------------------------------------------------------------------
  fs.push_back(Family{
      "h7",
      {},
      "no parameters",
      [](const Params&) -> std::optional<std::string> { return std::nullopt; },
      [](const Params&) {
        return build({{1, 2, 4, QRat(1)},
                      {1, 3, 5, QRat(-1)},
                      {2, 3, 6, QRat(-1)}});
      },
      [](const Params&) { return Expected{true, true}; },
      {pm({})},
  });

  // -- h10 --------------------------------------------------------------------
  fs.push_back(Family{
      "h10",
      {},
      "no parameters",
      [](const Params&) -> std::optional<std::string> { return std::nullopt; },
      [](const Params&) {
        return build({{1, 2, 4, QRat(1)},
                      {2, 3, 6, QRat(-1)},
                      {2, 4, 5, QRat(1)}});
      },
      [](const Params&) { return Expected{true, true}; },
      {pm({})},
  });

  // -- h11 row 1: t < 1, t != 0 ----------------------------------------------
  fs.push_back(Family{
      "h11a",
      {"t"},
      "t < 1, t != 0",
      [](const Params& p) -> std::optional<std::string> {
        Rat t = P(p, "t");
        if (!(t < Rat(1))) return "t < 1";
        if (sgn(t) == 0) return "t != 0";
        return std::nullopt;
      },
      [](const Params& p) {
        QRat t(P(p, "t"));
        return build({{1, 2, 4, QRat(1)},
                      {1, 3, 5, -t},
                      {2, 3, 6, QRat(-1)},
                      {2, 4, 5, QRat(1) - t}});
      },
      [](const Params&) { return Expected{true, false}; },
      {pm({{"t", Q("-1")}}), pm({{"t", Q("1/2")}}), pm({{"t", Q("-2")}})},
  });

  // -- h11 row 2: t > 1 (the worked example family mu_t) ----------------------
  fs.push_back(Family{
      "h11b",
      {"t"},
      "t > 1",
      [](const Params& p) -> std::optional<std::string> {
        if (!(P(p, "t") > Rat(1))) return "t > 1";
        return std::nullopt;
      },
      [](const Params& p) {
        QRat t(P(p, "t"));
        return build({{1, 2, 4, QRat(1)},
                      {1, 3, 5, QRat(-1)},
                      {1, 4, 6, t - QRat(1)},
                      {2, 3, 6, -t}});
      },
      [](const Params&) { return Expected{true, false}; },
      {pm({{"t", Q("2")}}), pm({{"t", Q("3")}}), pm({{"t", Q("3/2")}})},
  });

  // -- h12: c = alpha = sqrt((s-1)^2 + t^2), t != 0 ---------------------------
  fs.push_back(Family{
      "h12",
      {"s", "t"},
      "t != 0",
      [](const Params& p) -> std::optional<std::string> {
        if (sgn(P(p, "t")) == 0) return "t != 0";
        return std::nullopt;
      },
      [](const Params& p) {
        Rat s = P(p, "s"), t = P(p, "t");
        QRat alpha = qrat_sqrt(QRat((s - 1) * (s - 1) + t * t));
        return h12_shape(s, t, alpha);
      },
      [](const Params& p) {
        Rat s = P(p, "s"), t = P(p, "t");
        return Expected{true,
                        (s - Q("1/2")) * (s - Q("1/2")) + t * t == Q("1/4")};
      },
      {pm({{"s", Q("1")}, {"t", Q("1")}}),
       pm({{"s", Q("1/2")}, {"t", Q("1/2")}}),
       pm({{"s", Q("1/2")}, {"t", Q("-1/2")}}),
       pm({{"s", Q("5/2")}, {"t", Q("2")}}),
       pm({{"s", Q("-2")}, {"t", Q("4")}})},
  });

  // -- h13/h14/h15: shared shape, split by the sign of the quartic ------------
  fs.push_back(Family{
      "h13",
      {"s", "t", "c"},
      "c >= 0, c != alpha, (c,beta) != (0,1), quartic < 0",
      [](const Params& p) { return h13_style_domain(p, -1); },
      [](const Params& p) {
        return h12_shape(P(p, "s"), P(p, "t"), QRat(P(p, "c")));
      },
      h13_style_expected,
      {pm({{"s", Q("0")}, {"t", Q("1/2")}, {"c", Q("1")}}),
       pm({{"s", Q("0")}, {"t", Q("4/5")}, {"c", Q("3/5")}}),
       pm({{"s", Q("1/2")}, {"t", Q("1/2")}, {"c", Q("1/2")}})},
  });
  fs.push_back(Family{
      "h14",
      {"s", "t", "c"},
      "c >= 0, c != alpha, (c,beta) != (0,1), quartic = 0",
      [](const Params& p) { return h13_style_domain(p, 0); },
      [](const Params& p) {
        return h12_shape(P(p, "s"), P(p, "t"), QRat(P(p, "c")));
      },
      h13_style_expected,
      {pm({{"s", Q("3/5")}, {"t", Q("4/5")}, {"c", Q("2")}}),
       pm({{"s", Q("0")}, {"t", Q("4/5")}, {"c", Q("1/5")}}),
       pm({{"s", Q("3/5")}, {"t", Q("0")}, {"c", Q("8/5")}})},
  });
  fs.push_back(Family{
      "h15",
      {"s", "t", "c"},
      "c >= 0, c != alpha, (c,beta) != (0,1), quartic > 0",
      [](const Params& p) { return h13_style_domain(p, 1); },
      [](const Params& p) {
        return h12_shape(P(p, "s"), P(p, "t"), QRat(P(p, "c")));
      },
      h13_style_expected,
      {pm({{"s", Q("0")}, {"t", Q("0")}, {"c", Q("2")}}),
       pm({{"s", Q("0")}, {"t", Q("2")}, {"c", Q("4")}}),
       pm({{"s", Q("1")}, {"t", Q("1")}, {"c", Q("3")}})},
  });

  // -- h16: h13 shape at c = 0 on the circle s^2 + t^2 = 1 --------------------
  fs.push_back(Family{
      "h16",
      {"s", "t"},
      "s^2 + t^2 = 1, (s, t) != (1, 0)",
      [](const Params& p) -> std::optional<std::string> {
        Rat s = P(p, "s"), t = P(p, "t");
        if (s * s + t * t != Rat(1)) return "s^2 + t^2 = 1";
        if (s == Rat(1) && sgn(t) == 0) return "(s, t) != (1, 0)";
        return std::nullopt;
      },
      [](const Params& p) {
        return h12_shape(P(p, "s"), P(p, "t"), QRat(0));
      },
      [](const Params&) { return Expected{true, true}; },
      {pm({{"s", Q("0")}, {"t", Q("1")}}),
       pm({{"s", Q("3/5")}, {"t", Q("4/5")}}),
       pm({{"s", Q("-1")}, {"t", Q("0")}}),
       pm({{"s", Q("4/5")}, {"t", Q("-3/5")}})},
  });

  // -- h19^-: sign parameter +-1 ----------------------------------------------
  fs.push_back(Family{
      "h19minus",
      {"sign"},
      "sign in {1, -1}",
      [](const Params& p) -> std::optional<std::string> {
        Rat s = P(p, "sign");
        if (s != Rat(1) && s != Rat(-1)) return "sign in {1, -1}";
        return std::nullopt;
      },
      [](const Params& p) {
        QRat e(P(p, "sign"));
        return build({{1, 3, 6, e},
                      {1, 5, 3, QRat(-1)},
                      {2, 4, 6, e},
                      {2, 5, 4, QRat(-1)}});
      },
      [](const Params&) { return Expected{true, true}; },
      {pm({{"sign", Q("1")}}), pm({{"sign", Q("-1")}})},
  });

  // -- h26^+: sign parameter +-1; no minimal metric ---------------------------
  fs.push_back(Family{
      "h26plus",
      {"sign"},
      "sign in {1, -1}",
      [](const Params& p) -> std::optional<std::string> {
        Rat s = P(p, "sign");
        if (s != Rat(1) && s != Rat(-1)) return "sign in {1, -1}";
        return std::nullopt;
      },
      [](const Params& p) {
        QRat e(P(p, "sign"));
        return build({{1, 2, 5, QRat(1)},
                      {1, 3, 6, e},
                      {1, 5, 3, QRat(-1)},
                      {2, 4, 6, e},
                      {2, 5, 4, QRat(-1)}});
      },
      [](const Params&) { return Expected{false, std::nullopt}; },
      {pm({{"sign", Q("1")}}), pm({{"sign", Q("-1")}})},
  });

  return fs;
}

}  // namespace

const std::vector<Family>& families() {
  static const std::vector<Family> fs = make_families();
  return fs;
}

const Family& family(const std::string& name) {
  for (const auto& f : families())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::pair<LieBracket, Expected> instantiate(const std::string& name,
                                            const Params& params) {
  const Family& f = family(name);
  if (auto violation = f.domain_violation(params))
    throw std::invalid_argument("out of domain for " + name + ": " +
                                *violation);
  return {f.make(params), f.expected(params)};
}

std::string params_str(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p) {
    if (!s.empty()) s += ";";
    s += k + "=" + rat_str(v);
  }
  return s;
}

TableReport sweep(const std::string& name, const std::vector<Params>& grid,
                  int samples, std::uint64_t seed) {
  const Family& f = family(name);
  TableReport rep;
  AnalysisOptions opts;
  opts.samples = samples;
  opts.seed = seed;
  for (const auto& p : grid) {
    TableRow row;
    row.family = name;
    row.params = p;
    if (auto violation = f.domain_violation(p)) {
      row.note = "skipped (out of domain: " + *violation + ")";
      ++rep.skipped;
      rep.rows.push_back(row);
      continue;
    }
    Expected want = f.expected(p);
    row.existence_expected = want.existence;
    row.minimal_expected = want.canonical_minimal;
    AnalysisReport ar = analyze(f.make(p), opts);
    if (!ar.valid) {
      row.note = "invalid algebra (transcription error)";
      ++rep.mismatches_existence;
      rep.rows.push_back(row);
      continue;
    }
    row.step = ar.validation.step.value_or(0);
    row.jnice_method = jnice_method_name(ar.jnice.method);
    row.normalized = ar.normalized;
    row.inconclusive = ar.verdict == Verdict::Inconclusive;
    row.existence_computed = ar.verdict == Verdict::MinimalMetricExists;
    row.minimal_computed = ar.soliton ? std::optional<bool>(ar.soliton->exists)
                                      : std::nullopt;
    bool ok_exist =
        !row.inconclusive && row.existence_computed == row.existence_expected;
    bool ok_min = !row.minimal_expected.has_value() ||
                  (row.minimal_computed.has_value() &&
                   *row.minimal_computed == *row.minimal_expected);
    if (!ok_exist) ++rep.mismatches_existence;
    if (!ok_min) ++rep.mismatches_minimal;
    if (row.inconclusive) ++rep.inconclusive_count;
    row.match = ok_exist && ok_min;
    rep.rows.push_back(row);
  }
  return rep;
}

TableReport reproduce_tables(int samples, std::uint64_t seed) {
  TableReport rep;
  for (const auto& f : families()) {
    TableReport part = sweep(f.name, f.default_grid, samples, seed);
    rep.mismatches_existence += part.mismatches_existence;
    rep.mismatches_minimal += part.mismatches_minimal;
    rep.inconclusive_count += part.inconclusive_count;
    rep.skipped += part.skipped;
    for (auto& r : part.rows) rep.rows.push_back(std::move(r));
  }
  return rep;
}

namespace {

std::string opt_bool(const std::optional<bool>& b) {
  if (!b) return "-";
  return *b ? "true" : "false";
}

}  // namespace

std::string table_csv(const TableReport& rep) {
  std::ostringstream os;
  os << "family,params,step,jnice_method,existence_computed,"
        "existence_expected,canonical_minimal_computed,"
        "canonical_minimal_expected,match\n";
  for (const auto& r : rep.rows) {
    if (!r.note.empty()) {
      os << r.family << "," << params_str(r.params) << ",,,,,,," << r.note
         << "\n";
      continue;
    }
    os << r.family << "," << params_str(r.params) << "," << r.step << ","
       << r.jnice_method << (r.normalized ? "+normalized" : "") << ","
       << (r.existence_computed ? "true" : "false") << ","
       << (r.existence_expected ? "true" : "false") << ","
       << opt_bool(r.minimal_computed) << "," << opt_bool(r.minimal_expected)
       << "," << (r.match ? "true" : "false") << "\n";
  }
  return os.str();
}

nlohmann::ordered_json table_json(const TableReport& rep) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : rep.rows) {
    nlohmann::ordered_json row;
    row["family"] = r.family;
    nlohmann::ordered_json ps;
    for (const auto& [k, v] : r.params) ps[k] = rat_str(v);
    row["params"] = ps;
    if (!r.note.empty()) {
      row["note"] = r.note;
      rows.push_back(row);
      continue;
    }
    row["step"] = r.step;
    row["jnice_method"] = r.jnice_method;
    row["normalized"] = r.normalized;
    row["existence_computed"] = r.existence_computed;
    row["existence_expected"] = r.existence_expected;
    row["canonical_minimal_computed"] = opt_bool(r.minimal_computed);
    row["canonical_minimal_expected"] = opt_bool(r.minimal_expected);
    row["match"] = r.match;
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["mismatches_existence"] = rep.mismatches_existence;
  j["mismatches_minimal"] = rep.mismatches_minimal;
  j["inconclusive"] = rep.inconclusive_count;
  j["skipped"] = rep.skipped;
  return j;
}

}  // namespace nilmin
