#include "nilmin/analysis.hpp"

#include <sstream>

namespace nilmin {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::MinimalMetricExists: return "MinimalMetricExists";
    case Verdict::NoMinimalMetric: return "NoMinimalMetric";
    case Verdict::AbelianFlat: return "AbelianFlat";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

AnalysisReport analyze(const LieBracket& mu, const AnalysisOptions& opts,
                       const std::string& name) {
  AnalysisReport rep;
  rep.name = name;
  rep.input = mu;
  rep.analyzed = mu;
  rep.validation = validate(mu);
  rep.valid = rep.validation.ok();
  if (!rep.valid) return rep;

  if (mu.is_zero()) {
    // Flat metric; condition (iii) holds with c = 0, D = 0.
    rep.verdict = Verdict::AbelianFlat;
    RicciData rd = ricci_complexified(mu);
    rep.ricci = rd;
    return rep;
  }

  rep.weights = weight_support(mu);
  rep.jnice = jnice_status(mu, opts.samples, opts.seed);
  if (rep.jnice.method == JNiceMethod::Inconclusive) {
    if (auto norm = jnice_normalize(mu, opts.samples, opts.seed)) {
      rep.normalized = true;
      rep.normalizer = norm->g;
      rep.normalizer_route = norm->route;
      rep.analyzed = norm->bracket;
      rep.jnice = norm->status;
      rep.weights = weight_support(rep.analyzed);
    }
  }

  if (rep.jnice.method != JNiceMethod::Inconclusive) {
    rep.gram = gram_matrix(rep.weights);
    rep.feasibility = solve_positive(*rep.gram);
    rep.verdict = rep.feasibility->status == FeasStatus::Infeasible
                      ? Verdict::NoMinimalMetric
                      : Verdict::MinimalMetricExists;
  } else {
    rep.verdict = Verdict::Inconclusive;
  }

  RicciData rd = ricci_complexified(mu);
  rep.ricci = rd;
  for (int a = 0; a < mu.dim; ++a)
    for (int b = 0; b < mu.dim; ++b)
      rep.tr_ricc_sq += rd.ric_c(a, b) * rd.ric_c(b, a);
  rep.soliton = soliton_decomposition(mu);
  return rep;
}

namespace {

nlohmann::ordered_json qrat_json(const QRat& v) { return v.str(); }

nlohmann::ordered_json matrix_json(const Mat<QRat>& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.r; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < m.c; ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

nlohmann::ordered_json bracket_json(const LieBracket& mu) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [key, c] : mu.entries) {
    nlohmann::ordered_json e;
    e["i"] = key[0];
    e["j"] = key[1];
    e["k"] = key[2];
    e["c"] = c.str();
    arr.push_back(e);
  }
  return arr;
}

}  // namespace

nlohmann::ordered_json report_json(const AnalysisReport& rep) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["name"] = rep.name;
  j["dim"] = rep.input.dim;
  j["input_brackets"] = bracket_json(rep.input);

  nlohmann::ordered_json v;
  v["antisymmetric"] = rep.validation.antisymmetric;
  v["jacobi"] = rep.validation.jacobi;
  if (rep.validation.jacobi_failure) {
    const auto& f = *rep.validation.jacobi_failure;
    v["jacobi_failure"] = {f[0], f[1], f[2]};
  }
  v["nilpotent"] = rep.validation.nilpotent;
  if (rep.validation.step) v["step"] = *rep.validation.step;
  v["integrable"] = rep.validation.integrable;
  if (rep.validation.integrability_failure) {
    const auto& f = *rep.validation.integrability_failure;
    v["integrability_failure"] = {f[0], f[1]};
  }
  v["abelian_complex"] = rep.validation.abelian_complex;
  j["validation"] = v;

  if (rep.valid && rep.verdict != Verdict::AbelianFlat) {
    nlohmann::ordered_json w = nlohmann::ordered_json::array();
    for (const auto& row : rep.weights) {
      nlohmann::ordered_json r;
      r["weight"] = row.w.v;
      r["source"] = {row.source[0], row.source[1], row.source[2]};
      w.push_back(r);
    }
    j["weights"] = w;
    nlohmann::ordered_json jn;
    jn["method"] = jnice_method_name(rep.jnice.method);
    if (rep.jnice.method == JNiceMethod::DiagonalityEvidence) {
      jn["samples"] = rep.jnice.samples;
      jn["seed"] = rep.jnice.seed;
      jn["note"] = "criterion applied under probabilistic J-nice evidence";
    }
    jn["normalized"] = rep.normalized;
    if (rep.normalized) {
      jn["normalizer_route"] = rep.normalizer_route;
      jn["normalizer"] = matrix_json(*rep.normalizer);
      jn["analyzed_brackets"] = bracket_json(rep.analyzed);
    }
    j["jnice"] = jn;
    if (rep.gram) j["gram"] = rep.gram->u;
    if (rep.feasibility) {
      const auto& f = *rep.feasibility;
      nlohmann::ordered_json fj;
      fj["status"] = feas_status_name(f.status);
      if (f.status != FeasStatus::Infeasible) {
        fj["lambda"] = rat_str(f.lambda);
        nlohmann::ordered_json wv = nlohmann::ordered_json::array();
        for (const auto& x : f.witness) wv.push_back(rat_str(x));
        fj["witness"] = wv;
      }
      if (f.solution_form) fj["solution_form"] = f.solution_form->render();
      if (f.farkas) {
        nlohmann::ordered_json fv = nlohmann::ordered_json::array();
        for (const auto& x : *f.farkas) fv.push_back(rat_str(x));
        fj["farkas"] = fv;
      }
      j["feasibility"] = fj;
    }
  }

  if (rep.ricci) {
    nlohmann::ordered_json rj;
    rj["scal"] = qrat_json(rep.ricci->scal);
    rj["tr_ricc_sq"] = qrat_json(rep.tr_ricc_sq);
    rj["ric_c"] = matrix_json(rep.ricci->ric_c);
    j["ricci"] = rj;
  }
  if (rep.soliton) {
    nlohmann::ordered_json sj;
    sj["exists"] = rep.soliton->exists;
    if (rep.soliton->exists) {
      sj["c"] = qrat_json(rep.soliton->c);
      sj["derivation"] = matrix_json(rep.soliton->D);
    }
    j["soliton"] = sj;
  }
  j["verdict"] = verdict_name(rep.verdict);
  return j;
}

std::string report_text(const AnalysisReport& rep) {
  std::ostringstream os;
  if (!rep.name.empty()) os << "algebra: " << rep.name << "\n";
  os << "dim: " << rep.input.dim << "\n";
  os << "validation: " << rep.validation.summary() << "\n";
  if (!rep.valid) {
    os << "verdict: invalid algebra\n";
    return os.str();
  }
  if (rep.verdict == Verdict::AbelianFlat) {
    os << "verdict: AbelianFlat (zero bracket; flat metric, minimal "
          "trivially)\n";
    return os.str();
  }
  os << "weights:";
  for (const auto& row : rep.weights) {
    os << " (";
    for (std::size_t i = 0; i < row.w.v.size(); ++i)
      os << (i ? "," : "") << row.w.v[i];
    os << ")";
  }
  os << "\n";
  os << "jnice: " << jnice_method_name(rep.jnice.method);
  if (rep.normalized)
    os << " (after orbit normalization: " << rep.normalizer_route << ")";
  if (rep.jnice.method == JNiceMethod::DiagonalityEvidence)
    os << " [probabilistic evidence, samples=" << rep.jnice.samples
       << " seed=" << rep.jnice.seed << "]";
  os << "\n";
  if (rep.gram) {
    os << "gram:";
    for (const auto& row : rep.gram->u) {
      os << " [";
      for (std::size_t i = 0; i < row.size(); ++i)
        os << (i ? "," : "") << row[i];
      os << "]";
    }
    os << "\n";
  }
  if (rep.feasibility) {
    const auto& f = *rep.feasibility;
    os << "feasibility: " << feas_status_name(f.status);
    if (f.status != FeasStatus::Infeasible) {
      os << " lambda=" << rat_str(f.lambda) << " witness=(";
      for (std::size_t i = 0; i < f.witness.size(); ++i)
        os << (i ? ", " : "") << rat_str(f.witness[i]);
      os << ")";
    } else if (f.solution_form) {
      os << " solution_form=" << f.solution_form->render();
    } else if (f.farkas) {
      os << " farkas_certificate_present";
    }
    os << "\n";
  }
  if (rep.ricci)
    os << "scal: " << rep.ricci->scal.str()
       << "  tr(ric_c^2): " << rep.tr_ricc_sq.str() << "\n";
  if (rep.soliton) {
    os << "canonical metric minimal (Ric^c = cI + D): "
       << (rep.soliton->exists ? "yes" : "no");
    if (rep.soliton->exists) os << "  c=" << rep.soliton->c.str();
    os << "\n";
  }
  os << "verdict: " << verdict_name(rep.verdict) << "\n";
  return os.str();
}

}  // namespace nilmin
