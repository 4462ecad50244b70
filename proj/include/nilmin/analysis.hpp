// Full pipeline: validation -> weights -> J-nice cascade (with orbit
// normalization fallback) -> Gram feasibility, plus Ricci/soliton data for
// the canonical metric, assembled into one report.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "nilmin/bracket.hpp"
#include "nilmin/feasibility.hpp"
#include "nilmin/normalize.hpp"
#include "nilmin/ricci.hpp"
#include "nilmin/weights.hpp"

namespace nilmin {

inline constexpr int kDefaultSamples = 32;
inline constexpr std::uint64_t kDefaultSeed = 1729;

enum class Verdict {
  MinimalMetricExists,
  NoMinimalMetric,
  AbelianFlat,
  Inconclusive,
};

const char* verdict_name(Verdict v);

struct AnalysisOptions {
  int samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
};

struct AnalysisReport {
  std::string name;
  LieBracket input;
  ValidationReport validation;
  bool valid = false;

  // Feasibility side, computed on `analyzed` (the input itself, or a J-nice
  // representative in its orbit when normalization was required).
  LieBracket analyzed;
  bool normalized = false;
  std::string normalizer_route;
  std::optional<Mat<QRat>> normalizer;
  WeightList weights;
  JNiceStatus jnice;
  std::optional<GramMatrix> gram;
  std::optional<FeasibilityResult> feasibility;

  // Canonical-metric side, always computed on the input bracket.
  std::optional<RicciData> ricci;
  QRat tr_ricc_sq;
  std::optional<SolitonDecomposition> soliton;

  Verdict verdict = Verdict::Inconclusive;
};

AnalysisReport analyze(const LieBracket& mu, const AnalysisOptions& opts,
                       const std::string& name = "");

nlohmann::ordered_json report_json(const AnalysisReport& rep);
std::string report_text(const AnalysisReport& rep);

}  // namespace nilmin
