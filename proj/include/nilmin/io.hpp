// JSON algebra-spec files: the single input format consumed by the CLI.
//
//   {
//     "dim": 6,
//     "name": "h11-t2",
//     "brackets": [{"i": 1, "j": 2, "k": 4, "c": "1"}, ...],
//     "params": {...}            // optional, echoed back verbatim
//   }
//
// Indices are 1-based with i < j; coefficients are integers or "p/q" strings.

#pragma once

#include <string>

#include <json.hpp>

#include "nilmin/bracket.hpp"

namespace nilmin {

struct AlgebraSpec {
  std::string name;
  LieBracket bracket;
  nlohmann::json params;  // echoed metadata; may be null
};

// Both throw std::runtime_error with a descriptive message on malformed
// input (bad JSON, odd dimension, indices out of range, i >= j, duplicate
// entries, zero or unparsable coefficients).
AlgebraSpec read_algebra_json(const std::string& text);
AlgebraSpec read_algebra_file(const std::string& path);

std::string write_algebra_json(const std::string& name, const LieBracket& mu,
                               const nlohmann::json& params = nullptr);

}  // namespace nilmin
