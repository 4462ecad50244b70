// Built-in parameterized families: every bracket family of the 6-dimensional
// classification tables, with exact parameter domains, expected Existence and
// canonical-metric verdicts, and default rational grids for reproduction.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilmin/analysis.hpp"
#include "nilmin/bracket.hpp"

namespace nilmin {

using Params = std::map<std::string, Rat>;

struct Expected {
  bool existence = true;
  // Unset when no minimal metric exists at all (the table prints a dash).
  std::optional<bool> canonical_minimal;
};

struct Family {
  std::string name;
  std::vector<std::string> param_names;
  std::string domain_desc;
  // Returns the violated predicate, or nullopt if params are in-domain.
  std::function<std::optional<std::string>(const Params&)> domain_violation;
  std::function<LieBracket(const Params&)> make;
  std::function<Expected(const Params&)> expected;
  std::vector<Params> default_grid;
};

const std::vector<Family>& families();
const Family& family(const std::string& name);  // throws on unknown name

// Throws std::invalid_argument naming the violated predicate when the
// parameters are out of domain.
std::pair<LieBracket, Expected> instantiate(const std::string& name,
                                            const Params& params);

std::string params_str(const Params& p);

struct TableRow {
  std::string family;
  Params params;
  std::string note;  // nonempty for skipped / failed points
  int step = 0;
  std::string jnice_method;
  bool normalized = false;
  bool inconclusive = false;
  bool existence_computed = false;
  bool existence_expected = false;
  std::optional<bool> minimal_computed;
  std::optional<bool> minimal_expected;
  bool match = false;  // existence and canonical columns both agree
};

struct TableReport {
  std::vector<TableRow> rows;
  int mismatches_existence = 0;
  int mismatches_minimal = 0;
  int inconclusive_count = 0;
  int skipped = 0;
};

TableReport sweep(const std::string& name, const std::vector<Params>& grid,
                  int samples, std::uint64_t seed);

// Default grids for every family (>= 3 in-domain points, plus the rational
// boundary points of the Existence and canonical-minimal conditions).
TableReport reproduce_tables(int samples, std::uint64_t seed);

std::string table_csv(const TableReport& rep);
nlohmann::ordered_json table_json(const TableReport& rep);

}  // namespace nilmin
