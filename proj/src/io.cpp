#include "nilmin/io.hpp"

#include <fstream>
#include <sstream>

namespace nilmin {

namespace {

Rat coeff_from_json(const nlohmann::json& c) {
  if (c.is_number_integer()) return Rat(c.get<long>());
  if (c.is_string()) return parse_rat(c.get<std::string>());
  throw std::runtime_error("coefficient must be an integer or a \"p/q\" string");
}

}  // namespace

AlgebraSpec read_algebra_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("top level must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw std::runtime_error("missing integer field 'dim'");
  int dim = j["dim"].get<int>();
  if (dim <= 0 || dim % 2 != 0)
    throw std::runtime_error("'dim' must be an even positive integer");

  AlgebraSpec spec;
  spec.bracket = LieBracket(dim);
  spec.name = j.value("name", std::string());
  if (j.contains("params")) spec.params = j["params"];

  if (!j.contains("brackets") || !j["brackets"].is_array())
    throw std::runtime_error("missing array field 'brackets'");
  for (const auto& e : j["brackets"]) {
    if (!e.is_object() || !e.contains("i") || !e.contains("j") ||
        !e.contains("k") || !e.contains("c"))
      throw std::runtime_error("bracket entries need fields i, j, k, c");
    int i = e["i"].get<int>(), jj = e["j"].get<int>(), k = e["k"].get<int>();
    if (i < 1 || jj < 1 || k < 1 || i > dim || jj > dim || k > dim)
      throw std::runtime_error("bracket index out of range 1..dim");
    if (i >= jj) throw std::runtime_error("bracket entries require i < j");
    Rat c = coeff_from_json(e["c"]);
    if (sgn(c) == 0) throw std::runtime_error("zero coefficients must be omitted");
    if (spec.bracket.entries.count({i, jj, k}))
      throw std::runtime_error("duplicate bracket entry (i, j, k)");
    spec.bracket.set(i, jj, k, QRat(c));
  }
  return spec;
}

AlgebraSpec read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return read_algebra_json(os.str());
}

std::string write_algebra_json(const std::string& name, const LieBracket& mu,
                               const nlohmann::json& params) {
  nlohmann::ordered_json j;
  j["dim"] = mu.dim;
  j["name"] = name;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [key, c] : mu.entries) {
    if (!c.is_rational())
      throw std::runtime_error(
          "cannot serialize irrational coefficients to the JSON spec");
    nlohmann::ordered_json e;
    e["i"] = key[0];
    e["j"] = key[1];
    e["k"] = key[2];
    e["c"] = rat_str(c.a);
    arr.push_back(e);
  }
  j["brackets"] = arr;
  if (!params.is_null()) j["params"] = params;
  return j.dump(2) + "\n";
}

}  // namespace nilmin
