// nilmin: decide minimal compatible metrics on nilpotent Lie groups with the
// standard complex structure, by exact weight/Gram-matrix feasibility, with
// Ricci-soliton checks and a numerical bracket flow for cross-validation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nilmin/analysis.hpp"
#include "nilmin/catalog.hpp"
#include "nilmin/flow.hpp"
#include "nilmin/io.hpp"
#include "nilmin/structeq.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidAlgebra = 1;
constexpr int kExitInternal = 2;
constexpr int kExitUsage = 64;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("NILMIN_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw std::runtime_error("NILMIN_SEED must be an unsigned integer");
    }
  }
  return nilmin::kDefaultSeed;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

nilmin::Params parse_params(const std::vector<std::string>& kvs) {
  nilmin::Params p;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("--param expects key=value, got '" + kv + "'");
    p[kv.substr(0, eq)] = nilmin::parse_rat(kv.substr(eq + 1));
  }
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal compatible metrics on nilpotent Lie groups"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand name

  int samples = nilmin::kDefaultSamples;
  std::uint64_t seed = 0;
  app.add_option("--samples", samples, "diagonality-test sample count")
      ->capture_default_str();
  app.add_option("--seed", seed, "seed (default: NILMIN_SEED env or 1729)");

  // validate
  auto* c_validate = app.add_subcommand("validate", "validate a JSON algebra");
  std::string validate_path;
  c_validate->add_option("file", validate_path, "JSON algebra spec")
      ->required();

  // analyze
  auto* c_analyze = app.add_subcommand("analyze", "run the full pipeline");
  std::string analyze_path;
  bool analyze_json = false;
  c_analyze->add_option("file", analyze_path, "JSON algebra spec")->required();
  c_analyze->add_flag("--json", analyze_json, "emit the JSON report");

  // tables
  auto* c_tables =
      app.add_subcommand("tables", "reproduce the classification tables");
  std::string tables_csv, tables_json_path;
  bool tables_json = false;
  c_tables->add_option("--csv", tables_csv, "write the CSV report here");
  c_tables->add_flag("--json", tables_json, "emit the JSON report");
  c_tables->add_option("--json-file", tables_json_path,
                       "write the JSON report here");

  // catalog
  auto* c_catalog = app.add_subcommand("catalog", "built-in families");
  auto* c_list = c_catalog->add_subcommand("list", "list families");
  auto* c_run = c_catalog->add_subcommand("run", "analyze one family point");
  std::string run_family;
  std::vector<std::string> run_params;
  bool run_json = false;
  c_run->add_option("--family", run_family, "family name")->required();
  c_run->add_option("--param", run_params, "parameter key=value (repeat)");
  c_run->add_flag("--json", run_json, "emit the JSON report");

  // flow
  auto* c_flow = app.add_subcommand("flow", "run the numerical bracket flow");
  std::string flow_path, flow_csv;
  nilmin::FlowOpts fo;
  bool no_normalize = false;
  c_flow->add_option("file", flow_path, "JSON algebra spec")->required();
  c_flow->add_option("--dt", fo.dt, "step size")->capture_default_str();
  c_flow->add_option("--max-steps", fo.max_steps, "step limit")
      ->capture_default_str();
  c_flow->add_option("--tol", fo.tol, "residual tolerance")
      ->capture_default_str();
  c_flow->add_flag("--no-normalize", no_normalize, "do not renormalize |mu|");
  c_flow->add_option("--csv", flow_csv, "trajectory CSV output path");

  // translate
  auto* c_translate = app.add_subcommand(
      "translate", "realify complex structure equations to a JSON algebra");
  std::string translate_path, translate_out;
  c_translate->add_option("file", translate_path, "structure-equation file")
      ->required();
  c_translate->add_option("-o,--output", translate_out,
                          "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (seed == 0) seed = default_seed();
    nilmin::AnalysisOptions opts;
    opts.samples = samples;
    opts.seed = seed;

    if (*c_validate) {
      nilmin::AlgebraSpec spec;
      try {
        spec = nilmin::read_algebra_file(validate_path);
      } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      nilmin::ValidationReport rep = nilmin::validate(spec.bracket);
      std::cout << rep.summary() << "\n";
      return rep.ok() ? kExitOk : kExitInvalidAlgebra;
    }

    if (*c_analyze) {
      nilmin::AlgebraSpec spec;
      try {
        spec = nilmin::read_algebra_file(analyze_path);
      } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      nilmin::AnalysisReport rep =
          nilmin::analyze(spec.bracket, opts, spec.name);
      if (analyze_json) {
        auto j = nilmin::report_json(rep);
        if (!spec.params.is_null()) j["params"] = spec.params;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << nilmin::report_text(rep);
      }
      return rep.valid ? kExitOk : kExitInvalidAlgebra;
    }

    if (*c_tables) {
      nilmin::TableReport rep = nilmin::reproduce_tables(samples, seed);
      if (!tables_csv.empty()) {
        std::ofstream out(tables_csv);
        if (!out) throw std::runtime_error("cannot write " + tables_csv);
        out << nilmin::table_csv(rep);
      }
      if (!tables_json_path.empty()) {
        std::ofstream out(tables_json_path);
        if (!out) throw std::runtime_error("cannot write " + tables_json_path);
        out << nilmin::table_json(rep).dump(2) << "\n";
      }
      if (tables_json)
        std::cout << nilmin::table_json(rep).dump(2) << "\n";
      else {
        std::cout << nilmin::table_csv(rep);
        std::cout << "# existence mismatches: " << rep.mismatches_existence
                  << "\n# canonical-minimal mismatches: "
                  << rep.mismatches_minimal
                  << "\n# inconclusive: " << rep.inconclusive_count
                  << "\n# skipped: " << rep.skipped << "\n";
      }
      return kExitOk;
    }

    if (*c_catalog) {
      if (*c_list) {
        for (const auto& f : nilmin::families()) {
          std::cout << f.name << ": params(";
          for (std::size_t i = 0; i < f.param_names.size(); ++i)
            std::cout << (i ? ", " : "") << f.param_names[i];
          std::cout << ") domain: " << f.domain_desc
                    << "  grid points: " << f.default_grid.size() << "\n";
        }
        return kExitOk;
      }
      if (*c_run) {
        nilmin::Params p;
        try {
          p = parse_params(run_params);
        } catch (const std::exception& e) {
          std::cerr << "error: " << e.what() << "\n";
          return kExitUsage;
        }
        auto [mu, expected] = nilmin::instantiate(run_family, p);
        nilmin::AnalysisReport rep = nilmin::analyze(
            mu, opts, run_family + "(" + nilmin::params_str(p) + ")");
        if (run_json) {
          auto j = nilmin::report_json(rep);
          j["expected_existence"] = expected.existence;
          j["expected_canonical_minimal"] =
              expected.canonical_minimal
                  ? nlohmann::ordered_json(*expected.canonical_minimal)
                  : nlohmann::ordered_json(nullptr);
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << nilmin::report_text(rep);
          std::cout << "expected existence: "
                    << (expected.existence ? "true" : "false") << "\n";
          if (expected.canonical_minimal)
            std::cout << "expected canonical-minimal: "
                      << (*expected.canonical_minimal ? "true" : "false")
                      << "\n";
        }
        return kExitOk;
      }
      std::cerr << "catalog requires a subcommand: list | run\n";
      return kExitUsage;
    }

    if (*c_flow) {
      nilmin::AlgebraSpec spec;
      try {
        spec = nilmin::read_algebra_file(flow_path);
      } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      nilmin::ValidationReport v = nilmin::validate(spec.bracket);
      if (!v.ok()) {
        std::cerr << "invalid algebra: " << v.summary() << "\n";
        return kExitInvalidAlgebra;
      }
      if (spec.bracket.is_zero()) {
        std::cout << "zero bracket: already flat, nothing to flow\n";
        return kExitOk;
      }
      fo.normalize = !no_normalize;
      std::ofstream traj;
      std::function<void(const nilmin::FlowSample&)> sink;
      if (!flow_csv.empty()) {
        traj.open(flow_csv);
        if (!traj) throw std::runtime_error("cannot write " + flow_csv);
        traj << "step,time,norm,residual,c_estimate\n";
        sink = [&traj](const nilmin::FlowSample& s) {
          traj << s.step << "," << s.time << "," << s.norm << "," << s.residual
               << "," << s.c_estimate << "\n";
        };
      }
      nilmin::FlowResult res =
          nilmin::run_flow(nilmin::to_flow(spec.bracket), fo, sink);
      std::cout << "converged: " << (res.converged ? "true" : "false")
                << "\nblew_up: " << (res.blew_up ? "true" : "false")
                << "\nsteps: " << res.steps
                << "\nfinal_residual: " << res.final_residual
                << "\nc_estimate: " << res.c_estimate << "\n";
      return kExitOk;
    }

    if (*c_translate) {
      std::string text;
      nilmin::RealificationResult rr;
      try {
        text = slurp(translate_path);
        rr = nilmin::realify(nilmin::parse_equations(text));
      } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      std::string name = translate_path;
      auto slash = name.find_last_of('/');
      if (slash != std::string::npos) name = name.substr(slash + 1);
      std::string out = nilmin::write_algebra_json(name, rr.bracket);
      if (translate_out.empty()) {
        std::cout << out;
      } else {
        std::ofstream f(translate_out);
        if (!f) throw std::runtime_error("cannot write " + translate_out);
        f << out;
      }
      return kExitOk;
    }

    std::cerr << "no subcommand given\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
