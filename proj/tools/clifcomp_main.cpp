#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "clifcomp/reports.hpp"

using clifcomp::CmdResult;
using clifcomp::SessionConfig;

namespace {

// Defaults < config file (CLIFCOMP_CONFIG or --config) < command-line flags.
struct FlagSet {
  std::string sig, product, tau, split, scalar, format, out, config;
  long long seed = -1;
  bool timings = false;
};

void add_common_flags(CLI::App* app, FlagSet& f) {
  app->add_option("--sig", f.sig, "signature p,q with p+q=3 (default 3,0)");
  app->add_option("--product", f.product,
                  "clifford|dot|bullet|star|dot-|bullet-|star-|rot-para|ps-para");
  app->add_option("--tau", f.tau, "paper|corrected|file:<path>");
  app->add_option("--split", f.split, "evenodd|pseudoscalar");
  app->add_option("--scalar", f.scalar, "exact|float[:tol]");
  app->add_option("--format", f.format, "json|md|csv");
  app->add_option("--out", f.out, "write the report to a file");
  app->add_option("--seed", f.seed, "seed for the fuzzed checks");
  app->add_option("--config", f.config, "JSON config file (overrides CLIFCOMP_CONFIG)");
  app->add_flag("--timings", f.timings, "include runtimes (breaks byte reproducibility)");
}

SessionConfig build_config(const FlagSet& f) {
  SessionConfig cfg;
  std::string path = f.config;
  if (path.empty())
    if (const char* env = std::getenv("CLIFCOMP_CONFIG")) path = env;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    clifcomp::ordered_json j;
    in >> j;
    cfg = SessionConfig::from_json(j, cfg);
  }
  clifcomp::ordered_json j;
  if (!f.sig.empty()) {
    const auto comma = f.sig.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--sig wants p,q");
    j["sig"] = {std::stoi(f.sig.substr(0, comma)), std::stoi(f.sig.substr(comma + 1))};
  }
  if (!f.product.empty()) j["product"] = f.product;
  if (!f.tau.empty()) j["tau"] = f.tau;
  if (!f.split.empty()) j["split"] = f.split;
  if (!f.scalar.empty()) j["scalar"] = f.scalar;
  if (!f.format.empty()) j["format"] = f.format;
  if (!f.out.empty()) j["out"] = f.out;
  if (f.seed >= 0) j["seed"] = static_cast<unsigned long long>(f.seed);
  if (f.timings) j["timings"] = true;
  return SessionConfig::from_json(j, cfg);
}

int finish(const CmdResult& res, const SessionConfig& cfg) {
  if (!cfg.out_path.empty() && res.exit_code != 2) {
    std::ofstream out(cfg.out_path);
    if (!out) {
      std::cerr << "cannot write " << cfg.out_path << "\n";
      return 2;
    }
    out << res.output;
  } else {
    std::cout << res.output;
  }
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact composition-algebra kernel over the 3D geometric algebras"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  FlagSet flags;
  std::string expr, table, lattice = "d4", suite = "all", roots_csv;
  bool classify_all = false;

  auto* eval = app.add_subcommand("eval", "evaluate a multivector expression");
  eval->add_option("expr", expr, "expression, e.g. \"e1*e2\"")->required();
  add_common_flags(eval, flags);

  auto* classify = app.add_subcommand("classify", "classify one algebra or the full matrix");
  classify->add_flag("--all", classify_all, "the 4-signature x 6-product verdict matrix");
  add_common_flags(classify, flags);

  auto* tables = app.add_subcommand("tables", "regenerate a reference table from computation");
  tables->add_option("which", table, "table1|table2|section2|section3|section4")->required();
  add_common_flags(tables, flags);

  auto* roots = app.add_subcommand("roots", "integral-unit enumerations and root systems");
  roots->add_option("lattice", lattice, "d4|d4d4|e8")->required();
  roots->add_option("--csv", roots_csv, "also export the vectors as CSV");
  add_common_flags(roots, flags);

  auto* verify = app.add_subcommand("verify", "run an exact verification suite");
  verify->add_option("suite", suite, "composition|tau|involutions|biquaternion|all")->required();
  add_common_flags(verify, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    const SessionConfig cfg = build_config(flags);
    if (eval->parsed()) return finish(clifcomp::cmd_eval(cfg, expr), cfg);
    if (classify->parsed()) return finish(clifcomp::cmd_classify(cfg, classify_all), cfg);
    if (tables->parsed()) return finish(clifcomp::cmd_tables(cfg, table), cfg);
    if (roots->parsed()) return finish(clifcomp::cmd_roots(cfg, lattice, roots_csv), cfg);
    if (verify->parsed()) return finish(clifcomp::cmd_verify(cfg, suite), cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
