#pragma once

#include <string>

#include <json.hpp>

#include "clifcomp/analysis.hpp"
#include "clifcomp/roots.hpp"

namespace clifcomp {

using ordered_json = nlohmann::ordered_json;

// Session defaults: (3,0), dot, corrected tau, even/odd split, exact scalars,
// json output.
struct SessionConfig {
  int p = 3, q = 0;
  ProductId product = ProductId::Dot;
  TauKind tau_kind = TauKind::Corrected;
  std::string tau_file;  // 8x8 coefficient matrix, used when tau_kind==Custom
  SplitKind split = SplitKind::EvenOdd;
  bool exact_scalars = true;       // float mode only changes report rendering
  double float_tolerance = 1e-12;  // display rounding threshold in float mode
  std::string format = "json";     // json | md | csv
  std::string out_path;            // empty = stdout
  unsigned long long seed = 1;
  bool timings = false;  // adds runtime fields (breaks byte-reproducibility)

  Signature sig() const { return Signature::of(p, q); }
  TauMap tau() const;
  AlgebraHandle handle() const;

  static SessionConfig from_json(const ordered_json& j, SessionConfig base = {});
  ordered_json to_json() const;
};

// JSON rendering of analysis values.
ordered_json witness_json(const Witness& w, const SessionConfig& cfg);
ordered_json check_json(const CheckResult& r, const SessionConfig& cfg);
ordered_json property_report_json(const PropertyReport& r, const SessionConfig& cfg);
std::string scalar_str(const QSqrt3& v, const SessionConfig& cfg);

// Reference labels claimed by the classification table for the six deformed
// products; empty for products outside the table.
std::string expected_label(const Signature& sig, ProductId product);

struct CellVerdict {
  PropertyReport report;
  std::string expected;
  bool match = false;
  ordered_json witness;  // filled for mismatches
};
CellVerdict classify_cell(const AlgebraHandle& h, const SessionConfig& cfg);
// The full 4-signature x 6-product verdict matrix.
std::vector<CellVerdict> classify_matrix(const SessionConfig& cfg);

struct CmdResult {
  int exit_code = 0;
  std::string output;
};

CmdResult cmd_eval(const SessionConfig& cfg, const std::string& expr);
CmdResult cmd_classify(const SessionConfig& cfg, bool all);
CmdResult cmd_tables(const SessionConfig& cfg, const std::string& which);
CmdResult cmd_roots(const SessionConfig& cfg, const std::string& lattice,
                    const std::string& csv_out);
CmdResult cmd_verify(const SessionConfig& cfg, const std::string& suite);

// Shared by cmd_roots and the acceptance suite.
struct E8SearchOutcome {
  SeedSearchResult search;
  std::optional<Multivector> first_seed;
  RootSystemReport identified;  // of the first seed's closure
  int closure_size = 0;
};
// Runs the half-vector seed search over the (3,0) dot carrier. When
// first_hit_only is set, candidates are scanned in order and the scan stops
// at the first 240-closure (the CLI path); the acceptance suite runs the
// full sweep.
E8SearchOutcome e8_seed_search(bool first_hit_only, int threads = 0);

std::string render(const ordered_json& report, const SessionConfig& cfg);

}  // namespace clifcomp
