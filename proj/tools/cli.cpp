// Copyright 2026 The Trispin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "selftest.hpp"
#include "trispin/analysis.hpp"
#include "trispin/sequence_json.hpp"
#include "trispin/sequences.hpp"
#include "trispin/verify.hpp"

namespace trispin::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AngleFlags {
  double theta = 0.0;
  double kappa = 0.0;
  CLI::Option* theta_opt = nullptr;
  CLI::Option* kappa_opt = nullptr;

  void attach(CLI::App* sub) {
    theta_opt = sub->add_option("--theta", theta, "Rotation angle in rad");
    kappa_opt = sub->add_option("--kappa", kappa, "Rotation angle as theta / 2pi");
    theta_opt->excludes(kappa_opt);
  }

  std::optional<double> radians() const {
    if (theta_opt->count()) return theta;
    if (kappa_opt->count()) return kTwoPi * kappa;
    return std::nullopt;
  }
};

void check_coupling(double j_hz) {
  if (!std::isfinite(j_hz) || j_hz == 0.0) throw UsageError("--J must be finite and nonzero");
}

unsigned long long parse_seed(const std::string& text) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("invalid seed '" + text + "'");
  return v;
}

unsigned long long resolve_seed(const CLI::Option* opt, const std::string& flag) {
  if (opt->count()) return parse_seed(flag);
  if (const char* env = std::getenv("TRISPIN_SEED"); env && *env) return parse_seed(env);
  return kDefaultSeed;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw IoError("write to '" + path + "' failed");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool needs_angle(const std::string& name) {
  return name == "conventional" || name == "improved" || name == "geodesic" ||
         name == "trilinear";
}

sequences::PulseSequence build_named(const std::string& name,
                                     std::optional<double> theta, double j_hz,
                                     const std::string& axes) {
  const bool known = needs_angle(name) || name == "vf" || name == "swap13";
  if (!known) throw UsageError("unknown sequence '" + name + "'");
  if (needs_angle(name) && !theta)
    throw UsageError("'" + name + "' needs --theta or --kappa");
  if (!needs_angle(name) && theta)
    throw UsageError("'" + name + "' takes no angle");
  try {
    if (name == "conventional") return sequences::build_conventional(*theta, j_hz);
    if (name == "improved") return sequences::build_improved(*theta, j_hz);
    if (name == "geodesic") return sequences::build_geodesic(*theta, j_hz);
    if (name == "trilinear")
      return sequences::build_trilinear(*theta, j_hz, sequences::parse_axes(axes));
    if (name == "vf") return sequences::build_vf(j_hz);
    return sequences::build_swap13(j_hz);
  } catch (const ContractViolation& e) {
    throw UsageError(e.what());
  }
}

ordered_json sequence_document(const sequences::PulseSequence& seq) {
  auto body = sequences::to_json(seq);
  ordered_json doc;
  doc["n"] = body["n"];
  doc["label"] = body["label"];
  doc["duration"] = seq.duration();
  if (!seq.metadata.empty()) doc["metadata"] = seq.metadata;
  doc["events"] = std::move(body["events"]);
  return doc;
}

struct VerifyTarget {
  std::string name;
  ComplexMatrix matrix;
};

VerifyTarget resolve_target(std::string name, const std::string& builtin,
                            std::optional<double> theta, const std::string& axes) {
  if (name.empty()) {
    if (builtin.empty()) throw UsageError("--target is required with --sequence");
    name = needs_angle(builtin) ? "trilinear" : builtin;
  }
  if (name == "trilinear") {
    if (!theta) throw UsageError("target 'trilinear' needs --theta or --kappa");
    // geodesic/conventional/improved realize the zzz form.
    const std::string ax = builtin.empty() || builtin == "trilinear" ? axes : "zzz";
    try {
      return {name, sequences::trilinear_target(*theta, sequences::parse_axes(ax))};
    } catch (const ContractViolation& e) {
      throw UsageError(e.what());
    }
  }
  if (name == "vf") return {name, sequences::vf_target()};
  if (name == "swap13") return {name, sequences::swap13_target()};
  if (name == "lambda2") return {name, sequences::lambda2_target()};
  throw UsageError("unknown target '" + name + "'");
}

std::string table_text(const std::vector<analysis::DurationRow>& rows, double j_hz,
                       double kappa, double gap) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "J = %g Hz, kappa = %g\n", j_hz, kappa);
  out += buf;
  std::snprintf(buf, sizeof buf, "%-30s %16s %14s %10s\n", "propagator",
                "conventional(s)", "geodesic(s)", "ratio");
  out += buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-30s %16.7f %14.7f %10.7f\n", r.label.c_str(),
                  r.tau_conventional_s, r.tau_geodesic_s, r.ratio);
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "builder cross-check: max relative gap %.3e\n", gap);
  out += buf;
  return out;
}

ordered_json table_json(const std::vector<analysis::DurationRow>& rows, double j_hz,
                        double kappa, double gap) {
  ordered_json doc;
  doc["j_hz"] = j_hz;
  doc["kappa"] = kappa;
  doc["rows"] = ordered_json::array();
  for (const auto& r : rows)
    doc["rows"].push_back({{"label", r.label},
                           {"tau_conventional_s", r.tau_conventional_s},
                           {"tau_geodesic_s", r.tau_geodesic_s},
                           {"ratio", r.ratio}});
  doc["builder_max_relative_gap"] = gap;
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pulse-sequence synthesis and verification for coupled spin-1/2 chains",
               "trispin"};
  app.require_subcommand(1);

  double j_hz = 1.0;
  std::string out_path;
  std::string axes = "zzz";

  auto* build = app.add_subcommand("build", "Emit a pulse sequence as JSON");
  std::string build_name;
  AngleFlags build_angle;
  build->add_option("name", build_name,
                    "conventional|improved|geodesic|trilinear|vf|swap13")
      ->required();
  build_angle.attach(build);
  build->add_option("--J", j_hz, "Coupling constant in Hz");
  build->add_option("--axes", axes, "Axis triple for trilinear, e.g. xzx");
  build->add_option("--out", out_path, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Evolve a sequence and compare with a target");
  std::string builtin, sequence_file, target_name;
  double tol = 1e-9;
  AngleFlags verify_angle;
  auto* builtin_opt = verify->add_option("--builtin", builtin, "Built-in sequence name");
  auto* file_opt = verify->add_option("--sequence", sequence_file, "Sequence JSON file");
  builtin_opt->excludes(file_opt);
  verify->add_option("--target", target_name, "trilinear|vf|swap13|lambda2");
  verify_angle.attach(verify);
  verify->add_option("--J", j_hz, "Coupling constant in Hz");
  verify->add_option("--axes", axes, "Axis triple for trilinear targets");
  verify->add_option("--tol", tol, "Pass if fidelity >= 1 - tol");
  verify->add_option("--out", out_path, "Output file (default stdout)");

  auto* table1 = app.add_subcommand("table1", "Duration comparison table");
  double table_kappa = 1.0;
  std::string table_format = "text";
  table1->add_option("--J", j_hz, "Coupling constant in Hz");
  table1->add_option("--kappa", table_kappa, "kappa for the generic row");
  table1->add_option("--format", table_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  table1->add_option("--out", out_path, "Output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "Duration curves over kappa as CSV");
  double kappa_min = 0.0, kappa_max = 2.0;
  int points = 201;
  std::string sweep_format = "csv";
  sweep->add_option("--kappa-min", kappa_min, "Lower end of the grid");
  sweep->add_option("--kappa-max", kappa_max, "Upper end of the grid");
  sweep->add_option("--points", points, "Number of grid points");
  sweep->add_option("--J", j_hz, "Coupling constant in Hz");
  sweep->add_option("--format", sweep_format, "csv")->check(CLI::IsMember({"csv"}));
  sweep->add_option("--out", out_path, "Output file (default stdout)");

  auto* selftest = app.add_subcommand("selftest", "Run the invariant suite");
  std::string seed_text;
  double selftest_tol = 0.0;
  auto* seed_opt = selftest->add_option("--seed", seed_text, "Seed (default $TRISPIN_SEED or 0xC0FFEE)");
  auto* selftest_tol_opt =
      selftest->add_option("--tol", selftest_tol, "Use this tolerance for every check");
  selftest->add_option("--out", out_path, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) {
      check_coupling(j_hz);
      const auto seq = build_named(build_name, build_angle.radians(), j_hz, axes);
      emit(sequence_document(seq).dump(2) + "\n", out_path, out);
      return kExitOk;
    }

    if (verify->parsed()) {
      check_coupling(j_hz);
      if (!(tol > 0.0 && tol < 1.0)) throw UsageError("--tol must lie in (0, 1)");
      if (builtin.empty() && sequence_file.empty())
        throw UsageError("give --builtin or --sequence");
      const auto theta = verify_angle.radians();
      const auto target = resolve_target(target_name, builtin, theta, axes);
      sequences::PulseSequence seq;
      if (!builtin.empty()) {
        seq = build_named(builtin, theta, j_hz, axes);
      } else {
        try {
          seq = sequences::parse_sequence(read_file(sequence_file));
        } catch (const FormatError& e) {
          throw IoError(e.what());
        }
      }
      if (seq.n != 3)
        throw IoError("dimension mismatch: sequence has n = " + std::to_string(seq.n) +
                      ", targets act on 3 spins");
      const auto report =
          verify::verify_sequence(seq, sequences::canonical_system(j_hz), target.matrix, tol);
      auto doc = verify::to_json(report);
      doc["target"] = target.name;
      emit(doc.dump(2) + "\n", out_path, out);
      return report.passed ? kExitOk : kExitFailed;
    }

    if (table1->parsed()) {
      if (!(std::isfinite(j_hz) && j_hz > 0.0)) throw UsageError("--J must be positive");
      if (!(table_kappa >= 0.0 && table_kappa <= 2.0))
        throw UsageError("--kappa must lie in [0, 2]");
      const auto rows = analysis::duration_table(j_hz, table_kappa);
      const double gap = analysis::table_builder_discrepancy(rows, j_hz, table_kappa);
      emit(table_format == "json" ? table_json(rows, j_hz, table_kappa, gap).dump(2) + "\n"
                                  : table_text(rows, j_hz, table_kappa, gap),
           out_path, out);
      if (gap > 1e-12) {
        err << "table1: builder durations disagree with the table (gap " << gap << ")\n";
        return kExitFailed;
      }
      return kExitOk;
    }

    if (sweep->parsed()) {
      std::vector<analysis::SweepRow> rows;
      try {
        rows = analysis::sweep(kappa_min, kappa_max, points, j_hz);
      } catch (const ContractViolation& e) {
        throw UsageError(e.what());
      }
      emit(analysis::to_csv(rows), out_path, out);
      return kExitOk;
    }

    if (selftest->parsed()) {
      const auto seed = resolve_seed(seed_opt, seed_text);
      std::optional<double> override;
      if (selftest_tol_opt->count()) {
        if (!(selftest_tol >= 0.0)) throw UsageError("--tol must be nonnegative");
        override = selftest_tol;
      }
      const auto checks = run_selftest(seed, override);
      emit(format_selftest(checks, seed), out_path, out);
      for (const auto& c : checks)
        if (!c.passed) return kExitFailed;
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace trispin::cli
