// Copyright 2026 The angdef Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library only through angdef.h.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "angdef/angdef.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitConfig = 3;

int exit_code(angdef_status s) {
  switch (s) {
    case ANGDEF_OK: return kExitOk;
    case ANGDEF_PARSE_ERROR:
    case ANGDEF_UNSUPPORTED_POLYGON: return kExitParse;
    case ANGDEF_CONFIG_ERROR: return kExitConfig;
    default: return kExitFailure;
  }
}

int report_failure(angdef_status s) {
  std::cerr << "angdef: " << angdef_status_name(s) << ": " << angdef_last_error() << '\n';
  return exit_code(s);
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

uint32_t scheme_mask(const std::vector<std::string>& names) {
  static const char* const kNames[] = {"G1", "G2", "G3", "G4", "G5", "H1"};
  uint32_t mask = 0;
  for (auto name : names) {
    for (auto& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    bool found = false;
    for (unsigned i = 0; i < 6; ++i) {
      if (name == kNames[i]) {
        mask |= 1u << i;
        found = true;
      }
    }
    if (!found) throw UsageError("unknown scheme '" + name + "'");
  }
  return mask;
}

angdef_format output_format(const std::string& f) {
  if (f == "json") return ANGDEF_FORMAT_JSON;
  return ANGDEF_FORMAT_CSV;
}

int emit(char* text, const std::string& out_path) {
  std::unique_ptr<char, void (*)(char*)> owned(text, angdef_string_free);
  if (out_path.empty()) {
    std::cout << owned.get();
    return std::cout ? kExitOk : kExitFailure;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << owned.get();
  if (!out) {
    std::cerr << "angdef: cannot write '" << out_path << "'\n";
    return kExitFailure;
  }
  return kExitOk;
}

int emit_table(angdef_status s, angdef_table* table, angdef_format format,
               const std::string& out_path) {
  if (s != ANGDEF_OK) return report_failure(s);
  std::unique_ptr<angdef_table, void (*)(angdef_table*)> owned(table, angdef_table_free);
  char* text = nullptr;
  s = angdef_table_format(owned.get(), format, &text);
  if (s != ANGDEF_OK) return report_failure(s);
  return emit(text, out_path);
}

// Options shared by every experiment subcommand.
struct ExperimentOptions {
  std::vector<int> valences;
  std::vector<double> levels;
  std::vector<std::size_t> sizes;
  std::vector<double> c_values;
  std::size_t samples = 0;
  double range = 0.0;
  std::optional<uint64_t> seed;
  std::vector<std::string> schemes;
  std::string format = "csv";
  std::string out;
};

void add_common(CLI::App* cmd, ExperimentOptions& o) {
  cmd->add_option("--levels", o.levels, "Refinement levels, largest first")->delimiter(',');
  cmd->add_option("--schemes", o.schemes, "Schemes, e.g. G1,G2,H1")->delimiter(',');
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "Output file (default: stdout)");
}

int run_experiment(angdef_experiment kind, const ExperimentOptions& o) {
  angdef_experiment_config cfg;
  angdef_experiment_config_init(&cfg, kind);
  cfg.valences = o.valences.data();
  cfg.valence_count = o.valences.size();
  cfg.levels = o.levels.data();
  cfg.level_count = o.levels.size();
  cfg.sizes = o.sizes.data();
  cfg.size_count = o.sizes.size();
  cfg.c_values = o.c_values.data();
  cfg.c_value_count = o.c_values.size();
  cfg.samples = o.samples;
  cfg.coefficient_range = o.range;
  if (o.seed) {
    cfg.seed = *o.seed;
    cfg.has_seed = 1;
  }
  cfg.scheme_mask = scheme_mask(o.schemes);
  angdef_table* table = nullptr;
  const auto s = angdef_run_experiment(&cfg, &table);
  return emit_table(s, table, output_format(o.format), o.out);
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Angular-defect curvature estimators and convergence experiments"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string mesh_path;
  std::vector<std::string> est_schemes;
  std::string est_format = "csv";
  std::string est_out;
  auto* estimate = app.add_subcommand("estimate", "Per-vertex curvature of an OBJ/OFF mesh");
  estimate->add_option("mesh", mesh_path, "Input mesh (.obj or .off)")->required();
  estimate->add_option("--schemes", est_schemes, "Schemes, e.g. G1,G2,H1")->delimiter(',');
  estimate->add_option("--format", est_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  estimate->add_option("--out", est_out, "Output file (default: stdout)");

  ExperimentOptions t1, t2, pg, cx;
  auto* table1 = app.add_subcommand("table1", "Regular-vertex error orders");
  table1->add_option("--valences", t1.valences, "Valences")->delimiter(',');
  table1->add_option("--samples", t1.samples, "Quadratic forms per cell");
  table1->add_option("--range", t1.range, "Coefficients drawn from [-range, range]");
  table1->add_option("--seed", t1.seed, "Root seed");
  add_common(table1, t1);

  auto* table2 = app.add_subcommand("table2", "Random sphere triangulations");
  table2->add_option("--sizes", t2.sizes, "Point counts")->delimiter(',');
  table2->add_option("--seed", t2.seed, "Root seed");
  add_common(table2, t2);

  auto* parallelogram =
      app.add_subcommand("parallelogram", "Valence-6 parallelogram fans on smooth surfaces");
  add_common(parallelogram, pg);

  auto* counterexample =
      app.add_subcommand("counterexample", "Identical fans with different true curvature");
  counterexample->add_option("--c-values", cx.c_values, "Values of c")->delimiter(',');
  add_common(counterexample, cx);

  std::string config_path;
  std::string run_out;
  auto* run = app.add_subcommand("run", "Run the experiment described by a JSON config");
  run->add_option("config", config_path, "Config file")->required();
  run->add_option("--out", run_out, "Output file (default: stdout)");

  std::size_t sphere_n = 400;
  uint64_t sphere_seed = 1;
  std::string sphere_out;
  auto* sphere = app.add_subcommand("sphere", "Hull of seeded uniform sphere points");
  sphere->add_option("--n", sphere_n, "Number of points");
  sphere->add_option("--seed", sphere_seed, "Seed");
  sphere->add_option("--out", sphere_out, "Output mesh (.obj or .off)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (*estimate) {
    const uint32_t mask = est_schemes.empty() ? static_cast<uint32_t>(ANGDEF_SCHEME_ALL)
                                              : scheme_mask(est_schemes);
    angdef_mesh* mesh = nullptr;
    auto s = angdef_mesh_read(mesh_path.c_str(), -1, &mesh);
    if (s != ANGDEF_OK) return report_failure(s);
    std::unique_ptr<angdef_mesh, void (*)(angdef_mesh*)> owned_mesh(mesh, angdef_mesh_free);
    angdef_report* report = nullptr;
    s = angdef_estimate(mesh, mask, &report);
    if (s != ANGDEF_OK) return report_failure(s);
    std::unique_ptr<angdef_report, void (*)(angdef_report*)> owned(report,
                                                                    angdef_report_free);
    char* text = nullptr;
    s = angdef_report_format(report, output_format(est_format), &text);
    if (s != ANGDEF_OK) return report_failure(s);
    return emit(text, est_out);
  }
  if (*table1) return run_experiment(ANGDEF_EXPERIMENT_TABLE1, t1);
  if (*table2) return run_experiment(ANGDEF_EXPERIMENT_TABLE2, t2);
  if (*parallelogram) return run_experiment(ANGDEF_EXPERIMENT_PARALLELOGRAM, pg);
  if (*counterexample) return run_experiment(ANGDEF_EXPERIMENT_COUNTEREXAMPLE, cx);
  if (*run) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "angdef: cannot open '" << config_path << "'\n";
      return kExitConfig;
    }
    const std::string text((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    angdef_table* table = nullptr;
    angdef_format format = ANGDEF_FORMAT_CSV;
    const auto s = angdef_run_config_json(text.c_str(), &table, &format);
    return emit_table(s, table, format, run_out);
  }
  if (*sphere) {
    angdef_mesh* mesh = nullptr;
    auto s = angdef_mesh_sphere(sphere_n, sphere_seed, &mesh);
    if (s != ANGDEF_OK) return report_failure(s);
    std::unique_ptr<angdef_mesh, void (*)(angdef_mesh*)> owned(mesh, angdef_mesh_free);
    const bool obj = sphere_out.size() >= 4 &&
                     sphere_out.compare(sphere_out.size() - 4, 4, ".obj") == 0;
    s = angdef_mesh_write(mesh, sphere_out.c_str(), obj ? ANGDEF_MESH_OBJ : ANGDEF_MESH_OFF);
    if (s != ANGDEF_OK) return report_failure(s);
    return kExitOk;
  }
  return kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "angdef: " << e.what() << '\n';
    return kExitConfig;
  }
}
