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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "angdef/schemes.hpp"
#include "angdef/synthesis.hpp"

namespace angdef {

enum class ExperimentKind { kTable1, kTable2, kParallelogram, kCounterexample };
enum class OutputFormat { kCsv, kJson };

std::string_view to_string(ExperimentKind kind);
std::optional<ExperimentKind> parse_experiment(std::string_view name);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kTable1;
  std::vector<int> valences{4, 5, 6, 7, 8};
  // l1 for table1, r for parallelogram and counterexample.
  std::vector<double> levels{1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128};
  std::size_t samples = 100;
  // Quadratic-form coefficients are drawn uniformly from [-range, range].
  double coefficient_range = 2.5;
  std::vector<std::size_t> sphere_sizes{30, 100, 400, 1300, 5000};
  std::vector<double> c_values{0.0, 0.5, 1.0, 1.5};
  std::uint64_t seed = 20240601;
  std::vector<SchemeId> schemes;
  OutputFormat format = OutputFormat::kCsv;

  // Standard settings for `kind`, including its scheme set.
  static ExperimentConfig defaults(ExperimentKind kind);

  // Throws kConfig on empty or non-positive levels/sizes, samples == 0,
  // valences outside [3, 12] or levels that do not strictly decrease.
  void validate() const;
};

// Strict JSON config: unknown keys, wrong types and invalid values raise
// kConfig. Missing keys take the defaults of the named experiment.
ExperimentConfig parse_config(std::string_view json_text);

struct ErrorRow {
  std::string case_label;  // surface or c value; empty for table1/table2
  SchemeId scheme = SchemeId::kG1;
  std::size_t n_or_N = 0;
  std::optional<double> level;
  double eta = 0.0;
  double eps = 0.0;
  std::optional<double> slope;
  std::string flag = "ok";
};

struct ErrorTable {
  ExperimentKind kind = ExperimentKind::kTable1;
  std::vector<ErrorRow> rows;
  // Named scalars such as per-scheme irreducible errors.
  std::vector<std::pair<std::string, double>> summary;

  const ErrorRow* find(SchemeId scheme, std::size_t n_or_N,
                       std::string_view case_label = {},
                       std::optional<double> level = std::nullopt) const;
  std::optional<double> summary_value(std::string_view key) const;
};

struct FitResult {
  double slope = 0.0;
  // Some error was exactly zero; slope is +inf.
  bool exact_zero = false;
};

// Least-squares slope of log(eps) against log(eta). Throws kInvalidArgument
// for fewer than two pairs, mismatched lengths, negative or non-finite
// values, or a single distinct eta.
FitResult fit_order(std::span<const double> errors, std::span<const double> etas);

// Regular-vertex study: mean |G - (4 a20 a02 - a11^2)| over `samples` seeded
// quadratic forms per valence and level, with fitted orders.
ErrorTable run_table1(const ExperimentConfig& cfg);
// Random sphere triangulations: mean |G - 1| (and |H - 1|) over all vertices.
ErrorTable run_table2(const ExperimentConfig& cfg);
// Seed of the size-`size` sphere sample used by run_table2.
std::uint64_t table2_sphere_seed(std::uint64_t root, std::size_t size);
// Valence-6 parallelogram fans on a paraboloid, a wave graph and a torus.
ErrorTable run_parallelogram(const ExperimentConfig& cfg);
// Valence-4 fans that are identical for every c while the true curvature
// 4 - c^2 varies.
ErrorTable run_counterexample(const ExperimentConfig& cfg);
ErrorTable run_experiment(const ExperimentConfig& cfg);

// CSV: `scheme,n_or_N,level,eta,eps,slope,flag`, preceded by a `case`
// column when any row carries a case label and followed by `# key=value`
// summary lines. JSON mirrors the rows and the summary.
void write_table(std::ostream& out, const ErrorTable& table, OutputFormat format);
std::string format_table(const ErrorTable& table, OutputFormat format);

// CSV: `vertex,scheme,value,flag`.
void write_report(std::ostream& out, const CurvatureReport& report,
                  OutputFormat format);
std::string format_report(const CurvatureReport& report, OutputFormat format);

}  // namespace angdef
