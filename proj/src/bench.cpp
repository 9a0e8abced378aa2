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

#include "angdef/bench.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <tuple>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "angdef/error.hpp"
#include "angdef/hull.hpp"
#include "json.hpp"

namespace angdef {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Independent stream per (root seed, tag, index) so that cells can be
// evaluated in any order without changing results.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t tag,
                          std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(root),
                    static_cast<std::uint32_t>(root >> 32),
                    static_cast<std::uint32_t>(tag),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

constexpr std::uint64_t kTagQuadratic = 1;
constexpr std::uint64_t kTagSphere = 2;

QuadraticForm draw_form(std::uint64_t root, std::size_t m, double range) {
  std::mt19937_64 rng(derive_seed(root, kTagQuadratic, m));
  std::uniform_real_distribution<double> u(-range, range);
  QuadraticForm a;
  a.a20 = u(rng);
  a.a11 = u(rng);
  a.a02 = u(rng);
  return a;
}

// Running mean of |estimate - truth| with per-flag failure counts.
class ErrorAccumulator {
 public:
  void add(double abs_error) {
    sum_ += abs_error;
    ++ok_;
  }
  void fail(VertexFlag flag) { ++failures_[flag]; }

  double mean() const { return ok_ == 0 ? kNaN : sum_ / static_cast<double>(ok_); }

  std::string flag() const {
    if (failures_.empty()) return "ok";
    std::size_t total = ok_;
    for (const auto& [f, c] : failures_) total += c;
    std::string out;
    for (const auto& [f, c] : failures_) {
      if (!out.empty()) out += ';';
      out += fmt::format("{}={}/{}", to_string(f), c, total);
    }
    return out;
  }

 private:
  double sum_ = 0.0;
  std::size_t ok_ = 0;
  std::map<VertexFlag, std::size_t> failures_;
};

VertexFlag flag_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kIllConditioned: return VertexFlag::kIllConditioned;
    case ErrorCode::kBoundaryVertex: return VertexFlag::kBoundarySkipped;
    case ErrorCode::kNonManifoldVertex: return VertexFlag::kNonManifold;
    default: return VertexFlag::kDegenerate;
  }
}

// Fills `slope` on every row of each (case, scheme, n_or_N) group whose
// errors are all finite.
void attach_slopes(std::vector<ErrorRow>& rows) {
  std::map<std::tuple<std::string, SchemeId, std::size_t>, std::vector<std::size_t>>
      groups;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    groups[{rows[i].case_label, rows[i].scheme, rows[i].n_or_N}].push_back(i);
  }
  for (const auto& [key, idx] : groups) {
    if (idx.size() < 2) continue;
    std::vector<double> eps, eta;
    for (auto i : idx) {
      eps.push_back(rows[i].eps);
      eta.push_back(rows[i].eta);
    }
    if (!std::all_of(eps.begin(), eps.end(), [](double e) { return std::isfinite(e); })) {
      continue;
    }
    try {
      const auto fit = fit_order(eps, eta);
      for (auto i : idx) rows[i].slope = fit.slope;
    } catch (const Error&) {
    }
  }
}

std::vector<SchemeId> scheme_set(const ExperimentConfig& cfg,
                                 std::initializer_list<SchemeId> fallback) {
  return cfg.schemes.empty() ? std::vector<SchemeId>(fallback) : cfg.schemes;
}

std::string number(double v, const char* spec) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format(fmt::runtime(spec), v);
}

nlohmann::ordered_json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

std::uint64_t table2_sphere_seed(std::uint64_t root, std::size_t size) {
  return derive_seed(root, kTagSphere, size);
}

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kTable1: return "table1";
    case ExperimentKind::kTable2: return "table2";
    case ExperimentKind::kParallelogram: return "parallelogram";
    case ExperimentKind::kCounterexample: return "counterexample";
  }
  return "?";
}

std::optional<ExperimentKind> parse_experiment(std::string_view name) {
  for (auto k : {ExperimentKind::kTable1, ExperimentKind::kTable2,
                 ExperimentKind::kParallelogram, ExperimentKind::kCounterexample}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

ExperimentConfig ExperimentConfig::defaults(ExperimentKind kind) {
  ExperimentConfig cfg;
  cfg.kind = kind;
  switch (kind) {
    case ExperimentKind::kTable1:
      cfg.schemes = {SchemeId::kG1, SchemeId::kG2, SchemeId::kG4, SchemeId::kG5};
      break;
    case ExperimentKind::kTable2:
      cfg.schemes = {SchemeId::kG1, SchemeId::kG2, SchemeId::kG4, SchemeId::kG5,
                     SchemeId::kH1};
      break;
    case ExperimentKind::kParallelogram:
      cfg.schemes = {SchemeId::kG1, SchemeId::kG3};
      break;
    case ExperimentKind::kCounterexample:
      cfg.schemes = {SchemeId::kG1, SchemeId::kG2, SchemeId::kG3, SchemeId::kG4,
                     SchemeId::kG5};
      break;
  }
  return cfg;
}

void ExperimentConfig::validate() const {
  const auto fail = [](const std::string& msg) {
    throw Error(ErrorCode::kConfig, msg);
  };
  if (samples == 0) fail("samples must be >= 1");
  if (!(coefficient_range > 0.0) || !std::isfinite(coefficient_range)) {
    fail("coefficient_range must be positive");
  }
  const bool uses_levels = kind != ExperimentKind::kTable2;
  if (uses_levels) {
    if (levels.empty()) fail("levels must not be empty");
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (!(levels[i] > 0.0) || !std::isfinite(levels[i])) {
        fail("levels must be positive");
      }
      if (i > 0 && !(levels[i] < levels[i - 1])) {
        fail("levels must be strictly decreasing");
      }
    }
  }
  if (kind == ExperimentKind::kTable1) {
    if (valences.empty()) fail("valences must not be empty");
    for (int n : valences) {
      if (n < 3 || n > 12) fail(fmt::format("valence {} outside [3, 12]", n));
    }
  }
  if (kind == ExperimentKind::kTable2) {
    if (sphere_sizes.empty()) fail("sizes must not be empty");
    for (auto n : sphere_sizes) {
      if (n < 4 || n > 1000000) fail(fmt::format("sphere size {} outside [4, 1e6]", n));
    }
  }
  if (kind == ExperimentKind::kCounterexample && c_values.empty()) {
    fail("c_values must not be empty");
  }
}

ExperimentConfig parse_config(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kConfig, fmt::format("config is not valid JSON: {}", e.what()));
  }
  if (!doc.is_object()) throw Error(ErrorCode::kConfig, "config must be a JSON object");
  if (!doc.contains("experiment") || !doc["experiment"].is_string()) {
    throw Error(ErrorCode::kConfig, "config needs an \"experiment\" string");
  }
  const auto kind = parse_experiment(doc["experiment"].get<std::string>());
  if (!kind) {
    throw Error(ErrorCode::kConfig, fmt::format("unknown experiment '{}'",
                                                doc["experiment"].get<std::string>()));
  }
  ExperimentConfig cfg = ExperimentConfig::defaults(*kind);
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "experiment") continue;
      if (key == "valences") {
        cfg.valences = value.get<std::vector<int>>();
      } else if (key == "levels") {
        cfg.levels = value.get<std::vector<double>>();
      } else if (key == "samples") {
        if (!value.is_number_unsigned()) throw Error(ErrorCode::kConfig, "samples must be a positive integer");
        cfg.samples = value.get<std::size_t>();
      } else if (key == "coefficient_range") {
        cfg.coefficient_range = value.get<double>();
      } else if (key == "sizes") {
        cfg.sphere_sizes = value.get<std::vector<std::size_t>>();
      } else if (key == "c_values") {
        cfg.c_values = value.get<std::vector<double>>();
      } else if (key == "seed") {
        if (!value.is_number_unsigned()) throw Error(ErrorCode::kConfig, "seed must be a non-negative integer");
        cfg.seed = value.get<std::uint64_t>();
      } else if (key == "schemes") {
        cfg.schemes.clear();
        for (const auto& s : value.get<std::vector<std::string>>()) {
          const auto id = parse_scheme(s);
          if (!id) throw Error(ErrorCode::kConfig, fmt::format("unknown scheme '{}'", s));
          cfg.schemes.push_back(*id);
        }
      } else if (key == "format") {
        const auto f = value.get<std::string>();
        if (f == "csv") {
          cfg.format = OutputFormat::kCsv;
        } else if (f == "json") {
          cfg.format = OutputFormat::kJson;
        } else {
          throw Error(ErrorCode::kConfig, fmt::format("unknown format '{}'", f));
        }
      } else {
        throw Error(ErrorCode::kConfig, fmt::format("unknown config key '{}'", key));
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfig, fmt::format("bad config value: {}", e.what()));
  }
  cfg.validate();
  return cfg;
}

const ErrorRow* ErrorTable::find(SchemeId scheme, std::size_t n_or_N,
                                 std::string_view case_label,
                                 std::optional<double> level) const {
  for (const auto& r : rows) {
    if (r.scheme == scheme && r.n_or_N == n_or_N && r.case_label == case_label &&
        (!level || (r.level && *r.level == *level))) {
      return &r;
    }
  }
  return nullptr;
}

std::optional<double> ErrorTable::summary_value(std::string_view key) const {
  for (const auto& [k, v] : summary) {
    if (k == key) return v;
  }
  return std::nullopt;
}

FitResult fit_order(std::span<const double> errors, std::span<const double> etas) {
  if (errors.size() != etas.size() || errors.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "fit_order needs at least two (error, eta) pairs");
  }
  bool zero = false;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!(etas[i] > 0.0) || !std::isfinite(etas[i]) || !(errors[i] >= 0.0) ||
        !std::isfinite(errors[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "fit_order needs finite errors >= 0 and etas > 0");
    }
    zero = zero || errors[i] == 0.0;
  }
  const double n = static_cast<double>(errors.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < errors.size(); ++i) sx += std::log(etas[i]);
  const double mx = sx / n;
  double sxx = 0;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    const double dx = std::log(etas[i]) - mx;
    sxx += dx * dx;
  }
  if (!(sxx > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "fit_order needs distinct etas");
  }
  if (zero) return {std::numeric_limits<double>::infinity(), true};
  for (std::size_t i = 0; i < errors.size(); ++i) sy += std::log(errors[i]);
  const double my = sy / n;
  double sxy = 0;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    sxy += (std::log(etas[i]) - mx) * (std::log(errors[i]) - my);
  }
  return {sxy / sxx, false};
}

ErrorTable run_table1(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto schemes = scheme_set(cfg, {SchemeId::kG1, SchemeId::kG2,
                                        SchemeId::kG4, SchemeId::kG5});
  std::vector<QuadraticForm> forms;
  forms.reserve(cfg.samples);
  for (std::size_t m = 0; m < cfg.samples; ++m) {
    forms.push_back(draw_form(cfg.seed, m, cfg.coefficient_range));
  }

  ErrorTable table;
  table.kind = ExperimentKind::kTable1;
  for (int n : cfg.valences) {
    for (double l1 : cfg.levels) {
      std::vector<ErrorAccumulator> acc(schemes.size());
      double eta_sum = 0.0;
      std::size_t eta_count = 0;
      for (const auto& a : forms) {
        std::optional<StarQuantities> q;
        try {
          q = star_quantities(regular_fan(a, n, l1));
        } catch (const Error& e) {
          for (auto& x : acc) x.fail(flag_for(e));
          continue;
        }
        eta_sum += q->max_eta;
        ++eta_count;
        const double truth = true_curvatures(a).gaussian;
        const double truth_h = std::abs(true_curvatures(a).mean);
        for (std::size_t s = 0; s < schemes.size(); ++s) {
          try {
            const double value = evaluate(schemes[s], *q);
            acc[s].add(std::abs(value - (schemes[s] == SchemeId::kH1 ? truth_h : truth)));
          } catch (const Error& e) {
            acc[s].fail(flag_for(e));
          }
        }
      }
      const double eta = eta_count ? eta_sum / static_cast<double>(eta_count) : kNaN;
      for (std::size_t s = 0; s < schemes.size(); ++s) {
        table.rows.push_back({"", schemes[s], static_cast<std::size_t>(n), l1, eta,
                              acc[s].mean(), std::nullopt, acc[s].flag()});
      }
    }
  }
  // Rows come out level-major inside each valence; regroup into contiguous
  // (n, scheme) blocks.
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const ErrorRow& a, const ErrorRow& b) {
                     if (a.n_or_N != b.n_or_N) return a.n_or_N < b.n_or_N;
                     return a.scheme < b.scheme;
                   });
  attach_slopes(table.rows);
  return table;
}

ErrorTable run_table2(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto schemes = scheme_set(cfg, {SchemeId::kG1, SchemeId::kG2, SchemeId::kG4,
                                        SchemeId::kG5, SchemeId::kH1});
  ErrorTable table;
  table.kind = ExperimentKind::kTable2;
  for (auto size : cfg.sphere_sizes) {
    const auto points = sample_uniform_sphere(size, table2_sphere_seed(cfg.seed, size));
    const auto mesh = convex_hull(points);
    const double eta = average_edge_length(mesh);
    const auto report = estimate_mesh(mesh, schemes);
    for (std::size_t s = 0; s < report.schemes().size(); ++s) {
      ErrorAccumulator acc;
      for (std::size_t v = 0; v < report.vertex_count(); ++v) {
        const auto& sv = report.at(v, s);
        if (sv.flag == VertexFlag::kOk) {
          acc.add(std::abs(sv.value - 1.0));
        } else {
          acc.fail(sv.flag);
        }
      }
      table.rows.push_back({"", report.schemes()[s], size, std::nullopt, eta,
                            acc.mean(), std::nullopt, acc.flag()});
    }
  }
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const ErrorRow& a, const ErrorRow& b) { return a.scheme < b.scheme; });
  // One slope per scheme across sphere sizes.
  std::map<SchemeId, std::vector<std::size_t>> by_scheme;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    by_scheme[table.rows[i].scheme].push_back(i);
  }
  for (const auto& [id, idx] : by_scheme) {
    std::vector<double> eps, eta;
    for (auto i : idx) {
      eps.push_back(table.rows[i].eps);
      eta.push_back(table.rows[i].eta);
    }
    try {
      const auto fit = fit_order(eps, eta);
      for (auto i : idx) table.rows[i].slope = fit.slope;
    } catch (const Error&) {
    }
  }
  return table;
}

namespace {

struct ParallelogramCase {
  std::string name;
  SurfaceMap surface;
  Vec2 base;
  Vec2 b1;
  Vec2 b2;
};

std::vector<ParallelogramCase> parallelogram_cases() {
  std::vector<ParallelogramCase> out;
  out.push_back({"paraboloid", SurfaceMap::quadratic_graph({1.0, 0.0, 1.0}),
                 {0.0, 0.0}, {1.0, 0.0}, {0.3, 0.9}});
  out.push_back({"saddle", SurfaceMap::quadratic_graph({0.7, 0.4, -1.1}),
                 {0.2, -0.1}, {1.0, 0.2}, {-0.4, 1.0}});
  out.push_back({"wave", SurfaceMap::wave_graph(), {0.3, -0.2}, {1.0, 0.0},
                 {0.4, 0.8}});
  out.push_back({"torus", SurfaceMap::torus(2.0, 0.7), {0.4, 0.9}, {1.0, 0.2},
                 {-0.3, 1.0}});
  return out;
}

}  // namespace

ErrorTable run_parallelogram(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto schemes = scheme_set(cfg, {SchemeId::kG1, SchemeId::kG3});
  ErrorTable table;
  table.kind = ExperimentKind::kParallelogram;
  for (const auto& c : parallelogram_cases()) {
    const auto family = parallelogram_family(c.surface, c.base, c.b1, c.b2);
    const auto fans = refine(family, cfg.levels);
    for (auto id : schemes) {
      for (const auto& rf : fans) {
        ErrorRow row{c.name, id, 6, rf.level, 0.0, kNaN, std::nullopt, "ok"};
        try {
          const auto q = star_quantities(rf.fan);
          row.eta = q.max_eta;
          const double truth =
              id == SchemeId::kH1 ? family.true_mean : family.true_gaussian;
          row.eps = std::abs(evaluate(id, q) - truth);
        } catch (const Error& e) {
          row.flag = std::string(to_string(flag_for(e)));
        }
        table.rows.push_back(std::move(row));
      }
    }
  }
  attach_slopes(table.rows);
  return table;
}

ErrorTable run_counterexample(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto schemes = scheme_set(cfg, {SchemeId::kG1, SchemeId::kG2, SchemeId::kG3,
                                        SchemeId::kG4, SchemeId::kG5});
  ErrorTable table;
  table.kind = ExperimentKind::kCounterexample;

  bool identical = true;
  for (double r1 : cfg.levels) {
    const auto reference = counterexample_fan(cfg.c_values.front(), r1).fan;
    for (double c : cfg.c_values) {
      identical = identical && counterexample_fan(c, r1).fan == reference;
    }
  }
  table.summary.emplace_back("fans_identical", identical ? 1.0 : 0.0);

  for (auto id : schemes) {
    double irreducible = 0.0;
    double limit = kNaN;
    for (double c : cfg.c_values) {
      const auto family = counterexample_family(c);
      const double truth = id == SchemeId::kH1 ? family.true_mean : family.true_gaussian;
      for (const auto& rf : refine(family, cfg.levels)) {
        ErrorRow row{fmt::format("c={}", c), id, 4, rf.level, 0.0, kNaN,
                     std::nullopt, "ok"};
        try {
          const auto q = star_quantities(rf.fan);
          row.eta = q.max_eta;
          const double value = evaluate(id, q);
          row.eps = std::abs(value - truth);
          if (rf.level == cfg.levels.back()) {
            limit = value;
            irreducible = std::max(irreducible, row.eps);
          }
        } catch (const Error& e) {
          row.flag = std::string(to_string(flag_for(e)));
        }
        table.rows.push_back(std::move(row));
      }
    }
    table.summary.emplace_back(fmt::format("limit_{}", to_string(id)), limit);
    table.summary.emplace_back(fmt::format("irreducible_error_{}", to_string(id)),
                               irreducible);
  }
  attach_slopes(table.rows);
  return table;
}

ErrorTable run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.kind) {
    case ExperimentKind::kTable1: return run_table1(cfg);
    case ExperimentKind::kTable2: return run_table2(cfg);
    case ExperimentKind::kParallelogram: return run_parallelogram(cfg);
    case ExperimentKind::kCounterexample: return run_counterexample(cfg);
  }
  throw Error(ErrorCode::kConfig, "unknown experiment kind");
}

void write_table(std::ostream& out, const ErrorTable& table, OutputFormat format) {
  const bool with_case = std::any_of(table.rows.begin(), table.rows.end(),
                                     [](const ErrorRow& r) { return !r.case_label.empty(); });
  if (format == OutputFormat::kJson) {
    nlohmann::ordered_json doc;
    doc["experiment"] = std::string(to_string(table.kind));
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : table.rows) {
      nlohmann::ordered_json row;
      if (with_case) row["case"] = r.case_label;
      row["scheme"] = std::string(to_string(r.scheme));
      row["n_or_N"] = r.n_or_N;
      row["level"] = r.level ? json_number(*r.level) : nullptr;
      row["eta"] = json_number(r.eta);
      row["eps"] = json_number(r.eps);
      row["slope"] = r.slope ? json_number(*r.slope) : nullptr;
      row["flag"] = r.flag;
      rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    for (const auto& [k, v] : table.summary) summary[k] = json_number(v);
    doc["summary"] = std::move(summary);
    out << doc.dump(2) << '\n';
    return;
  }
  if (with_case) out << "case,";
  out << "scheme,n_or_N,level,eta,eps,slope,flag\n";
  for (const auto& r : table.rows) {
    if (with_case) out << r.case_label << ',';
    fmt::print(out, "{},{},{},{},{},{},{}\n", to_string(r.scheme), r.n_or_N,
               r.level ? number(*r.level, "{:.9g}") : "",
               number(r.eta, "{:.6e}"), number(r.eps, "{:.6e}"),
               r.slope ? number(*r.slope, "{:.4f}") : "", r.flag);
  }
  for (const auto& [k, v] : table.summary) {
    fmt::print(out, "# {}={}\n", k, number(v, "{:.9g}"));
  }
}

std::string format_table(const ErrorTable& table, OutputFormat format) {
  std::ostringstream out;
  write_table(out, table, format);
  return out.str();
}

void write_report(std::ostream& out, const CurvatureReport& report,
                  OutputFormat format) {
  if (format == OutputFormat::kJson) {
    nlohmann::ordered_json doc;
    auto schemes = nlohmann::ordered_json::array();
    for (auto id : report.schemes()) schemes.push_back(std::string(to_string(id)));
    doc["schemes"] = std::move(schemes);
    auto vertices = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < report.vertex_count(); ++v) {
      nlohmann::ordered_json entry;
      entry["vertex"] = v;
      for (std::size_t s = 0; s < report.schemes().size(); ++s) {
        const auto& sv = report.at(v, s);
        entry[std::string(to_string(report.schemes()[s]))] = {
            {"value", json_number(sv.value)},
            {"flag", std::string(to_string(sv.flag))}};
      }
      vertices.push_back(std::move(entry));
    }
    doc["vertices"] = std::move(vertices);
    out << doc.dump(2) << '\n';
    return;
  }
  out << "vertex,scheme,value,flag\n";
  for (std::size_t v = 0; v < report.vertex_count(); ++v) {
    for (std::size_t s = 0; s < report.schemes().size(); ++s) {
      const auto& sv = report.at(v, s);
      fmt::print(out, "{},{},{},{}\n", v, to_string(report.schemes()[s]),
                 sv.flag == VertexFlag::kOk ? number(sv.value, "{:.17g}") : "",
                 to_string(sv.flag));
    }
  }
}

std::string format_report(const CurvatureReport& report, OutputFormat format) {
  std::ostringstream out;
  write_report(out, report, format);
  return out.str();
}

}  // namespace angdef
