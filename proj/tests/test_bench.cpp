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

#include <cmath>
#include <limits>
#include <sstream>

#include <gtest/gtest.h>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "angdef/bench.hpp"
#include "angdef/error.hpp"
#include "angdef/synthesis.hpp"
#include "generators.hpp"
#include "oracle.hpp"

namespace angdef {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

TEST(FitOrder, PowerLaws) {
  const std::vector<double> eta{0.1, 0.05, 0.025, 0.0125};
  std::vector<double> quad, lin, flat;
  for (double h : eta) {
    quad.push_back(3 * h * h);
    lin.push_back(0.5 * h);
    flat.push_back(0.7);
  }
  EXPECT_NEAR(fit_order(quad, eta).slope, 2.0, 1e-12);
  EXPECT_NEAR(fit_order(lin, eta).slope, 1.0, 1e-12);
  EXPECT_NEAR(fit_order(flat, eta).slope, 0.0, 1e-12);
  EXPECT_FALSE(fit_order(quad, eta).exact_zero);
}

TEST(FitOrder, ExactZeroIsInfinite) {
  const std::vector<double> eta{0.1, 0.05}, eps{1e-3, 0.0};
  const auto r = fit_order(eps, eta);
  EXPECT_TRUE(r.exact_zero);
  EXPECT_EQ(r.slope, std::numeric_limits<double>::infinity());
}

TEST(FitOrder, RejectsBadInput) {
  const std::vector<double> one{0.1}, two{0.1, 0.05}, three{0.1, 0.05, 0.02};
  const std::vector<double> same{0.1, 0.1}, neg{-0.1, 0.05}, nan{NAN, 0.05};
  EXPECT_EQ(code_of([&] { fit_order(one, one); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { fit_order(two, three); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { fit_order(two, same); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { fit_order(neg, two); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { fit_order(two, nan); }), ErrorCode::kInvalidArgument);
}

// Property: the fitted slope agrees with an independent least-squares fit.
TEST(Properties, FitOrderMatchesOracle) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = gen::uniform_int(rng, 2, 8);
    std::vector<double> eta, eps;
    double h = gen::uniform(rng, 0.05, 1.0);
    for (int i = 0; i < k; ++i) {
      eta.push_back(h);
      eps.push_back(gen::uniform(rng, 1e-6, 1.0));
      h *= gen::uniform(rng, 0.3, 0.9);
    }
    EXPECT_NEAR(fit_order(eps, eta).slope, oracle::slope(eps, eta), 1e-9);
  }
}

TEST(Experiment, NamesRoundTrip) {
  for (auto k : {ExperimentKind::kTable1, ExperimentKind::kTable2,
                 ExperimentKind::kParallelogram, ExperimentKind::kCounterexample}) {
    EXPECT_EQ(parse_experiment(to_string(k)), k);
  }
  EXPECT_FALSE(parse_experiment("table3").has_value());
}

TEST(Config, DefaultsValidate) {
  for (auto k : {ExperimentKind::kTable1, ExperimentKind::kTable2,
                 ExperimentKind::kParallelogram, ExperimentKind::kCounterexample}) {
    const auto cfg = ExperimentConfig::defaults(k);
    EXPECT_EQ(cfg.kind, k);
    EXPECT_FALSE(cfg.schemes.empty());
    EXPECT_NO_THROW(cfg.validate());
  }
}

TEST(Config, ValidateRejects) {
  auto bad = [](auto mutate) {
    auto cfg = ExperimentConfig::defaults(ExperimentKind::kTable1);
    mutate(cfg);
    return code_of([&] { cfg.validate(); });
  };
  EXPECT_EQ(bad([](auto& c) { c.samples = 0; }), ErrorCode::kConfig);
  EXPECT_EQ(bad([](auto& c) { c.levels = {}; }), ErrorCode::kConfig);
  EXPECT_EQ(bad([](auto& c) { c.levels = {0.1, 0.2}; }), ErrorCode::kConfig);
  EXPECT_EQ(bad([](auto& c) { c.levels = {0.1, -0.05}; }), ErrorCode::kConfig);
  EXPECT_EQ(bad([](auto& c) { c.valences = {2}; }), ErrorCode::kConfig);
  EXPECT_EQ(bad([](auto& c) { c.valences = {13}; }), ErrorCode::kConfig);
  EXPECT_EQ(bad([](auto& c) { c.coefficient_range = 0; }), ErrorCode::kConfig);
  auto t2 = ExperimentConfig::defaults(ExperimentKind::kTable2);
  t2.sphere_sizes = {3};
  EXPECT_EQ(code_of([&] { t2.validate(); }), ErrorCode::kConfig);
  auto ce = ExperimentConfig::defaults(ExperimentKind::kCounterexample);
  ce.c_values = {};
  EXPECT_EQ(code_of([&] { ce.validate(); }), ErrorCode::kConfig);
}

TEST(Config, ParsesKnownKeys) {
  const auto cfg = parse_config(R"({
    "experiment": "table1", "valences": [5, 7], "levels": [0.1, 0.05],
    "samples": 3, "coefficient_range": 1.5, "seed": 9,
    "schemes": ["G1", "G5"], "format": "json"})");
  EXPECT_EQ(cfg.kind, ExperimentKind::kTable1);
  EXPECT_EQ(cfg.valences, (std::vector<int>{5, 7}));
  EXPECT_EQ(cfg.levels, (std::vector<double>{0.1, 0.05}));
  EXPECT_EQ(cfg.samples, 3u);
  EXPECT_EQ(cfg.coefficient_range, 1.5);
  EXPECT_EQ(cfg.seed, 9u);
  EXPECT_EQ(cfg.schemes, (std::vector<SchemeId>{SchemeId::kG1, SchemeId::kG5}));
  EXPECT_EQ(cfg.format, OutputFormat::kJson);

  const auto t2 = parse_config(R"({"experiment": "table2", "sizes": [30, 100]})");
  EXPECT_EQ(t2.sphere_sizes, (std::vector<std::size_t>{30, 100}));
  EXPECT_EQ(t2.schemes, ExperimentConfig::defaults(ExperimentKind::kTable2).schemes);
}

TEST(Config, StrictParsing) {
  for (const char* text : {
           "",
           "[]",
           "{",
           R"({"experiment": "table9"})",
           R"({"experiment": "table1", "bogus": 1})",
           R"({"experiment": "table1", "samples": "many"})",
           R"({"experiment": "table1", "samples": -3})",
           R"({"experiment": "table1", "levels": [0.1, 0.2]})",
           R"({"experiment": "table1", "schemes": ["G9"]})",
           R"({"experiment": "table1", "format": "xml"})",
           R"({"experiment": "counterexample", "c_values": []})",
       }) {
    EXPECT_EQ(code_of([&] { parse_config(text); }), ErrorCode::kConfig) << text;
  }
}

ExperimentConfig small_table1() {
  auto cfg = ExperimentConfig::defaults(ExperimentKind::kTable1);
  cfg.valences = {5, 6};
  cfg.levels = {0.1, 0.05, 0.025};
  cfg.samples = 5;
  return cfg;
}

TEST(Table1, ShapeAndDeterminism) {
  const auto cfg = small_table1();
  const auto a = run_table1(cfg);
  EXPECT_EQ(a.rows.size(), 2u * 3u * cfg.schemes.size());
  for (const auto& r : a.rows) {
    EXPECT_TRUE(r.case_label.empty());
    ASSERT_TRUE(r.level.has_value());
    EXPECT_TRUE(r.slope.has_value());
  }
  for (auto fmt : {OutputFormat::kCsv, OutputFormat::kJson}) {
    EXPECT_EQ(format_table(a, fmt), format_table(run_table1(cfg), fmt));
  }
  auto other = cfg;
  other.seed += 1;
  EXPECT_NE(format_table(run_table1(other), OutputFormat::kCsv),
            format_table(a, OutputFormat::kCsv));
}

TEST(Table1, CellsDoNotDependOnNeighbours) {
  // Dropping a valence leaves the remaining rows untouched.
  const auto full = run_table1(small_table1());
  auto cfg = small_table1();
  cfg.valences = {6};
  const auto part = run_table1(cfg);
  for (const auto& r : part.rows) {
    const auto* match = full.find(r.scheme, r.n_or_N, {}, r.level);
    ASSERT_NE(match, nullptr);
    EXPECT_EQ(match->eps, r.eps);
  }
}

TEST(Output, CsvHeaderAndSummary) {
  const auto t = run_table1(small_table1());
  const auto csv = format_table(t, OutputFormat::kCsv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "scheme,n_or_N,level,eta,eps,slope,flag");

  auto cfg = ExperimentConfig::defaults(ExperimentKind::kCounterexample);
  const auto ce = format_table(run_counterexample(cfg), OutputFormat::kCsv);
  EXPECT_EQ(ce.substr(0, ce.find('\n')), "case,scheme,n_or_N,level,eta,eps,slope,flag");
  EXPECT_NE(ce.find("\n# fans_identical=1"), std::string::npos);
}

TEST(Output, JsonIsWellFormed) {
  const auto t = run_counterexample(ExperimentConfig::defaults(ExperimentKind::kCounterexample));
  const auto doc = nlohmann::json::parse(format_table(t, OutputFormat::kJson));
  EXPECT_EQ(doc["experiment"], "counterexample");
  EXPECT_EQ(doc["rows"].size(), t.rows.size());
  EXPECT_EQ(doc["rows"][0]["case"], "c=0");
  EXPECT_EQ(doc["summary"]["fans_identical"], 1.0);
}

TEST(Counterexample, ErrorTracksTrueCurvature) {
  // The fan is the same for every c, so the finest-level estimate is one
  // number L per scheme and the error must be |L - (4 - c^2)|.
  const auto cfg = ExperimentConfig::defaults(ExperimentKind::kCounterexample);
  const auto t = run_counterexample(cfg);
  const double r = cfg.levels.back();
  const auto fan = gen::to_oracle(counterexample_fan(0.0, r).fan);
  const double l1 = oracle::g1(fan);
  const double l2 = oracle::g2(fan);
  EXPECT_NEAR(*t.summary_value("limit_G1"), l1, 1e-12);
  EXPECT_NEAR(*t.summary_value("limit_G2"), l2, 1e-12);
  for (double c : cfg.c_values) {
    const auto label = fmt::format("c={}", c);
    const auto* g1 = t.find(SchemeId::kG1, 4, label, r);
    const auto* g2 = t.find(SchemeId::kG2, 4, label, r);
    ASSERT_NE(g1, nullptr);
    ASSERT_NE(g2, nullptr);
    EXPECT_NEAR(g1->eps, std::abs(l1 - (4 - c * c)), 1e-12);
    EXPECT_NEAR(g2->eps, std::abs(l2 - (4 - c * c)), 1e-12);
  }
}

TEST(Parallelogram, FourSurfacesAllSchemes) {
  auto cfg = ExperimentConfig::defaults(ExperimentKind::kParallelogram);
  const auto t = run_parallelogram(cfg);
  EXPECT_EQ(t.rows.size(), 4u * cfg.schemes.size() * cfg.levels.size());
  for (const auto& r : t.rows) {
    EXPECT_EQ(r.n_or_N, 6u);
    EXPECT_EQ(r.flag, "ok");
    EXPECT_FALSE(r.case_label.empty());
  }
}

TEST(Report, CsvRows) {
  const std::vector<SchemeId> schemes{SchemeId::kG1, SchemeId::kG2};
  const auto report = estimate_mesh(make_octahedron(1.0), schemes);
  const auto csv = format_report(report, OutputFormat::kCsv);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "vertex,scheme,value,flag");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 12);
  const auto doc = nlohmann::json::parse(format_report(report, OutputFormat::kJson));
  EXPECT_FALSE(doc.empty());
}

}  // namespace
}  // namespace angdef
