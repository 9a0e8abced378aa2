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
#include <cstring>
#include <filesystem>
#include <numbers>
#include <string>
#include <thread>

#include <gtest/gtest.h>

#include "angdef/angdef.h"

namespace {

const std::filesystem::path kData = ANGDEF_TEST_DATA_DIR;

std::string take(char* text) {
  std::string out(text);
  angdef_string_free(text);
  return out;
}

TEST(CApi, StatusNames) {
  EXPECT_STREQ(angdef_status_name(ANGDEF_OK), "Ok");
  EXPECT_STREQ(angdef_status_name(ANGDEF_PARSE_ERROR), "ParseError");
  EXPECT_NE(angdef_status_name(static_cast<angdef_status>(99)), nullptr);
}

TEST(CApi, OctahedronFromArrays) {
  const double s = std::sqrt(0.5);
  const double xyz[] = {s, 0, 0, -s, 0, 0, 0, s, 0, 0, -s, 0, 0, 0, s, 0, 0, -s};
  const uint32_t tris[] = {0, 2, 4, 2, 1, 4, 1, 3, 4, 3, 0, 4,
                           2, 0, 5, 1, 2, 5, 3, 1, 5, 0, 3, 5};
  angdef_mesh* mesh = nullptr;
  ASSERT_EQ(angdef_mesh_create(xyz, 6, tris, 8, &mesh), ANGDEF_OK);
  EXPECT_EQ(angdef_mesh_vertex_count(mesh), 6u);
  EXPECT_EQ(angdef_mesh_triangle_count(mesh), 8u);

  angdef_report* report = nullptr;
  ASSERT_EQ(angdef_estimate(mesh, ANGDEF_SCHEME_ALL, &report), ANGDEF_OK);
  // Unit-edge octahedron: defect 2 pi / 3 over a circumcentric cell of sqrt(3) / 3.
  for (size_t v = 0; v < 6; ++v) {
    double value = 0;
    angdef_vertex_flag flag = ANGDEF_FLAG_DEGENERATE;
    ASSERT_EQ(angdef_report_value(report, v, ANGDEF_SCHEME_G2, &value, &flag), ANGDEF_OK);
    EXPECT_EQ(flag, ANGDEF_FLAG_OK);
    EXPECT_NEAR(value, 2 * std::numbers::pi / std::sqrt(3.0), 1e-12);
  }
  double value = 0;
  angdef_vertex_flag flag;
  EXPECT_EQ(angdef_report_value(report, 6, ANGDEF_SCHEME_G2, &value, &flag),
            ANGDEF_INVALID_ARGUMENT);
  EXPECT_EQ(angdef_report_value(report, 0, ANGDEF_SCHEME_G1 | ANGDEF_SCHEME_G2, &value,
                                &flag),
            ANGDEF_INVALID_ARGUMENT);
  EXPECT_STRNE(angdef_last_error(), "");

  char* csv = nullptr;
  ASSERT_EQ(angdef_report_format(report, ANGDEF_FORMAT_CSV, &csv), ANGDEF_OK);
  EXPECT_EQ(take(csv).rfind("vertex,scheme,value,flag\n", 0), 0u);
  angdef_report_free(report);
  angdef_mesh_free(mesh);
}

TEST(CApi, RejectsBadArguments) {
  angdef_mesh* mesh = nullptr;
  const double xyz[] = {0, 0, 0, 1, 0, 0, 0, 1, 0};
  const uint32_t bad[] = {0, 1, 7};
  EXPECT_EQ(angdef_mesh_create(xyz, 3, bad, 1, &mesh), ANGDEF_INVALID_ARGUMENT);
  EXPECT_EQ(mesh, nullptr);
  EXPECT_EQ(angdef_mesh_create(nullptr, 3, bad, 1, &mesh), ANGDEF_INVALID_ARGUMENT);
  EXPECT_EQ(angdef_mesh_sphere(100, 1, nullptr), ANGDEF_INVALID_ARGUMENT);
  EXPECT_EQ(angdef_estimate(nullptr, ANGDEF_SCHEME_G1, nullptr), ANGDEF_INVALID_ARGUMENT);
  EXPECT_EQ(angdef_mesh_sphere(3, 1, &mesh), ANGDEF_INVALID_ARGUMENT);
  // Freeing null handles is a no-op.
  angdef_mesh_free(nullptr);
  angdef_report_free(nullptr);
  angdef_table_free(nullptr);
  angdef_string_free(nullptr);
}

TEST(CApi, ReadErrorsMapToStatus) {
  angdef_mesh* mesh = nullptr;
  EXPECT_EQ(angdef_mesh_read((kData / "quad.obj").c_str(), -1, &mesh),
            ANGDEF_UNSUPPORTED_POLYGON);
  EXPECT_NE(std::string(angdef_last_error()).find("6"), std::string::npos);
  EXPECT_EQ(angdef_mesh_read((kData / "nope.off").c_str(), -1, &mesh), ANGDEF_IO_ERROR);
  EXPECT_EQ(angdef_mesh_read((kData / "tetra.obj").c_str(), ANGDEF_MESH_OFF, &mesh),
            ANGDEF_PARSE_ERROR);
  ASSERT_EQ(angdef_mesh_read((kData / "octahedron.off").c_str(), -1, &mesh), ANGDEF_OK);
  EXPECT_STREQ(angdef_last_error(), "");
  EXPECT_EQ(angdef_mesh_triangle_count(mesh), 8u);
  angdef_mesh_free(mesh);
}

TEST(CApi, SphereWriteReadBack) {
  angdef_mesh* mesh = nullptr;
  ASSERT_EQ(angdef_mesh_sphere(100, 5, &mesh), ANGDEF_OK);
  EXPECT_EQ(angdef_mesh_triangle_count(mesh), 196u);
  const auto path = std::filesystem::temp_directory_path() / "angdef_capi_sphere.off";
  ASSERT_EQ(angdef_mesh_write(mesh, path.c_str(), ANGDEF_MESH_OFF), ANGDEF_OK);
  angdef_mesh* back = nullptr;
  ASSERT_EQ(angdef_mesh_read(path.c_str(), -1, &back), ANGDEF_OK);
  EXPECT_EQ(angdef_mesh_vertex_count(back), 100u);
  std::filesystem::remove(path);
  angdef_mesh_free(back);
  angdef_mesh_free(mesh);
}

TEST(CApi, CounterexampleExperiment) {
  angdef_experiment_config cfg;
  angdef_experiment_config_init(&cfg, ANGDEF_EXPERIMENT_COUNTEREXAMPLE);
  const double c[] = {0.0, 1.0};
  cfg.c_values = c;
  cfg.c_value_count = 2;
  cfg.scheme_mask = ANGDEF_SCHEME_G1 | ANGDEF_SCHEME_G2;
  angdef_table* table = nullptr;
  ASSERT_EQ(angdef_run_experiment(&cfg, &table), ANGDEF_OK);
  EXPECT_EQ(angdef_table_row_count(table), 2u * 2u * 5u);
  double identical = 0;
  ASSERT_EQ(angdef_table_summary(table, "fans_identical", &identical), ANGDEF_OK);
  EXPECT_EQ(identical, 1.0);
  double x = 0;
  EXPECT_EQ(angdef_table_summary(table, "no_such_key", &x), ANGDEF_INVALID_ARGUMENT);
  char* json = nullptr;
  ASSERT_EQ(angdef_table_format(table, ANGDEF_FORMAT_JSON, &json), ANGDEF_OK);
  EXPECT_NE(take(json).find("\"experiment\""), std::string::npos);
  angdef_table_free(table);
}

TEST(CApi, ConfigJson) {
  angdef_table* table = nullptr;
  angdef_format fmt = ANGDEF_FORMAT_CSV;
  ASSERT_EQ(angdef_run_config_json(
                R"({"experiment": "table1", "valences": [5], "samples": 2, "format": "json"})",
                &table, &fmt),
            ANGDEF_OK);
  EXPECT_EQ(fmt, ANGDEF_FORMAT_JSON);
  EXPECT_GT(angdef_table_row_count(table), 0u);
  angdef_table_free(table);
  EXPECT_EQ(angdef_run_config_json(R"({"experiment": "table1", "x": 1})", &table, nullptr),
            ANGDEF_CONFIG_ERROR);
  EXPECT_EQ(angdef_run_config_json("not json", &table, nullptr), ANGDEF_CONFIG_ERROR);
}

TEST(CApi, FitOrder) {
  const double eta[] = {0.1, 0.05, 0.025};
  const double eps[] = {0.02, 0.005, 0.00125};
  double slope = 0;
  int zero = 1;
  ASSERT_EQ(angdef_fit_order(eps, eta, 3, &slope, &zero), ANGDEF_OK);
  EXPECT_NEAR(slope, 2.0, 1e-12);
  EXPECT_EQ(zero, 0);
  const double with_zero[] = {0.02, 0.0, 0.0};
  ASSERT_EQ(angdef_fit_order(with_zero, eta, 3, &slope, nullptr), ANGDEF_OK);
  EXPECT_TRUE(std::isinf(slope));
  EXPECT_EQ(angdef_fit_order(eps, eta, 1, &slope, nullptr), ANGDEF_INVALID_ARGUMENT);
}

TEST(CApi, LastErrorIsPerThread) {
  angdef_mesh* mesh = nullptr;
  ASSERT_EQ(angdef_mesh_sphere(3, 1, &mesh), ANGDEF_INVALID_ARGUMENT);
  std::string other = "unset";
  std::thread([&] { other = angdef_last_error(); }).join();
  EXPECT_EQ(other, "");
  EXPECT_STRNE(angdef_last_error(), "");
}

}  // namespace
