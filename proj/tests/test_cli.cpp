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

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

const std::filesystem::path kData = ANGDEF_TEST_DATA_DIR;

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ANGDEF_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  std::string out;
  char buf[4096];
  while (auto n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("angdef_cli_" + name);
}

TEST(Cli, EstimateFixture) {
  const auto r = run("estimate " + (kData / "octahedron.off").string() + " --schemes G1,G2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("vertex,scheme,value,flag\n", 0), 0u);
  EXPECT_NE(r.out.find("0,G2,"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("estimate " + (kData / "quad.obj").string()).code, 2);
  EXPECT_EQ(run("estimate " + (kData / "missing.obj").string()).code, 1);
  EXPECT_EQ(run("estimate " + (kData / "octahedron.off").string() + " --schemes G9").code, 3);
  EXPECT_EQ(run("table1 --samples x").code, 3);
  EXPECT_EQ(run("table1 --levels 0.1,0.2").code, 3);
  EXPECT_EQ(run("frobnicate").code, 3);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, ConfigErrors) {
  const auto path = temp("bad.json");
  std::ofstream(path) << R"({"experiment": "table1", "bogus": true})";
  EXPECT_EQ(run("run " + path.string()).code, 3);
  std::ofstream(path) << "{ not json";
  EXPECT_EQ(run("run " + path.string()).code, 3);
  std::filesystem::remove(path);
}

TEST(Cli, ConfigRunIsReproducible) {
  const auto path = temp("ok.json");
  std::ofstream(path) << R"({"experiment": "table1", "valences": [5], "samples": 3})";
  const auto a = run("run " + path.string());
  const auto b = run("run " + path.string());
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("scheme,n_or_N,level,eta,eps,slope,flag\n", 0), 0u);
  std::filesystem::remove(path);
}

TEST(Cli, SphereThenEstimate) {
  const auto mesh = temp("sphere.off");
  const auto out = temp("report.json");
  ASSERT_EQ(run("sphere --n 100 --seed 3 --out " + mesh.string()).code, 0);
  EXPECT_EQ(run("estimate " + mesh.string() + " --format json --out " + out.string()).code,
            0);
  std::ifstream in(out);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str().front(), '{');
  std::filesystem::remove(mesh);
  std::filesystem::remove(out);
}

TEST(Cli, CounterexampleSummary) {
  const auto r = run("counterexample --c-values 0,1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# fans_identical=1"), std::string::npos);
  EXPECT_NE(r.out.find("c=1,G1,4,"), std::string::npos);
}

}  // namespace
