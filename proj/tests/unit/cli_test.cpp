// Copyright 2026 The qeo Authors
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

// Drives the built `qeo` binary end to end and checks outputs and exit codes.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qeo/bench/bench.hpp"
#include "qeo/core/serialize.hpp"
#include "qeo/formulations/instance_io.hpp"

namespace qeo {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qeo-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // Runs the CLI with stdout captured to out.txt; returns the exit code.
  int run(const std::string& args) const {
    const std::string cmd = std::string("'") + QEO_CLI + "' " + args + " > '" + path("out.txt") + "' 2> '" +
                            path("err.txt") + "'";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path dir_;
};

TEST_F(Cli, FormulateSolveOracleRoundtrip) {
  write("tiny.dat", "2  0 3 3 0  0 1 1 0");
  ASSERT_EQ(run("formulate --family qap --in " + path("tiny.dat") + " --penalty-a 10 --out " + path("q.json")), 0);
  const Qubo q = qubo_from_json(read_json_file(path("q.json")));
  EXPECT_EQ(q.num_vars(), 4u);
  EXPECT_EQ(q.offset(), 40.0);
  ASSERT_TRUE(q.var_names().has_value());

  ASSERT_EQ(run("solve --qubo " + path("q.json") + " --solver brute"), 0);
  const auto samples = nlohmann::json::parse(read("out.txt"));
  EXPECT_EQ(samples["records"][0]["energy"], 6.0);
  EXPECT_EQ(samples["meta"]["solver"], "brute");

  ASSERT_EQ(run("oracle --family qap --in " + path("tiny.dat")), 0);
  EXPECT_EQ(nlohmann::json::parse(read("out.txt"))["objective"], 6.0);
}

TEST_F(Cli, SolveIsDeterministicWithoutTiming) {
  write("tiny.dat", "2  0 3 3 0  0 1 1 0");
  ASSERT_EQ(run("formulate --family qap --in " + path("tiny.dat") + " --out " + path("q.json")), 0);
  for (const char* solver : {"sa", "tabu", "decomp", "vqe"}) {
    const std::string args = "solve --qubo " + path("q.json") + " --solver " + solver + " --seed 4 --no-timing";
    ASSERT_EQ(run(args), 0) << solver;
    const std::string first = read("out.txt");
    ASSERT_EQ(run(args), 0);
    EXPECT_EQ(read("out.txt"), first) << solver;
    EXPECT_EQ(first.find("elapsed_s"), std::string::npos);
  }
}

TEST_F(Cli, GenerateIsDeterministic) {
  ASSERT_EQ(run("generate --family hens --seed 3 --sources 2 --sinks 3 --out " + path("a.json")), 0);
  ASSERT_EQ(run("generate --family hens --seed 3 --sources 2 --sinks 3 --out " + path("b.json")), 0);
  EXPECT_EQ(read("a.json"), read("b.json"));
  const HensInstance h = hens_from_json(read_json_file(path("a.json")));
  EXPECT_EQ(h.sources(), 2u);
  EXPECT_EQ(h.sinks(), 3u);
  ASSERT_EQ(run("generate --family uc --seed 1 --units 4"), 0);
  EXPECT_EQ(uc_from_json(nlohmann::json::parse(read("out.txt"))).units.size(), 4u);
}

TEST_F(Cli, BenchAndReport) {
  write("suite.json", R"({
    "instances": [
      {"id": "nug8", "family": "qap", "path": ")" QEO_DATA_DIR R"(/qaplib/nug8.dat", "reference": 214},
      {"family": "uc", "generate": {"seed": 2, "units": 2}, "grids": 3}
    ],
    "solvers": ["decomp", "tabu"]
  })");
  ASSERT_EQ(run("bench --suite " + path("suite.json") + " --out " + path("r.csv")), 0) << read("err.txt");
  const BenchReport r = report_from_csv(read("r.csv"));
  ASSERT_EQ(r.rows.size(), 4u);
  EXPECT_EQ(r.rows[0].instance, "nug8");

  ASSERT_EQ(run("report --in " + path("r.csv") + " --stats --histogram-csv " + path("h.csv")), 0);
  EXPECT_NE(read("out.txt").find("qap"), std::string::npos);
  EXPECT_EQ(read("h.csv").rfind("family,bin_lo,bin_hi,count", 0), 0u);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run(""), 1);
  EXPECT_EQ(run("solve --qubo " + path("missing.json") + " --solver brute"), 1);
  write("tiny.dat", "2  0 3 3 0  0 1 1 0");
  ASSERT_EQ(run("formulate --family qap --in " + path("tiny.dat") + " --out " + path("q.json")), 0);
  EXPECT_EQ(run("solve --qubo " + path("q.json") + " --solver gurobi"), 1);

  std::ostringstream big;
  big << 13;
  for (int k = 0; k < 2 * 13 * 13; ++k) big << " 1";
  write("big.dat", big.str());
  EXPECT_EQ(run("oracle --family qap --in " + path("big.dat")), 2);

  // Grid {1, 2, 3} cannot meet a load of 2.5.
  write("uc.json", R"({"units": [{"a": 0, "b": 1, "c": 0, "p_min": 1, "p_max": 3}], "load": 2.5})");
  EXPECT_EQ(run("oracle --family uc --in " + path("uc.json") + " --grids 2"), 2);

  write("unbalanced.json", R"({"supply": [3], "demand": [2], "cost": [[1]]})");
  EXPECT_EQ(run("oracle --family hens --in " + path("unbalanced.json")), 1);
}

}  // namespace
}  // namespace qeo
