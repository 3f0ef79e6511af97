// Copyright 2026 The Accredia Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "commands.hpp"

namespace accredia::cli {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string config(const std::string& name) { return std::string(ACCREDIA_CONFIG_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("accredia_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_config(const std::string& name, const std::string& body) {
  const fs::path p = scratch(name) / "config.json";
  std::ofstream(p) << body;
  return p;
}

TEST(Cli, TwirlCheckOnZZ) {
  const auto r = run({"twirl-check", "--config", config("twirl_zz.json"), "--no-timestamp"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["residual"].get<double>(), 0.0);
  EXPECT_NE(r.out.find("\"residual\": 0.0"), std::string::npos);
}

TEST(Cli, AccreditNoiseless) {
  const auto r = run({"accredit", "--config", config("accredit_noiseless.json"), "--no-timestamp"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["result"]["n_traps"].get<int>(), 601);
  EXPECT_EQ(doc["result"]["n_traps_failed"].get<int>(), 0);
  EXPECT_DOUBLE_EQ(doc["result"]["epsilon_vd"].get<double>(), 0.2);
}

TEST(Cli, ThetaOutOfRangeNamesField) {
  const auto p = write_config("theta", R"({"hamiltonian":[{"coeff":1,"pauli":"ZZ"}],"theta":1.5})");
  const auto r = run({"accredit", "--config", p.string()});
  EXPECT_EQ(r.code, kInvalid);
  EXPECT_NE(r.err.find("theta"), std::string::npos);
}

TEST(Cli, UnknownFieldRejected) {
  const auto p = write_config("unknown", R"({"hamiltonian":[{"coeff":1,"pauli":"ZZ"}],"thetta":0.1})");
  const auto r = run({"accredit", "--config", p.string()});
  EXPECT_EQ(r.code, kInvalid);
  EXPECT_NE(r.err.find("thetta"), std::string::npos);
}

TEST(Cli, CapacityErrorNamesLimit) {
  const auto p = write_config("capacity", R"({"hamiltonian":[{"coeff":1,"pauli":"ZZZZ"}]})");
  ::setenv("ACCREDIA_MAX_QUBITS", "3", 1);
  const auto r = run({"twirl-check", "--config", p.string()});
  ::unsetenv("ACCREDIA_MAX_QUBITS");
  EXPECT_EQ(r.code, kCapacity);
  EXPECT_NE(r.err.find("limit 3"), std::string::npos);
}

TEST(Cli, MissingSubcommandOrConfig) {
  EXPECT_EQ(run({}).code, kInvalid);
  EXPECT_EQ(run({"accredit"}).code, kInvalid);
  EXPECT_EQ(run({"accredit", "--config", "/nonexistent.json"}).code, kInvalid);
  EXPECT_EQ(run({"--help"}).code, kOk);
}

TEST(Cli, IdenticalSeedGivesByteIdenticalArtifacts) {
  const auto a = scratch("det_a");
  const auto b = scratch("det_b");
  for (const auto& dir : {a, b}) {
    const auto r = run({"accredit", "--config", config("accredit_noisy.json"), "--seed", "99", "--out",
                        dir.string(), "--no-timestamp", "--parallelism", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
  }
  for (const char* f : {"accredit.json", "summary.csv", "executions.csv"}) {
    std::ifstream fa(a / f), fb(b / f);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    EXPECT_FALSE(sa.str().empty()) << f;
    EXPECT_EQ(sa.str(), sb.str()) << f;
  }
  const auto doc = nlohmann::json::parse(std::ifstream(a / "accredit.json"));
  EXPECT_EQ(doc["config"]["seed"].get<std::uint64_t>(), 99u);
  EXPECT_FALSE(doc.contains("timestamp"));
}

TEST(Cli, TimestampPresentByDefault) {
  const auto r = run({"twirl-check", "--config", config("twirl_zz.json")});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out).contains("timestamp"));
}

TEST(Cli, CsvHasHeaderAndOneRecordPerExecution) {
  const auto r = run({"accredit", "--config", config("accredit_noiseless.json"), "--csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  // summary header + row, executions header + 602 rows
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2 + 1 + 602);
}

TEST(Cli, InvertBenchCsv) {
  const auto r = run({"invert-bench", "--config", config("invert_bench.json"), "--csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "M,eps,distance,diamond_lower,diamond_upper");
  int rows = 0;
  double prev = 1.0;
  while (std::getline(in, line)) {
    ++rows;
    const double d = std::stod(line.substr(line.find(",,") + 2));
    EXPECT_LT(d, prev);
    prev = d;
  }
  EXPECT_EQ(rows, 4);
}

TEST(Cli, InvertBenchNeedsOneSweep) {
  const auto p = write_config("sweep", R"({"hamiltonian":[{"coeff":1,"pauli":"ZZ"}]})");
  EXPECT_EQ(run({"invert-bench", "--config", p.string()}).code, kInvalid);
}

TEST(Cli, TrapAudit) {
  const auto r = run({"trap-audit", "--config", config("trap_audit.json"), "--no-timestamp"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["rows"].size(), 15u);
  EXPECT_GE(doc["min_detection"].get<double>(), 0.5 - 1e-12);
}

TEST(Cli, AdvantageNoiselessPasses) {
  const auto r = run({"advantage", "--config", config("advantage_2x2.json"), "--no-timestamp"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc["verdict"]["passed"].get<bool>());
  EXPECT_GE(doc["verdict"]["margin"].get<double>(), 0.09);
}

}  // namespace
}  // namespace accredia::cli
