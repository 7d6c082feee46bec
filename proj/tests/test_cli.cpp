// End-to-end tests of the command-line tool: exit codes, JSON output,
// round-trips of emitted files, and DOT determinism.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fixtures.hpp"

namespace {

using nlohmann::json;
using hfo::testing::fixture_path;

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

RunResult run(const std::string& args) {
  const std::string command = std::string(HFO_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer;
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  while (fgets(buffer.data(), buffer.size(), pipe)) output += buffer.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string temp_file(const std::string& name) { return ::testing::TempDir() + name; }

TEST(Cli, ComputeTrefoilRankTwoN) {
  const auto result =
      run("compute --cfk " + fixture_path("trefoil_lh.json") + " --framing 0 --order 4");
  EXPECT_EQ(result.exit_code, 0);
  const auto report = json::parse(result.output);
  EXPECT_EQ(report["rank"], 8);
  EXPECT_EQ(report["epsilon"], -1);
  EXPECT_EQ(report["used_bounded_replacement"], false);
}

TEST(Cli, ComputeLensRank) {
  const auto result =
      run("compute --cfk " + fixture_path("unknot.json") + " --framing 5 --order 3");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_EQ(json::parse(result.output)["rank"], 15);
}

TEST(Cli, ComputeFromSpecFile) {
  const auto result = run("compute --spec " + fixture_path("spec_trefoil_lh.json"));
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_EQ(json::parse(result.output)["rank"], 8);
}

TEST(Cli, MissingFileExitsTwo) {
  const auto result = run("compute --cfk " + fixture_path("missing.json") +
                          " --framing 0 --order 1");
  EXPECT_EQ(result.exit_code, 2);
}

TEST(Cli, MalformedJsonExitsTwo) {
  const std::string path = temp_file("broken.json");
  std::ofstream(path) << "{ not json";
  EXPECT_EQ(run("compute --cfk " + path + " --framing 0 --order 1").exit_code, 2);
  std::remove(path.c_str());
}

TEST(Cli, BadFlagExitsTwo) {
  EXPECT_EQ(run("compute --nope").exit_code, 2);
  EXPECT_EQ(run("check --cfk " + fixture_path("unknot.json") +
                " --framings 1--2 --orders 1..2")
                .exit_code,
            2);
  EXPECT_EQ(run("check --cfk " + fixture_path("unknot.json") +
                " --framings 0..1 --orders 1..2 --theorem 5")
                .exit_code,
            2);
}

TEST(Cli, CheckSweepPassesAndEmitsRows) {
  const auto result = run("check --cfk " + fixture_path("unknot.json") +
                          " --framings -2..2 --orders 1..4");
  EXPECT_EQ(result.exit_code, 0);
  const auto rows = json::parse(result.output);
  EXPECT_EQ(rows.size(), 20u);
  for (const auto& row : rows) {
    EXPECT_TRUE(row["theorem2_ok"].get<bool>());
    EXPECT_TRUE(row["theorem3_ok"].get<bool>());
    EXPECT_TRUE(row["ok"].get<bool>());
  }
}

TEST(Cli, EmptySweepIsFine) {
  const auto result = run("check --cfk " + fixture_path("unknot.json") +
                          " --framings 1..0 --orders 1..2");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_EQ(json::parse(result.output).size(), 0u);
}

TEST(Cli, CheckFigureEightRanks) {
  const auto result = run("check --cfk " + fixture_path("figure8.json") +
                          " --framings 0..0 --orders 1..5 --theorem 2");
  EXPECT_EQ(result.exit_code, 0);
  const auto rows = json::parse(result.output);
  ASSERT_EQ(rows.size(), 5u);
  for (int n = 1; n <= 5; ++n)
    EXPECT_EQ(rows[n - 1]["rank_orbifold"], 2 * n + 2);
}

TEST(Cli, ReduceRecoversCycle) {
  const auto result = run("reduce --in " + fixture_path("dn_bounded_3.json"));
  EXPECT_EQ(result.exit_code, 0);
  const auto out = json::parse(result.output);
  EXPECT_EQ(out["generators"].size(), 3u);
  EXPECT_EQ(out["edges"].size(), 3u);
  for (const auto& e : out["edges"]) EXPECT_EQ(e["label"], "r23");
}

TEST(Cli, EmittedFilesReparse) {
  const std::string out_path = temp_file("reduced.json");
  EXPECT_EQ(run("reduce --in " + fixture_path("dn_bounded_3.json") + " --out " + out_path)
                .exit_code,
            0);
  // feed the emitted file back through another subcommand
  const auto dual = run("dualize --in " + out_path);
  EXPECT_EQ(dual.exit_code, 0);
  const auto graph = json::parse(dual.output);
  EXPECT_EQ(graph["generators"].size(), 3u);
  for (const auto& e : graph["edges"]) EXPECT_EQ(e["label"], "21");
  std::remove(out_path.c_str());
}

TEST(Cli, TensorAgainstTypeAFile) {
  const auto result = run("tensor --a " + fixture_path("cfa_unknot_r0.json") + " --d " +
                          fixture_path("dn_bounded_3.json"));
  EXPECT_EQ(result.exit_code, 0);
  const auto complex = json::parse(result.output);
  EXPECT_EQ(complex["generators"].size(), 2u);
  EXPECT_EQ(complex["boundary"].size(), 0u);
}

TEST(Cli, TensorUnboundedPairExitsOne) {
  const auto result = run("tensor --a " + fixture_path("cfa_unknot_r0.json") + " --d " +
                          fixture_path("dn_3.json"));
  EXPECT_EQ(result.exit_code, 1);
}

TEST(Cli, TensorWithTwistReducesToCycle) {
  const std::string out_path = temp_file("twisted.json");
  EXPECT_EQ(run("tensor --twist --d " + fixture_path("dn_bounded_3.json") + " --out " +
                out_path)
                .exit_code,
            0);
  const auto reduced = run("reduce --in " + out_path);
  EXPECT_EQ(reduced.exit_code, 0);
  EXPECT_EQ(json::parse(reduced.output)["generators"].size(), 3u);
  std::remove(out_path.c_str());
}

TEST(Cli, TauReportsAllInvariants) {
  const auto result = run("tau --cfk " + fixture_path("trefoil_lh.json"));
  EXPECT_EQ(result.exit_code, 0);
  const auto report = json::parse(result.output);
  EXPECT_EQ(report["tau"], -1);
  EXPECT_EQ(report["nu"], 0);
  EXPECT_EQ(report["nu_prime"], -1);
  EXPECT_EQ(report["epsilon"], -1);
}

TEST(Cli, TauFromWindowFile) {
  const std::string path = temp_file("window.json");
  std::ofstream(path) << R"({
    "generators": [{"name": "a", "alexander": 1}, {"name": "b", "alexander": 0},
                   {"name": "c", "alexander": -1}],
    "differentials": [{"from": "b", "to": "c", "u_power": 0},
                      {"from": "b", "to": "a", "u_power": 1}]})";
  const auto result = run("tau --cfkinf " + path);
  EXPECT_EQ(result.exit_code, 0);
  const auto report = json::parse(result.output);
  EXPECT_EQ(report["tau"], 1);
  EXPECT_EQ(report["epsilon"], 1);
  std::remove(path.c_str());
}

TEST(Cli, DualizeRejectsUnreducedInputWithExitOne) {
  EXPECT_EQ(run("dualize --in " + fixture_path("dn_bounded_3.json")).exit_code, 1);
}

TEST(Cli, DotOutputIsDeterministic) {
  const std::string dot1 = temp_file("g1.dot"), dot2 = temp_file("g2.dot");
  const std::string base = "compute --cfk " + fixture_path("trefoil_lh.json") +
                           " --framing 0 --order 2 --dot ";
  EXPECT_EQ(run(base + dot1).exit_code, 0);
  EXPECT_EQ(run(base + dot2).exit_code, 0);
  std::ifstream f1(dot1), f2(dot2);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  EXPECT_EQ(s1.str(), s2.str());
  EXPECT_NE(s1.str().find("digraph cfa"), std::string::npos);
  EXPECT_NE(s1.str().find("digraph solid_torus"), std::string::npos);
  EXPECT_NE(s1.str().find("digraph orbifold_complex"), std::string::npos);
  EXPECT_NE(s1.str().find("fillcolor=black"), std::string::npos);
  std::remove(dot1.c_str());
  std::remove(dot2.c_str());
}

TEST(Cli, GeneratorCapFromEnvironment) {
  const std::string command = std::string("HFO_MAX_GENERATORS=3 ") + HFO_CLI_PATH +
                              " compute --cfk " + fixture_path("trefoil_lh.json") +
                              " --framing 0 --order 2 2>/dev/null";
  const int status = std::system(command.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 1);
}

}  // namespace
