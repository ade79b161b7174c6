// Copyright 2026 The patdet Authors
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

#include "patdet/cli.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "absl/strings/str_format.h"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "patdet/cycle_detect.h"
#include "patdet/graph_core.h"
#include "patdet/graph_io.h"
#include "patdet/pattern.h"
#include "testing_util.h"

namespace patdet {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun Cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = RunCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           absl::StrFormat(
               "patdet_cli_%s",
               ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string WriteGraph(const std::string& name, const Graph& g) {
    return Write(name, FormatGraph(g));
  }

  fs::path dir_;
};

TEST(Fnv1aTest, KnownVectors) {
  EXPECT_EQ(Fnv1a(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(Fnv1a("a"), 0xaf63dc4c8601ec8cull);
  EXPECT_EQ(Fnv1a("foobar"), 0x85944171f73967e8ull);
  EXPECT_EQ(Fnv1a("bar", Fnv1a("foo")), Fnv1a("foobar"));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Cli({"detect"}).code, kExitUsage);
  EXPECT_EQ(Cli({"exponents", "-k", "2", "--omega", "2"}).code, kExitUsage);
  EXPECT_EQ(Cli({"exponents", "-k", "5", "--omega", "7/2"}).code, kExitUsage);
  EXPECT_EQ(Cli({"exponents", "-k", "5", "--omega", "two"}).code, kExitUsage);
  EXPECT_EQ(
      Cli({"cycle", "--graph", (dir_ / "missing.txt").string(), "-k", "3"})
          .code,
      kExitUsage);
  EXPECT_EQ(
      Cli({"gen-corpus", "--family", "nope", "--out", dir_.string()}).code,
      kExitUsage);
}

TEST_F(CliTest, MalformedGraphReportsLine) {
  const std::string bad = Write("bad.txt", "3 2 U\n0 1\n1 7\n");
  const std::string paw =
      WriteGraph("paw.txt", OrderedPattern::Paw().ToGraph());
  const CliRun r = Cli({"detect", "--pattern", paw, "--graph", bad});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("bad.txt"), std::string::npos) << r.err;
}

TEST_F(CliTest, ExponentsClosed) {
  CliRun r = Cli({"exponents", "-k", "6", "--omega", "2", "--closed"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("17/11"), std::string::npos) << r.out;
  r = Cli({"exponents", "-k", "7", "--omega", "2.373"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("7/4"), std::string::npos);
  EXPECT_NE(r.out.find("odd-cap"), std::string::npos);
}

TEST_F(CliTest, ExponentsJsonAndCsv) {
  const std::string csv = (dir_ / "out.csv").string();
  const CliRun r = Cli({"--json", "exponents", "-k", "6", "--omega", "13/6",
                        "--closed", "--csv", csv});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["command"], "exponents");
  EXPECT_EQ(j["value"]["num"], 8);
  EXPECT_EQ(j["value"]["den"], 5);
  EXPECT_EQ(j["value"]["text"], "8/5");
  EXPECT_DOUBLE_EQ(j["value"]["decimal"].get<double>(), 1.6);
  EXPECT_EQ(j["exit_code"], 0);
  EXPECT_TRUE(j.contains("wall_time_ms"));
  EXPECT_TRUE(j.contains("seed"));
  const std::string text = Slurp(csv);
  EXPECT_EQ(text.substr(0, text.find('\n')),
            "k,omega,regime,value_num,value_den,d_vector");
  EXPECT_NE(text.find("6,13/6,k6-piece-1,8,5"), std::string::npos) << text;
}

TEST_F(CliTest, ExponentsHardCasesAndSearch) {
  CliRun r = Cli({"exponents", "--omega", "9/4", "--hard-cases"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("13/8"), std::string::npos);
  r = Cli({"--json", "exponents", "-k", "3", "--omega", "2", "--search"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["value"]["text"], "4/3");
}

TEST_F(CliTest, DetectPresentAndAbsent) {
  const std::string paw =
      WriteGraph("paw.txt", OrderedPattern::Paw().ToGraph());
  const std::string c5 =
      WriteGraph("c5.txt", OrderedPattern::Cycle(5).ToGraph());
  Graph host = OrderedPattern::Paw().ToGraph().InducedSubgraph(
      std::vector<int>{0, 1, 2, 3});
  const std::string paw_host = WriteGraph("host.txt", host);
  CliRun r = Cli({"detect", "--pattern", paw, "--graph", paw_host});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("PRESENT"), std::string::npos);
  r = Cli({"detect", "--pattern", paw, "--graph", c5});
  EXPECT_EQ(r.code, kExitAbsent);
  EXPECT_NE(r.out.find("ABSENT"), std::string::npos);
  for (const char* scheme : {"k6", "auto"}) {
    r = Cli({"detect", "--scheme", scheme, "--pattern", paw, "--graph", c5});
    EXPECT_EQ(r.code, kExitAbsent) << scheme;
  }
  // H_4^6 has a single-class scheme.
  const std::string hsk =
      WriteGraph("hsk.txt", OrderedPattern::CliquePlusVertex(6, 4).ToGraph());
  r = Cli({"detect", "--scheme", "hsk", "--pattern", hsk, "--graph", hsk});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  r = Cli({"detect", "--scheme", "hsk", "--pattern", paw, "--graph", c5});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST_F(CliTest, DetectJsonDigestAndSeed) {
  const std::string paw =
      WriteGraph("paw.txt", OrderedPattern::Paw().ToGraph());
  const std::string c5 =
      WriteGraph("c5.txt", OrderedPattern::Cycle(5).ToGraph());
  const CliRun r = Cli(
      {"--json", "--seed", "17", "detect", "--pattern", paw, "--graph", c5});
  ASSERT_EQ(r.code, kExitAbsent);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["seed"], 17);
  EXPECT_EQ(j["verdict"], "ABSENT");
  EXPECT_EQ(j["exit_code"], 1);
  EXPECT_LE(j["error_bound"].get<double>(), 0.01);
  const std::uint64_t digest = Fnv1a(Slurp(c5), Fnv1a(Slurp(paw)));
  EXPECT_EQ(j["input_digest"], absl::StrFormat("fnv1a64:%016x", digest));
}

TEST_F(CliTest, CountClassMatchesLibrary) {
  const std::string k4 =
      WriteGraph("k4.txt", OrderedPattern::Complete(4).ToGraph());
  CliRun r = Cli({"count-class", "--pattern", k4, "--graph", k4});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "24\n");
  r = Cli({"count-class", "--pattern", k4, "--graph", k4, "--mod", "5"});
  EXPECT_EQ(r.out, "4\n");
  const std::string empty = WriteGraph("e.txt", Graph(6, false));
  r = Cli({"count-class", "--pattern", k4, "--graph", empty});
  EXPECT_EQ(r.out, "0\n");
}

TEST_F(CliTest, ReduceHubbedFourCycleOnC4) {
  const OrderedPattern w4 = OrderedPattern::FromEdges(
      5, std::vector<std::pair<int, int>>{
             {0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
  const std::string pattern = WriteGraph("w4.txt", w4.ToGraph());
  const std::string host =
      WriteGraph("c4.txt", OrderedPattern::Cycle(4).ToGraph());
  const std::string out = (dir_ / "gadget.txt").string();
  const std::string map = (dir_ / "map.tsv").string();
  const CliRun r =
      Cli({"--json", "reduce", "--mode", "clique", "-t", "3", "--pattern",
           pattern, "--graph", host, "--verify", "--out", out, "--map", map});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verified"], true);
  absl::StatusOr<Graph> gadget = ReadGraphFile(out);
  ASSERT_TRUE(gadget.ok());
  EXPECT_EQ(gadget->node_count(), j["gadget_nodes"].get<int>());
  // C_4 has no triangle, so the gadget must avoid W_4.
  EXPECT_EQ(testing::CountInduced(*gadget, w4), 0);
  const std::string map_text = Slurp(map);
  EXPECT_EQ(map_text.substr(0, map_text.find('\n')),
            "# gadget_vertex\tpattern_vertex\tsource_vertex");
  int rows = 0;
  for (char c : map_text) rows += c == '\n';
  EXPECT_EQ(rows, 1 + gadget->node_count());
}

TEST_F(CliTest, ReduceChromaticChecksT) {
  const std::string pattern =
      WriteGraph("w5.txt", OrderedPattern::Wheel(5).ToGraph());
  const std::string host =
      WriteGraph("k3.txt", OrderedPattern::Complete(3).ToGraph());
  CliRun r = Cli({"reduce", "--mode", "chromatic", "--pattern", pattern,
                  "--graph", host, "--verify"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  r = Cli({"reduce", "--mode", "chromatic", "-t", "3", "--pattern", pattern,
           "--graph", host});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST_F(CliTest, CyclePresentAndAbsent) {
  Graph tri(3, true);
  tri.AddEdge(0, 1);
  tri.AddEdge(1, 2);
  tri.AddEdge(2, 0);
  const std::string path = WriteGraph("tri.txt", tri);
  CliRun r = Cli({"--json", "cycle", "--graph", path, "-k", "3", "--witness"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(IsDirectedCycle(tri, j["witness"].get<std::vector<int>>()));
  EXPECT_EQ(j["input_digest"],
            absl::StrFormat("fnv1a64:%016x", Fnv1a(Slurp(path))));
  Graph dag(4, true);
  dag.AddEdge(0, 1);
  dag.AddEdge(1, 2);
  dag.AddEdge(0, 2);
  r = Cli({"cycle", "--graph", WriteGraph("dag.txt", dag), "-k", "3", "--reps",
           "100", "--strategy", "matrix"});
  EXPECT_EQ(r.code, kExitAbsent);
  EXPECT_NE(r.out.find("ABSENT"), std::string::npos);
  r = Cli({"cycle", "--graph", path, "-k", "2"});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST_F(CliTest, GenCorpusDeterministicAndParsable) {
  const fs::path a = dir_ / "a";
  const fs::path b = dir_ / "b";
  for (const fs::path& out : {a, b}) {
    const CliRun r = Cli({"--seed", "5", "gen-corpus", "--family",
                          "planted-cycle", "-k", "5", "--n", "40", "--m", "150",
                          "--count", "3", "--out", out.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
  }
  int files = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    const fs::path other = b / entry.path().filename();
    EXPECT_EQ(Slurp(entry.path()), Slurp(other)) << entry.path();
    if (entry.path().extension() != ".txt") continue;
    ++files;
    const std::string text = Slurp(entry.path());
    absl::StatusOr<Graph> g = ParseGraph(text);
    ASSERT_TRUE(g.ok()) << g.status();
    EXPECT_EQ(FormatGraph(*g), text);
    EXPECT_EQ(g->edge_count(), 150);
    EXPECT_TRUE(FindDirectedCycleBruteforce(*g, 5).has_value());
  }
  EXPECT_EQ(files, 3);
  EXPECT_TRUE(fs::exists(a / "manifest.tsv"));
}

TEST_F(CliTest, GenCorpusTriangleFree) {
  const CliRun r = Cli({"gen-corpus", "--family", "triangle-free", "--n", "25",
                        "--p", "0.5", "--count", "4", "--out", dir_.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (entry.path().extension() != ".txt") continue;
    absl::StatusOr<Graph> g = ReadGraphFile(entry.path().string());
    ASSERT_TRUE(g.ok());
    EXPECT_LE(MaxCliqueSize(*g), 2);
  }
}

TEST_F(CliTest, SelfTest) {
  const CliRun r = Cli({"selftest"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
}

}  // namespace
}  // namespace patdet
