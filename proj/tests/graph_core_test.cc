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

#include "patdet/graph_core.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "patdet/graph.h"
#include "patdet/graph_io.h"
#include "patdet/pattern.h"
#include "testing_util.h"

namespace patdet {
namespace {

using ::patdet::testing::Isomorphic;

// W_5: rim a1..a5 on 0..4, hub a6 on 5.
OrderedPattern HEx() {
  return OrderedPattern::FromEdges(6, std::vector<std::pair<int, int>>{{0, 1},
                                                                       {1, 2},
                                                                       {2, 3},
                                                                       {3, 4},
                                                                       {4, 0},
                                                                       {5, 0},
                                                                       {5, 1},
                                                                       {5, 2},
                                                                       {5, 3},
                                                                       {5, 4}});
}

TEST(GraphTest, UndirectedEdgesAreSymmetric) {
  Graph g(4, false);
  g.AddEdge(0, 3);
  EXPECT_TRUE(g.HasEdge(3, 0));
  EXPECT_EQ(g.edge_count(), 1);
  g.AddEdge(3, 0);
  EXPECT_EQ(g.edge_count(), 1);
  g.RemoveEdge(0, 3);
  EXPECT_FALSE(g.HasEdge(3, 0));
  EXPECT_THROW(g.AddEdge(1, 1), std::invalid_argument);
}

TEST(GraphTest, DirectedArcsAreNot) {
  Graph g(3, true);
  g.AddEdge(0, 1);
  EXPECT_TRUE(g.HasEdge(0, 1));
  EXPECT_FALSE(g.HasEdge(1, 0));
  EXPECT_EQ(g.OutDegree(0), 1);
  EXPECT_EQ(g.InDegree(1), 1);
}

TEST(GraphIoTest, RoundTrip) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::RandomGraph(1 + trial, 0.4, rng, trial % 2 == 1);
    absl::StatusOr<Graph> back = ParseGraph(FormatGraph(g));
    ASSERT_TRUE(back.ok()) << back.status();
    EXPECT_EQ(*back, g);
  }
}

TEST(GraphIoTest, CommentsAndBlankLines) {
  absl::StatusOr<Graph> g = ParseGraph("# tri\n\n3 3 U\n0 1\n# x\n1 2\n2 0\n");
  ASSERT_TRUE(g.ok()) << g.status();
  EXPECT_EQ(g->edge_count(), 3);
}

TEST(GraphIoTest, ErrorsCarryLineNumbers) {
  absl::StatusOr<Graph> g = ParseGraph("3 2 U\n0 1\n0 7\n");
  ASSERT_FALSE(g.ok());
  EXPECT_NE(g.status().message().find("line 3"), std::string::npos);
  EXPECT_FALSE(ParseGraph("3 1 X\n0 1\n").ok());
  EXPECT_FALSE(ParseGraph("3 2 U\n0 1\n").ok());
  EXPECT_FALSE(ParseGraph("2 1 U\n1 1\n").ok());
}

TEST(CanonicalKeyTest, EqualKeysIffIsomorphic) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 2 + trial % 4;
    const OrderedPattern a = testing::RandomPattern(k, rng);
    const OrderedPattern b = testing::RandomPattern(k, rng);
    EXPECT_EQ(CanonicalKey(a) == CanonicalKey(b), Isomorphic(a, b));
    EXPECT_TRUE(Isomorphic(PatternFromKey(CanonicalKey(a)), a));
  }
}

TEST(CountInducedTest, SmallCases) {
  const Graph k3 = OrderedPattern::Complete(3).ToGraph();
  EXPECT_EQ(*CountInducedBruteforce(k3, OrderedPattern::Triangle()), 1);
  const Graph k4 = OrderedPattern::Complete(4).ToGraph();
  EXPECT_EQ(*CountInducedBruteforce(k4, OrderedPattern::Diamond()), 0);
  EXPECT_EQ(*CountInducedBruteforce(k3, OrderedPattern::Complete(4)), 0);
}

TEST(CountInducedTest, RejectsDirectedHosts) {
  EXPECT_FALSE(
      CountInducedBruteforce(Graph(4, true), OrderedPattern::Paw()).ok());
}

TEST(CountInducedTest, PawMatchesSubsetOracle) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::RandomGraph(12, 0.5, rng);
    EXPECT_EQ(*CountInducedBruteforce(g, OrderedPattern::Paw()),
              testing::CountInduced(g, OrderedPattern::Paw()));
  }
}

TEST(CountInducedTest, ComplementSymmetry) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + trial % 7, k = 2 + trial % 4;
    const Graph g = testing::RandomGraph(n, 0.5, rng);
    const OrderedPattern h = testing::RandomPattern(k, rng);
    EXPECT_EQ(*CountInducedBruteforce(g, h),
              *CountInducedBruteforce(g.Complement(), h.Complement()));
  }
}

TEST(NoninducedTest, Examples) {
  std::mt19937_64 rng(14);
  const Graph k5 = OrderedPattern::Complete(5).ToGraph();
  for (int trial = 0; trial < 20; ++trial) {
    EXPECT_TRUE(
        *ExistsNoninducedBruteforce(k5, testing::RandomPattern(5, rng)));
  }
  EXPECT_FALSE(*ExistsNoninducedBruteforce(OrderedPattern::Cycle(5).ToGraph(),
                                           OrderedPattern::Triangle()));
}

TEST(NoninducedTest, AgreesWithOracleAndIsMonotone) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = testing::RandomGraph(7, 0.35, rng);
    const OrderedPattern h = testing::RandomPattern(3 + trial % 3, rng);
    bool before = *ExistsNoninducedBruteforce(g, h);
    EXPECT_EQ(before, testing::ContainsNoninduced(g, h));
    absl::StatusOr<std::optional<std::vector<int>>> found =
        FindNoninducedBruteforce(g, h);
    ASSERT_TRUE(found.ok());
    EXPECT_EQ(found->has_value(), before);
    if (found->has_value()) {
      const std::vector<int>& image = **found;
      for (auto [i, j] : h.Edges()) EXPECT_TRUE(g.HasEdge(image[i], image[j]));
    }
    std::uniform_int_distribution<int> pick(0, 6);
    for (int add = 0; add < 5; ++add) {
      const int u = pick(rng), v = pick(rng);
      if (u != v) g.AddEdge(u, v);
      const bool after = *ExistsNoninducedBruteforce(g, h);
      EXPECT_TRUE(!before || after);
      before = after;
    }
  }
}

TEST(AutomorphismTest, KnownValues) {
  EXPECT_EQ(AutomorphismCount(OrderedPattern::Diamond()), 4);
  EXPECT_EQ(AutomorphismCount(OrderedPattern::Complete(4)), 24);
  EXPECT_EQ(AutomorphismCount(OrderedPattern::Paw()), 2);
  EXPECT_EQ(AutomorphismCount(OrderedPattern::Cycle(5)), 10);
}

TEST(AutomorphismTest, CliquePlusVertexFormula) {
  for (int k = 3; k <= 8; ++k) {
    for (int s = (k - 1 + 1) / 2; s <= k - 1; ++s) {
      if (s == k - 2) continue;
      // s = k - 1 is K_k.
      std::int64_t expected = s == k - 1 ? k : 1;
      for (int i = 2; i <= s; ++i) expected *= i;
      for (int i = 2; i <= k - s - 1; ++i) expected *= i;
      EXPECT_EQ(AutomorphismCount(OrderedPattern::CliquePlusVertex(k, s)),
                expected)
          << "k=" << k << " s=" << s;
    }
  }
}

TEST(AutomorphismTest, DividesFactorialAndMatchesComplement) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + trial % 7;
    const OrderedPattern h = testing::RandomPattern(k, rng);
    std::int64_t fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    const std::int64_t aut = AutomorphismCount(h);
    EXPECT_EQ(aut, testing::Automorphisms(h));
    EXPECT_EQ(fact % aut, 0);
    EXPECT_EQ(aut, AutomorphismCount(h.Complement()));
  }
}

TEST(ChromaticTest, Examples) {
  for (int t = 1; t <= 6; ++t) {
    EXPECT_EQ(ChromaticNumber(OrderedPattern::Complete(t)), t);
  }
  EXPECT_EQ(ChromaticNumber(HEx()), 4);
  EXPECT_EQ(ChromaticNumber(OrderedPattern::Cycle(6)), 2);
  EXPECT_EQ(ChromaticNumber(OrderedPattern::Cycle(5)), 3);
}

TEST(ChromaticTest, CliqueBoundAndSqrtExercise) {
  for (int k = 1; k <= 5; ++k) {
    const int pairs = k * (k - 1) / 2;
    const int bound = static_cast<int>(std::ceil(std::sqrt(double(k))));
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      const OrderedPattern h = OrderedPattern::FromPairMask(k, mask);
      const int chi = ChromaticNumber(h);
      EXPECT_GE(chi, MaxCliqueSize(h));
      EXPECT_GE(std::max(chi, ChromaticNumber(h.Complement())), bound);
    }
  }
}

TEST(MaxCliqueTest, Examples) {
  EXPECT_EQ(MaxCliqueSize(HEx()), 3);
  EXPECT_EQ(MaxCliqueSize(OrderedPattern::Empty(4)), 1);
  EXPECT_EQ(MaxCliqueSize(OrderedPattern::Cycle(5).Complement()), 2);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testing::RandomGraph(10, 0.5, rng);
    const int w = MaxCliqueSize(g);
    EXPECT_TRUE(testing::HasClique(g, w));
    EXPECT_FALSE(testing::HasClique(g, w + 1));
  }
}

TEST(RandomInducedSubgraphTest, DeterministicAndRemapped) {
  std::mt19937_64 rng(18);
  const Graph g = testing::RandomGraph(20, 0.3, rng);
  const SampledSubgraph a = RandomInducedSubgraph(g, 99);
  const SampledSubgraph b = RandomInducedSubgraph(g, 99);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.original_ids, b.original_ids);
  for (int u = 0; u < a.graph.node_count(); ++u) {
    for (int v = 0; v < a.graph.node_count(); ++v) {
      if (u == v) continue;
      EXPECT_EQ(a.graph.HasEdge(u, v),
                g.HasEdge(a.original_ids[u], a.original_ids[v]));
    }
  }
  EXPECT_EQ(RandomInducedSubgraph(Graph(0, false), 1).graph.node_count(), 0);
}

TEST(RandomInducedSubgraphTest, KeepsHalfOnAverage) {
  const Graph g(20, false);
  double total = 0;
  for (int seed = 0; seed < 10000; ++seed) {
    total += RandomInducedSubgraph(g, seed).graph.node_count();
  }
  const double mean = total / 10000;
  EXPECT_GE(mean, 9.5);
  EXPECT_LE(mean, 10.5);
}

InducedDetector BruteDetector(const OrderedPattern& h) {
  return [h](const Graph& g) {
    return CountInducedBruteforce(g, h).value_or(0) > 0;
  };
}

TEST(FindFromDetectionTest, CliqueAmongIsolatedVertices) {
  Graph g(9, false);
  for (int u = 2; u < 7; ++u) {
    for (int v = u + 1; v < 7; ++v) g.AddEdge(u, v);
  }
  const OrderedPattern k5 = OrderedPattern::Complete(5);
  auto found = FindFromDetection(g, k5, BruteDetector(k5));
  ASSERT_TRUE(found.ok()) << found.status();
  ASSERT_TRUE(found->has_value());
  std::vector<int> vs = **found;
  std::sort(vs.begin(), vs.end());
  EXPECT_EQ(vs, (std::vector<int>{2, 3, 4, 5, 6}));
}

TEST(FindFromDetectionTest, AbsentPattern) {
  const Graph g = OrderedPattern::Cycle(6).ToGraph();
  auto found = FindFromDetection(g, OrderedPattern::Triangle(),
                                 BruteDetector(OrderedPattern::Triangle()));
  ASSERT_TRUE(found.ok());
  EXPECT_FALSE(found->has_value());
}

TEST(FindFromDetectionTest, PlantedPatternsAreRecovered) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    const OrderedPattern h = testing::RandomPattern(4, rng);
    Graph g = testing::RandomGraph(24, 0.2, rng);
    std::vector<int> ids(24);
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        if (h.HasEdge(i, j)) {
          g.AddEdge(ids[i], ids[j]);
        } else {
          g.RemoveEdge(ids[i], ids[j]);
        }
      }
    }
    auto found = FindFromDetection(g, h, BruteDetector(h));
    ASSERT_TRUE(found.ok()) << found.status();
    ASSERT_TRUE(found->has_value());
    EXPECT_TRUE(Isomorphic(testing::InducedOn(g, **found), h));
  }
}

TEST(FindFromDetectionTest, LyingDetectorIsReported) {
  const Graph g = OrderedPattern::Cycle(12).ToGraph();
  auto found = FindFromDetection(g, OrderedPattern::Triangle(),
                                 [](const Graph&) { return true; });
  EXPECT_FALSE(found.ok());
}

}  // namespace
}  // namespace patdet
