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

// Directed k-cycle detection by color coding and degree classes.

#ifndef PATDET_CYCLE_DETECT_H_
#define PATDET_CYCLE_DETECT_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "patdet/exponents.h"
#include "patdet/graph.h"
#include "patdet/rational.h"

namespace patdet {

// Vertices colored 0..k-1; only arcs from color c to color c+1 mod k remain.
// `graph` keeps the original vertex ids.
struct ColorCodedGraph {
  int k = 0;
  Graph graph;
  std::vector<int> color;
  std::vector<std::vector<int>> parts;
  std::vector<int> degree_class;
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> in;
};

// Undirected inputs are read as symmetric digraphs.
ColorCodedGraph ColorCode(const Graph& g, int k, std::uint64_t seed);

// floor(log2(in + out degree)) in the colored graph, or -1 for degree 0.
int DegreeClass(const ColorCodedGraph& cg, int v);

// max(1, ceil(log2 m)).
int LogEdgeScale(std::int64_t m);

struct DegreeClassTuple {
  std::vector<int> f;
  DegreeVector d;
};

DegreeClassTuple MakeTuple(std::vector<int> f, std::int64_t m);

// Tuples where every consecutive pair of parts (including the closing one)
// has an arc between the chosen classes, in lexicographic order of f.
std::vector<DegreeClassTuple> PopulatedTuples(const ColorCodedGraph& cg);

struct PlanNode {
  int i = 0;
  int j = 0;
  PathRule rule = PathRule::kEdge;
  int split = -1;
  Rational cost;
  int left = -1;   // sub-path for extensions and the first product factor
  int right = -1;  // second product factor
};

struct EvaluationPlan {
  ExponentTable table;
  CapacityResult capacity;
  bool use_bfs = false;
  std::vector<PlanNode> nodes;
  int forward_root = -1;   // B_{i,j}
  int backward_root = -1;  // B_{j,i}
  Rational cost;
};

EvaluationPlan PlanEvaluation(const DegreeClassTuple& tuple,
                              const Rational& omega);

enum class CycleStrategy { kAuto, kBfs, kMatrix };

// Entry (a, b) holds a middle vertex of a witnessing path, or -1.
struct ReachMatrix {
  int source_part = 0;
  int target_part = 0;
  std::vector<int> rows;
  std::vector<int> cols;
  std::vector<int> mid;

  bool Get(int r, int c) const {
    return mid[static_cast<std::size_t>(r) * cols.size() + c] >= 0;
  }
};

// A witness v_0..v_{k-1} with v_i colored i, or nullopt.
std::optional<std::vector<int>> DetectCycleColored(
    const ColorCodedGraph& cg, const DegreeClassTuple& tuple,
    CycleStrategy strategy = CycleStrategy::kAuto,
    const Rational& omega = Rational(2373, 1000));

struct CycleOptions {
  CycleStrategy strategy = CycleStrategy::kAuto;
  Rational omega{2373, 1000};
  int threads = 1;
};

struct CycleResult {
  std::optional<std::vector<int>> witness;
  double error_bound = 1.0;  // for an absent answer
  int codings = 0;
  std::int64_t tuples = 0;
};

// Smallest repetition count whose miss bound is at most `error`.
int DefaultRepetitions(int k, double error = 0.01);

double CycleErrorBound(int k, int repetitions);

absl::StatusOr<CycleResult> DetectKCycle(const Graph& g, int k,
                                         std::uint64_t seed, int repetitions,
                                         const CycleOptions& options = {});

bool IsDirectedCycle(const Graph& g, const std::vector<int>& cycle);

// Exhaustive search for a directed cycle of length exactly k.
std::optional<std::vector<int>> FindDirectedCycleBruteforce(const Graph& g,
                                                            int k);

}  // namespace patdet

#endif  // PATDET_CYCLE_DETECT_H_
