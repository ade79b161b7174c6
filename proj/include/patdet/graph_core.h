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

#ifndef PATDET_GRAPH_CORE_H_
#define PATDET_GRAPH_CORE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "patdet/graph.h"
#include "patdet/pattern.h"

namespace patdet {

// Number of vertex subsets of `g` whose induced subgraph is isomorphic to
// `h`. Returns 0 when h has more vertices than g. Directed hosts are
// rejected.
absl::StatusOr<std::int64_t> CountInducedBruteforce(const Graph& g,
                                                    const OrderedPattern& h);

// First induced copy in lexicographic subset order, as a sorted vertex list.
absl::StatusOr<std::optional<std::vector<int>>> FindInducedBruteforce(
    const Graph& g, const OrderedPattern& h);

// Not-necessarily-induced search: an injective map that sends every edge of
// h to an edge of g. The returned vector maps pattern vertex i to a host
// vertex.
absl::StatusOr<std::optional<std::vector<int>>> FindNoninducedBruteforce(
    const Graph& g, const OrderedPattern& h);
absl::StatusOr<bool> ExistsNoninducedBruteforce(const Graph& g,
                                                const OrderedPattern& h);

// |Aut(h)| by checking all k! permutations. k <= 8.
std::int64_t AutomorphismCount(const OrderedPattern& h);

// Whether the sub-pattern on `vertex_mask` has a proper coloring with
// `colors` colors.
bool IsColorable(const OrderedPattern& h, std::uint32_t vertex_mask,
                 int colors);
int ChromaticNumber(const OrderedPattern& h);
int MaxCliqueSize(const OrderedPattern& h);
// Exhaustive maximum clique of an undirected host graph.
int MaxCliqueSize(const Graph& g);

struct SampledSubgraph {
  Graph graph;
  // original_ids[i] is the vertex of the source graph that became vertex i.
  std::vector<int> original_ids;
};

// Keeps each vertex independently with probability 1/2, drawn from
// Rng(seed). Deterministic in (g, seed).
SampledSubgraph RandomInducedSubgraph(const Graph& g, std::uint64_t seed);

// Decision procedure for "the graph contains an induced copy of H".
using InducedDetector = std::function<bool(const Graph&)>;

// Finding from detection: split the live vertex set into k+1 near-equal
// parts, recurse into the first union of k parts on which the detector says
// yes, and brute-force once at most 2(k+1) vertices remain. Returns nullopt
// if the detector rejects the whole graph, and an Internal error when the
// detector said yes but no branch (or the final brute force) confirms it.
absl::StatusOr<std::optional<std::vector<int>>> FindFromDetection(
    const Graph& g, const OrderedPattern& h, const InducedDetector& detector);

}  // namespace patdet

#endif  // PATDET_GRAPH_CORE_H_
