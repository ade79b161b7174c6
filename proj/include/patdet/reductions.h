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

#ifndef PATDET_REDUCTIONS_H_
#define PATDET_REDUCTIONS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "patdet/graph.h"
#include "patdet/pattern.h"

namespace patdet {

// Family of vertex sets of a pattern, each inducing a t-colorable
// sub-pattern, such that every t-clique lies inside one of them.
struct CliqueCovering {
  int t = 0;
  // Sorted vertex lists; the family itself is sorted lexicographically.
  std::vector<std::vector<int>> sets;
  bool is_minimum = false;
};

// Not necessarily proper coloring. colors[v] is in 1..t for vertices of the
// colored set and 0 elsewhere.
struct MinorColoring {
  std::vector<int> colors;
};

struct FCovering {
  OrderedPattern f{1};
  int z = 0;
  std::vector<std::vector<int>> sets;
  // One coloring per set, same order.
  std::vector<MinorColoring> colorings;
};

struct BlockEntry {
  int pattern_vertex = 0;
  // Copy of this host vertex, or -1 for a singleton v*.
  int source_vertex = -1;
};

struct ReductionOutput {
  Graph gadget;
  // Indexed by gadget vertex.
  std::vector<BlockEntry> block_map;
  // The distinguished set C_1 the blocks were built for.
  std::vector<int> blocked_vertices;
};

// Minimum family by exact set cover over the inclusion-maximal t-colorable
// vertex sets. Fails if h has no t-clique or t < 2.
absl::StatusOr<CliqueCovering> MinTCliqueCovering(const OrderedPattern& h,
                                                  int t);

absl::StatusOr<ReductionOutput> BuildCliqueReduction(const Graph& g,
                                                     const OrderedPattern& h,
                                                     int t);

// Smallest-order t-chromatic induced sub-pattern with the most edges, ties
// broken by canonical key; returned in canonical order. Also reports its
// order z through `z` when non-null. Fails unless chi(h) == t.
absl::StatusOr<OrderedPattern> ChooseF(const OrderedPattern& h, int t,
                                       int* z = nullptr);

// Vertex sets (as masks) of all induced copies of f in h.
std::vector<std::uint32_t> InducedCopies(const OrderedPattern& h,
                                         const OrderedPattern& f);

// Whether every induced copy of f inside `set_mask` has a K_t minor with
// respect to `coloring`.
bool IsMinorColoring(const OrderedPattern& h, std::uint32_t set_mask,
                     const OrderedPattern& f, int t,
                     const MinorColoring& coloring);

// Exhaustive search over colorings of `set` (color names fixed by first
// appearance). Returns the all-1 coloring when `set` holds no copy of f.
std::optional<MinorColoring> FindMinorColoring(const OrderedPattern& h,
                                               const std::vector<int>& set,
                                               const OrderedPattern& f, int t);

// Minimum F-covering over the inclusion-maximal (K_t, F) minor colorable
// vertex sets, with F = ChooseF(h, chi(h)).
absl::StatusOr<FCovering> MinFCovering(const OrderedPattern& h);

// Gadget for the chromatic lower bound with t = chi(h) >= 2. A failed
// minor-coloring search is returned as an Internal error naming a Hadwiger
// counterexample candidate.
absl::StatusOr<ReductionOutput> BuildChromaticReduction(
    const Graph& g, const OrderedPattern& h);

// Does the gadget contain h (not necessarily induced) exactly when g has a
// t-clique?
absl::StatusOr<bool> VerifyReductionIff(const Graph& g, const OrderedPattern& h,
                                        int t, const ReductionOutput& out);

}  // namespace patdet

#endif  // PATDET_REDUCTIONS_H_
