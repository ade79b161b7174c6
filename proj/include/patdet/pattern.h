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

#ifndef PATDET_PATTERN_H_
#define PATDET_PATTERN_H_

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "patdet/graph.h"

namespace patdet {

// Every exhaustive enumeration (orderings, colorings, vertex subsets) is
// limited to patterns of at most this many vertices.
inline constexpr int kMaxPatternSize = 8;

// Structural operations (edges, permutations, pattern classes) accept larger
// patterns so that the H_s^k schemes can be built for k up to 20.
inline constexpr int kMaxStructuralSize = 24;

// Small undirected pattern whose vertex order is the identity on 0..k-1.
class OrderedPattern {
 public:
  // Edgeless pattern on k vertices. Throws std::invalid_argument unless
  // 1 <= k <= kMaxStructuralSize.
  explicit OrderedPattern(int k);

  static OrderedPattern FromEdges(int k,
                                  std::span<const std::pair<int, int>> edges);
  static OrderedPattern Complete(int k);
  static OrderedPattern Empty(int k) { return OrderedPattern(k); }
  static OrderedPattern Cycle(int k);
  static OrderedPattern Path(int k);
  // Hub 0 joined to a rim cycle 1..rim.
  static OrderedPattern Wheel(int rim);
  static OrderedPattern Triangle() { return Complete(3); }
  // K_4 minus the edge {2,3}; vertices 0 and 1 have degree three.
  static OrderedPattern Diamond();
  // Triangle {0,1,2} with pendant 3 attached to 0.
  static OrderedPattern Paw();
  // (k-1)-clique on 1..k-1 plus vertex 0 adjacent to the first s of them.
  static OrderedPattern CliquePlusVertex(int k, int s);

  // Undirected graph with at most kMaxPatternSize vertices.
  static absl::StatusOr<OrderedPattern> FromGraph(const Graph& g);

  int k() const { return k_; }
  bool HasEdge(int i, int j) const { return (adjacency_[i] >> j) & 1u; }
  void AddEdge(int i, int j) { SetEdge(i, j, true); }
  void RemoveEdge(int i, int j) { SetEdge(i, j, false); }
  // Throws std::invalid_argument on i == j or out-of-range indices.
  void SetEdge(int i, int j, bool present);

  // Bitmask of neighbours of i.
  std::uint32_t Neighbors(int i) const { return adjacency_[i]; }
  int Degree(int i) const;
  int EdgeCount() const;
  // Pairs (i, j), i < j, in lexicographic order.
  std::vector<std::pair<int, int>> Edges() const;

  // Vertex i of the result is vertex order[i] of this pattern.
  OrderedPattern Permuted(std::span<const int> order) const;
  // Sub-pattern on the listed vertices, in the listed order.
  OrderedPattern Induced(std::span<const int> vertices) const;
  // Sub-pattern on the vertices of a bitmask, in increasing order.
  OrderedPattern InducedOnMask(std::uint32_t mask) const;
  OrderedPattern Complement() const;
  Graph ToGraph() const;

  // Adjacency bit-string over pairs (0,1),(0,2),...,(k-2,k-1). The first
  // pair is the most significant bit, so integer order is string order.
  // Requires k <= kMaxPatternSize.
  std::uint32_t PairMask() const;
  static OrderedPattern FromPairMask(int k, std::uint32_t mask);

  std::string DebugString() const;

  friend bool operator==(const OrderedPattern& a, const OrderedPattern& b) {
    return a.k_ == b.k_ && a.adjacency_ == b.adjacency_;
  }

 private:
  int k_;
  std::array<std::uint32_t, kMaxStructuralSize> adjacency_{};
};

// Isomorphism-class identifier: the smallest PairMask() over all k!
// orderings. Equal keys iff isomorphic.
struct UnlabeledPatternKey {
  int k = 0;
  std::uint32_t bits = 0;
  friend auto operator<=>(const UnlabeledPatternKey&,
                          const UnlabeledPatternKey&) = default;
};

UnlabeledPatternKey CanonicalKey(const OrderedPattern& pattern);
OrderedPattern PatternFromKey(const UnlabeledPatternKey& key);

// All distinct PairMask() values over the k! orderings of `pattern`.
std::vector<std::uint32_t> AllLabelings(const OrderedPattern& pattern);

// Reads a pattern file (graph format, U only, at most 8 vertices).
absl::StatusOr<OrderedPattern> ReadPatternFile(const std::string& path);

}  // namespace patdet

#endif  // PATDET_PATTERN_H_
