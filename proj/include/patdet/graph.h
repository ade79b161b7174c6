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

#ifndef PATDET_GRAPH_H_
#define PATDET_GRAPH_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace patdet {

// Host graph with dense bit adjacency (one bit per ordered vertex pair).
// Undirected graphs keep both bits of every edge set. Self-loops are never
// stored. Vertices are 0..node_count()-1.
class Graph {
 public:
  Graph() = default;
  Graph(int node_count, bool directed);

  static Graph Undirected(int node_count,
                          std::span<const std::pair<int, int>> edges);
  static Graph Directed(int node_count,
                        std::span<const std::pair<int, int>> arcs);

  int node_count() const { return node_count_; }
  bool directed() const { return directed_; }

  // Number of edges (undirected) or arcs (directed).
  std::int64_t edge_count() const { return edge_count_; }

  bool HasEdge(int u, int v) const {
    return (rows_[RowOffset(u) + (v >> 6)] >> (v & 63)) & 1;
  }

  // Throws std::invalid_argument on self-loops or out-of-range endpoints.
  // Adding an existing edge is a no-op.
  void AddEdge(int u, int v);
  void RemoveEdge(int u, int v);

  // Bit row of out-neighbours of u; ceil(n/64) words.
  std::span<const std::uint64_t> Row(int u) const {
    return {rows_.data() + RowOffset(u), words_per_row_};
  }
  int words_per_row() const { return static_cast<int>(words_per_row_); }

  std::vector<int> OutNeighbors(int u) const;
  std::vector<int> InNeighbors(int u) const;
  int OutDegree(int u) const;
  int InDegree(int u) const;

  // Edge list: pairs (u, v) with u < v for undirected graphs, all arcs for
  // directed graphs; sorted lexicographically.
  std::vector<std::pair<int, int>> Edges() const;

  // Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  Graph InducedSubgraph(std::span<const int> vertices) const;

  // Undirected complement. Throws on directed graphs.
  Graph Complement() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.node_count_ == b.node_count_ && a.directed_ == b.directed_ &&
           a.rows_ == b.rows_;
  }

 private:
  std::size_t RowOffset(int u) const {
    return static_cast<std::size_t>(u) * words_per_row_;
  }
  void CheckVertex(int v) const;
  void SetBit(int u, int v, bool value);

  int node_count_ = 0;
  bool directed_ = false;
  std::size_t words_per_row_ = 0;
  std::int64_t edge_count_ = 0;
  std::vector<std::uint64_t> rows_;
};

}  // namespace patdet

#endif  // PATDET_GRAPH_H_
