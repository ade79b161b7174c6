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

#include "patdet/graph.h"

#include <bit>
#include <stdexcept>
#include <string>

namespace patdet {

Graph::Graph(int node_count, bool directed)
    : node_count_(node_count),
      directed_(directed),
      words_per_row_((static_cast<std::size_t>(node_count) + 63) / 64) {
  if (node_count < 0) throw std::invalid_argument("negative node count");
  rows_.assign(words_per_row_ * static_cast<std::size_t>(node_count), 0);
}

Graph Graph::Undirected(int node_count,
                        std::span<const std::pair<int, int>> edges) {
  Graph g(node_count, false);
  for (auto [u, v] : edges) g.AddEdge(u, v);
  return g;
}

Graph Graph::Directed(int node_count,
                      std::span<const std::pair<int, int>> arcs) {
  Graph g(node_count, true);
  for (auto [u, v] : arcs) g.AddEdge(u, v);
  return g;
}

void Graph::CheckVertex(int v) const {
  if (v < 0 || v >= node_count_) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range");
  }
}

void Graph::SetBit(int u, int v, bool value) {
  std::uint64_t& word = rows_[RowOffset(u) + (v >> 6)];
  const std::uint64_t mask = std::uint64_t{1} << (v & 63);
  word = value ? (word | mask) : (word & ~mask);
}

void Graph::AddEdge(int u, int v) {
  CheckVertex(u);
  CheckVertex(v);
  if (u == v) throw std::invalid_argument("self-loop");
  if (HasEdge(u, v)) return;
  SetBit(u, v, true);
  if (!directed_) SetBit(v, u, true);
  ++edge_count_;
}

void Graph::RemoveEdge(int u, int v) {
  CheckVertex(u);
  CheckVertex(v);
  if (u == v || !HasEdge(u, v)) return;
  SetBit(u, v, false);
  if (!directed_) SetBit(v, u, false);
  --edge_count_;
}

std::vector<int> Graph::OutNeighbors(int u) const {
  std::vector<int> result;
  auto row = Row(u);
  for (std::size_t w = 0; w < row.size(); ++w) {
    for (std::uint64_t bits = row[w]; bits != 0; bits &= bits - 1) {
      result.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
    }
  }
  return result;
}

std::vector<int> Graph::InNeighbors(int u) const {
  if (!directed_) return OutNeighbors(u);
  std::vector<int> result;
  for (int v = 0; v < node_count_; ++v) {
    if (HasEdge(v, u)) result.push_back(v);
  }
  return result;
}

int Graph::OutDegree(int u) const {
  int degree = 0;
  for (std::uint64_t word : Row(u)) degree += std::popcount(word);
  return degree;
}

int Graph::InDegree(int u) const {
  if (!directed_) return OutDegree(u);
  int degree = 0;
  for (int v = 0; v < node_count_; ++v) degree += HasEdge(v, u);
  return degree;
}

std::vector<std::pair<int, int>> Graph::Edges() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < node_count_; ++u) {
    for (int v : OutNeighbors(u)) {
      if (directed_ || u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

Graph Graph::InducedSubgraph(std::span<const int> vertices) const {
  const int size = static_cast<int>(vertices.size());
  Graph sub(size, directed_);
  for (int i = 0; i < size; ++i) {
    for (int j = directed_ ? 0 : i + 1; j < size; ++j) {
      if (i != j && HasEdge(vertices[i], vertices[j])) sub.AddEdge(i, j);
    }
  }
  return sub;
}

Graph Graph::Complement() const {
  if (directed_) throw std::invalid_argument("complement of directed graph");
  Graph result(node_count_, false);
  for (int u = 0; u < node_count_; ++u) {
    for (int v = u + 1; v < node_count_; ++v) {
      if (!HasEdge(u, v)) result.AddEdge(u, v);
    }
  }
  return result;
}

}  // namespace patdet
