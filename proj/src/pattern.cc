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

#include "patdet/pattern.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "absl/strings/str_cat.h"
#include "patdet/graph_io.h"

namespace patdet {

OrderedPattern::OrderedPattern(int k) : k_(k) {
  if (k < 1 || k > kMaxStructuralSize) {
    throw std::invalid_argument(absl::StrCat(
        "pattern size ", k, " outside [1, ", kMaxStructuralSize, "]"));
  }
}

OrderedPattern OrderedPattern::FromEdges(
    int k, std::span<const std::pair<int, int>> edges) {
  OrderedPattern p(k);
  for (auto [i, j] : edges) p.AddEdge(i, j);
  return p;
}

OrderedPattern OrderedPattern::Complete(int k) {
  OrderedPattern p(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) p.AddEdge(i, j);
  }
  return p;
}

OrderedPattern OrderedPattern::Cycle(int k) {
  if (k < 3) throw std::invalid_argument("cycle needs k >= 3");
  OrderedPattern p(k);
  for (int i = 0; i < k; ++i) p.AddEdge(i, (i + 1) % k);
  return p;
}

OrderedPattern OrderedPattern::Path(int k) {
  OrderedPattern p(k);
  for (int i = 0; i + 1 < k; ++i) p.AddEdge(i, i + 1);
  return p;
}

OrderedPattern OrderedPattern::Wheel(int rim) {
  if (rim < 3) throw std::invalid_argument("wheel needs rim >= 3");
  OrderedPattern p(rim + 1);
  for (int i = 1; i <= rim; ++i) {
    p.AddEdge(0, i);
    p.AddEdge(i, i % rim + 1);
  }
  return p;
}

OrderedPattern OrderedPattern::Diamond() {
  return FromEdges(4, std::vector<std::pair<int, int>>{
                          {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

OrderedPattern OrderedPattern::Paw() {
  return FromEdges(
      4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {0, 3}});
}

OrderedPattern OrderedPattern::CliquePlusVertex(int k, int s) {
  if (k < 2 || s < 0 || s > k - 1) {
    throw std::invalid_argument("CliquePlusVertex needs 0 <= s <= k-1");
  }
  OrderedPattern p(k);
  for (int i = 1; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) p.AddEdge(i, j);
  }
  for (int i = 1; i <= s; ++i) p.AddEdge(0, i);
  return p;
}

absl::StatusOr<OrderedPattern> OrderedPattern::FromGraph(const Graph& g) {
  if (g.directed()) {
    return absl::InvalidArgumentError("patterns must be undirected");
  }
  if (g.node_count() < 1 || g.node_count() > kMaxPatternSize) {
    return absl::InvalidArgumentError(
        absl::StrCat("pattern size ", g.node_count(), " outside [1, ",
                     kMaxPatternSize, "]"));
  }
  OrderedPattern p(g.node_count());
  for (auto [u, v] : g.Edges()) p.AddEdge(u, v);
  return p;
}

void OrderedPattern::SetEdge(int i, int j, bool present) {
  if (i < 0 || j < 0 || i >= k_ || j >= k_ || i == j) {
    throw std::invalid_argument(
        absl::StrCat("bad pattern pair (", i, ",", j, ") for k=", k_));
  }
  if (present) {
    adjacency_[i] |= 1u << j;
    adjacency_[j] |= 1u << i;
  } else {
    adjacency_[i] &= ~(1u << j);
    adjacency_[j] &= ~(1u << i);
  }
}

int OrderedPattern::Degree(int i) const { return std::popcount(adjacency_[i]); }

int OrderedPattern::EdgeCount() const {
  int twice = 0;
  for (int i = 0; i < k_; ++i) twice += Degree(i);
  return twice / 2;
}

std::vector<std::pair<int, int>> OrderedPattern::Edges() const {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k_; ++i) {
    for (int j = i + 1; j < k_; ++j) {
      if (HasEdge(i, j)) edges.emplace_back(i, j);
    }
  }
  return edges;
}

OrderedPattern OrderedPattern::Permuted(std::span<const int> order) const {
  return Induced(order);
}

OrderedPattern OrderedPattern::Induced(std::span<const int> vertices) const {
  const int size = static_cast<int>(vertices.size());
  OrderedPattern p(size);
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      if (HasEdge(vertices[i], vertices[j])) p.AddEdge(i, j);
    }
  }
  return p;
}

OrderedPattern OrderedPattern::InducedOnMask(std::uint32_t mask) const {
  std::vector<int> vertices;
  for (int i = 0; i < k_; ++i) {
    if ((mask >> i) & 1u) vertices.push_back(i);
  }
  return Induced(vertices);
}

OrderedPattern OrderedPattern::Complement() const {
  OrderedPattern p(k_);
  for (int i = 0; i < k_; ++i) {
    for (int j = i + 1; j < k_; ++j) {
      if (!HasEdge(i, j)) p.AddEdge(i, j);
    }
  }
  return p;
}

Graph OrderedPattern::ToGraph() const {
  auto edges = Edges();
  return Graph::Undirected(k_, edges);
}

std::uint32_t OrderedPattern::PairMask() const {
  if (k_ > kMaxPatternSize) {
    throw std::invalid_argument("PairMask needs k <= 8");
  }
  std::uint32_t mask = 0;
  for (int i = 0; i < k_; ++i) {
    for (int j = i + 1; j < k_; ++j)
      mask = (mask << 1) | (HasEdge(i, j) ? 1u : 0u);
  }
  return mask;
}

OrderedPattern OrderedPattern::FromPairMask(int k, std::uint32_t mask) {
  OrderedPattern p(k);
  int bit = k * (k - 1) / 2;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      --bit;
      if ((mask >> bit) & 1u) p.AddEdge(i, j);
    }
  }
  return p;
}

std::string OrderedPattern::DebugString() const {
  std::string out = absl::StrCat("k=", k_, " {");
  bool first = true;
  for (auto [i, j] : Edges()) {
    absl::StrAppend(&out, first ? "" : " ", i, "-", j);
    first = false;
  }
  return out + "}";
}

namespace {

// Calls fn(mask) for the PairMask of every ordering of p.
template <typename Fn>
void ForEachLabeling(const OrderedPattern& p, Fn&& fn) {
  const int k = p.k();
  if (k > kMaxPatternSize) throw std::invalid_argument("labelings need k <= 8");
  std::array<int, kMaxPatternSize> order{};
  std::iota(order.begin(), order.begin() + k, 0);
  do {
    std::uint32_t mask = 0;
    for (int i = 0; i < k; ++i) {
      const std::uint32_t row = p.Neighbors(order[i]);
      for (int j = i + 1; j < k; ++j)
        mask = (mask << 1) | ((row >> order[j]) & 1u);
    }
    fn(mask);
  } while (std::next_permutation(order.begin(), order.begin() + k));
}

}  // namespace

UnlabeledPatternKey CanonicalKey(const OrderedPattern& pattern) {
  std::uint32_t best = ~0u;
  ForEachLabeling(pattern,
                  [&](std::uint32_t mask) { best = std::min(best, mask); });
  return {pattern.k(), best};
}

OrderedPattern PatternFromKey(const UnlabeledPatternKey& key) {
  return OrderedPattern::FromPairMask(key.k, key.bits);
}

std::vector<std::uint32_t> AllLabelings(const OrderedPattern& pattern) {
  std::vector<std::uint32_t> masks;
  ForEachLabeling(pattern, [&](std::uint32_t mask) { masks.push_back(mask); });
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

absl::StatusOr<OrderedPattern> ReadPatternFile(const std::string& path) {
  auto graph = ReadGraphFile(path);
  if (!graph.ok()) return graph.status();
  auto pattern = OrderedPattern::FromGraph(*graph);
  if (!pattern.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path, ": ", pattern.status().message()));
  }
  return pattern;
}

}  // namespace patdet
