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
#include <bit>
#include <numeric>
#include <stdexcept>

#include "absl/strings/str_cat.h"
#include "patdet/rng.h"

namespace patdet {
namespace {

absl::Status RequireUndirected(const Graph& g) {
  if (g.directed()) {
    return absl::InvalidArgumentError("host graph must be undirected");
  }
  return absl::OkStatus();
}

absl::Status RequireEnumerable(const OrderedPattern& h) {
  if (h.k() > kMaxPatternSize) {
    return absl::InvalidArgumentError(absl::StrCat(
        "pattern has ", h.k(), " vertices; limit is ", kMaxPatternSize));
  }
  return absl::OkStatus();
}

// PairMask of the subgraph induced by `vertices`, in the given order.
std::uint32_t InducedMask(const Graph& g, std::span<const int> vertices) {
  std::uint32_t mask = 0;
  const int k = static_cast<int>(vertices.size());
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      mask = (mask << 1) | (g.HasEdge(vertices[i], vertices[j]) ? 1u : 0u);
    }
  }
  return mask;
}

// Calls fn(subset) on every k-subset of 0..n-1 in lexicographic order; stops
// early when fn returns false.
template <typename Fn>
void ForEachSubset(int n, int k, Fn&& fn) {
  if (k > n || k < 0) return;
  std::vector<int> subset(k);
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    if (!fn(std::span<const int>(subset))) return;
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i) --i;
    if (i < 0) return;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

}  // namespace

absl::StatusOr<std::int64_t> CountInducedBruteforce(const Graph& g,
                                                    const OrderedPattern& h) {
  if (auto s = RequireUndirected(g); !s.ok()) return s;
  if (auto s = RequireEnumerable(h); !s.ok()) return s;
  const std::vector<std::uint32_t> labelings = AllLabelings(h);
  std::int64_t count = 0;
  ForEachSubset(g.node_count(), h.k(), [&](std::span<const int> subset) {
    count += std::binary_search(labelings.begin(), labelings.end(),
                                InducedMask(g, subset));
    return true;
  });
  return count;
}

absl::StatusOr<std::optional<std::vector<int>>> FindInducedBruteforce(
    const Graph& g, const OrderedPattern& h) {
  if (auto s = RequireUndirected(g); !s.ok()) return s;
  if (auto s = RequireEnumerable(h); !s.ok()) return s;
  const std::vector<std::uint32_t> labelings = AllLabelings(h);
  std::optional<std::vector<int>> found;
  ForEachSubset(g.node_count(), h.k(), [&](std::span<const int> subset) {
    if (std::binary_search(labelings.begin(), labelings.end(),
                           InducedMask(g, subset))) {
      found.emplace(subset.begin(), subset.end());
      return false;
    }
    return true;
  });
  return found;
}

namespace {

// Backtracking embedding of pattern edges into host edges.
class NoninducedSearch {
 public:
  NoninducedSearch(const Graph& g, const OrderedPattern& h) : g_(g), h_(h) {
    // Most constrained first: each next vertex maximizes the number of
    // already-placed neighbours, then degree.
    std::uint32_t placed = 0;
    for (int step = 0; step < h.k(); ++step) {
      int best = -1;
      int best_links = -1;
      for (int v = 0; v < h.k(); ++v) {
        if ((placed >> v) & 1u) continue;
        const int links = std::popcount(h.Neighbors(v) & placed);
        if (links > best_links ||
            (links == best_links && h.Degree(v) > h.Degree(best))) {
          best = v;
          best_links = links;
        }
      }
      order_.push_back(best);
      placed |= 1u << best;
    }
    image_.assign(h.k(), -1);
    used_.assign(g.words_per_row(), 0);
    degree_.resize(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) degree_[v] = g.OutDegree(v);
  }

  std::optional<std::vector<int>> Run() {
    if (h_.k() > g_.node_count()) return std::nullopt;
    if (Extend(0)) return image_;
    return std::nullopt;
  }

 private:
  bool Extend(int depth) {
    if (depth == h_.k()) return true;
    const int v = order_[depth];
    const int words = g_.words_per_row();
    std::vector<std::uint64_t> candidates(words, ~std::uint64_t{0});
    if (const int tail = g_.node_count() % 64; tail != 0 && words > 0) {
      candidates[words - 1] = (std::uint64_t{1} << tail) - 1;
    }
    for (int d = 0; d < depth; ++d) {
      const int u = order_[d];
      if (!h_.HasEdge(u, v)) continue;
      auto row = g_.Row(image_[u]);
      for (int w = 0; w < words; ++w) candidates[w] &= row[w];
    }
    for (int w = 0; w < words; ++w) {
      for (std::uint64_t bits = candidates[w] & ~used_[w]; bits != 0;
           bits &= bits - 1) {
        const int x = w * 64 + std::countr_zero(bits);
        if (degree_[x] < h_.Degree(v)) continue;
        image_[v] = x;
        used_[w] |= std::uint64_t{1} << (x & 63);
        if (Extend(depth + 1)) return true;
        used_[w] &= ~(std::uint64_t{1} << (x & 63));
      }
    }
    image_[v] = -1;
    return false;
  }

  const Graph& g_;
  const OrderedPattern& h_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<std::uint64_t> used_;
  std::vector<int> degree_;
};

}  // namespace

absl::StatusOr<std::optional<std::vector<int>>> FindNoninducedBruteforce(
    const Graph& g, const OrderedPattern& h) {
  if (auto s = RequireUndirected(g); !s.ok()) return s;
  return NoninducedSearch(g, h).Run();
}

absl::StatusOr<bool> ExistsNoninducedBruteforce(const Graph& g,
                                                const OrderedPattern& h) {
  auto found = FindNoninducedBruteforce(g, h);
  if (!found.ok()) return found.status();
  return found->has_value();
}

std::int64_t AutomorphismCount(const OrderedPattern& h) {
  if (h.k() > kMaxPatternSize) {
    throw std::invalid_argument("AutomorphismCount needs k <= 8");
  }
  const std::uint32_t identity = h.PairMask();
  std::array<int, kMaxPatternSize> order{};
  std::iota(order.begin(), order.begin() + h.k(), 0);
  std::int64_t count = 0;
  do {
    count += h.Permuted(std::span<const int>(order.data(), h.k())).PairMask() ==
             identity;
  } while (std::next_permutation(order.begin(), order.begin() + h.k()));
  return count;
}

namespace {

bool ColorFrom(const OrderedPattern& h, const std::vector<int>& vertices,
               std::size_t index, int colors, int used,
               std::vector<int>& color) {
  if (index == vertices.size()) return true;
  const int v = vertices[index];
  // A vertex may open at most one new color; this fixes the color names.
  const int limit = std::min(colors, used + 1);
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (std::size_t j = 0; j < index && ok; ++j) {
      ok = !(color[vertices[j]] == c && h.HasEdge(v, vertices[j]));
    }
    if (!ok) continue;
    color[v] = c;
    if (ColorFrom(h, vertices, index + 1, colors, std::max(used, c + 1),
                  color)) {
      return true;
    }
  }
  color[v] = -1;
  return false;
}

}  // namespace

bool IsColorable(const OrderedPattern& h, std::uint32_t vertex_mask,
                 int colors) {
  std::vector<int> vertices;
  for (int v = 0; v < h.k(); ++v) {
    if ((vertex_mask >> v) & 1u) vertices.push_back(v);
  }
  if (vertices.empty()) return true;
  if (colors <= 0) return false;
  std::vector<int> color(h.k(), -1);
  return ColorFrom(h, vertices, 0, colors, 0, color);
}

int ChromaticNumber(const OrderedPattern& h) {
  const std::uint32_t all = (h.k() >= 32) ? ~0u : ((1u << h.k()) - 1);
  for (int c = 1;; ++c) {
    if (IsColorable(h, all, c)) return c;
  }
}

int MaxCliqueSize(const OrderedPattern& h) {
  if (h.k() > kMaxPatternSize) {
    throw std::invalid_argument("MaxCliqueSize needs k <= 8");
  }
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << h.k()); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    bool clique = true;
    for (int v = 0; v < h.k() && clique; ++v) {
      if ((mask >> v) & 1u) {
        clique = (h.Neighbors(v) & mask) == (mask & ~(1u << v));
      }
    }
    if (clique) best = size;
  }
  return best;
}

namespace {

void CliqueSearch(const Graph& g, std::vector<int>& candidates, int size,
                  int& best) {
  if (candidates.empty()) {
    best = std::max(best, size);
    return;
  }
  while (!candidates.empty()) {
    if (size + static_cast<int>(candidates.size()) <= best) return;
    const int v = candidates.back();
    candidates.pop_back();
    std::vector<int> next;
    for (int u : candidates) {
      if (g.HasEdge(u, v)) next.push_back(u);
    }
    CliqueSearch(g, next, size + 1, best);
  }
}

}  // namespace

int MaxCliqueSize(const Graph& g) {
  if (g.directed())
    throw std::invalid_argument("MaxCliqueSize: directed graph");
  std::vector<int> candidates(g.node_count());
  std::iota(candidates.begin(), candidates.end(), 0);
  int best = 0;
  CliqueSearch(g, candidates, 0, best);
  return best;
}

SampledSubgraph RandomInducedSubgraph(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  SampledSubgraph sample;
  for (int v = 0; v < g.node_count(); ++v) {
    if (rng.Coin()) sample.original_ids.push_back(v);
  }
  sample.graph = g.InducedSubgraph(sample.original_ids);
  return sample;
}

absl::StatusOr<std::optional<std::vector<int>>> FindFromDetection(
    const Graph& g, const OrderedPattern& h, const InducedDetector& detector) {
  if (auto s = RequireUndirected(g); !s.ok()) return s;
  if (auto s = RequireEnumerable(h); !s.ok()) return s;
  if (!detector(g)) return std::optional<std::vector<int>>();

  const int parts = h.k() + 1;
  const int threshold = 2 * parts;
  std::vector<int> live(g.node_count());
  std::iota(live.begin(), live.end(), 0);

  while (static_cast<int>(live.size()) > threshold) {
    const int size = static_cast<int>(live.size());
    bool descended = false;
    // Omitting part `skip` leaves a union of k parts.
    for (int skip = parts - 1; skip >= 0 && !descended; --skip) {
      std::vector<int> next;
      for (int p = 0; p < parts; ++p) {
        if (p == skip) continue;
        const int begin = p * size / parts;
        const int end = (p + 1) * size / parts;
        next.insert(next.end(), live.begin() + begin, live.begin() + end);
      }
      if (detector(g.InducedSubgraph(next))) {
        live = std::move(next);
        descended = true;
      }
    }
    if (!descended) {
      return absl::InternalError(absl::StrCat(
          "detector inconsistency: accepted ", size,
          " vertices but rejected every union of ", h.k(), " parts"));
    }
  }

  auto found = FindInducedBruteforce(g.InducedSubgraph(live), h);
  if (!found.ok()) return found.status();
  if (!found->has_value()) {
    return absl::InternalError(
        absl::StrCat("detector inconsistency: no copy among the final ",
                     live.size(), " vertices"));
  }
  std::vector<int> witness;
  for (int local : **found) witness.push_back(live[local]);
  std::sort(witness.begin(), witness.end());
  return std::optional<std::vector<int>>(std::move(witness));
}

}  // namespace patdet
