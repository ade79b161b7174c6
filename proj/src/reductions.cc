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

#include "patdet/reductions.h"

#include <algorithm>
#include <bit>
#include <optional>

#include "absl/strings/str_cat.h"
#include "patdet/graph_core.h"

namespace patdet {
namespace {

std::uint32_t FullMask(int k) { return (1u << k) - 1; }

std::vector<int> MaskToList(std::uint32_t mask) {
  std::vector<int> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

std::uint32_t ListToMask(const std::vector<int>& list) {
  std::uint32_t mask = 0;
  for (int v : list) mask |= 1u << v;
  return mask;
}

bool IsSubset(std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; }

bool ByVertexList(std::uint32_t a, std::uint32_t b) {
  return MaskToList(a) < MaskToList(b);
}

bool IsCliqueMask(const OrderedPattern& h, std::uint32_t mask) {
  for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if (!IsSubset(mask & ~(1u << v), h.Neighbors(v))) return false;
  }
  return true;
}

// Calls fn(mask) for every vertex set of h of the given size.
template <typename Fn>
void ForEachMaskOfSize(int k, int size, Fn&& fn) {
  for (std::uint32_t mask = 0; mask <= FullMask(k); ++mask) {
    if (std::popcount(mask) == size) fn(mask);
  }
}

// Keeps candidates (scanned from large to small) that satisfy `accept` and
// are not contained in an earlier kept set. Each kept set is maximal because
// the property is inherited by subsets for both uses below.
template <typename Accept>
std::vector<std::uint32_t> MaximalSets(int k, Accept&& accept) {
  std::vector<std::uint32_t> kept;
  for (int size = k; size >= 1; --size) {
    ForEachMaskOfSize(k, size, [&](std::uint32_t mask) {
      for (std::uint32_t big : kept) {
        if (IsSubset(mask, big)) return;
      }
      if (accept(mask)) kept.push_back(mask);
    });
  }
  std::sort(kept.begin(), kept.end(), ByVertexList);
  return kept;
}

// Smallest sub-family of `candidates` covering every target; among families
// of that size the first in lexicographic order of index combinations.
// Candidates are sorted, so this is also the lexicographically smallest set
// list. Returns nullopt if some target fits in no candidate.
std::optional<std::vector<std::uint32_t>> ExactSetCover(
    const std::vector<std::uint32_t>& candidates,
    const std::vector<std::uint32_t>& targets) {
  // covers[i] = bitset over targets (at most 70 targets for k <= 8).
  const int m = static_cast<int>(targets.size());
  std::vector<std::vector<bool>> covers(candidates.size(),
                                        std::vector<bool>(m));
  for (int j = 0; j < m; ++j) {
    bool any = false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      covers[i][j] = IsSubset(targets[j], candidates[i]);
      any = any || covers[i][j];
    }
    if (!any) return std::nullopt;
  }
  const int c = static_cast<int>(candidates.size());
  if (m == 0) return std::vector<std::uint32_t>{};
  for (int r = 1; r <= c; ++r) {
    std::vector<int> pick(r);
    for (int i = 0; i < r; ++i) pick[i] = i;
    while (true) {
      bool all = true;
      for (int j = 0; j < m && all; ++j) {
        bool hit = false;
        for (int i : pick) hit = hit || covers[i][j];
        all = hit;
      }
      if (all) {
        std::vector<std::uint32_t> chosen;
        for (int i : pick) chosen.push_back(candidates[i]);
        return chosen;
      }
      int i = r - 1;
      while (i >= 0 && pick[i] == c - r + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

absl::Status CheckPatternSize(const OrderedPattern& h) {
  if (h.k() > kMaxPatternSize) {
    return absl::InvalidArgumentError(absl::StrCat(
        "pattern has ", h.k(), " vertices; limit is ", kMaxPatternSize));
  }
  return absl::OkStatus();
}

bool ColorClassesFormMinor(const OrderedPattern& h, std::uint32_t copy, int t,
                           const MinorColoring& coloring) {
  std::vector<std::uint32_t> classes(t, 0);
  for (int v : MaskToList(copy)) {
    const int c = coloring.colors[v];
    if (c < 1 || c > t) return false;
    classes[c - 1] |= 1u << v;
  }
  for (std::uint32_t cls : classes) {
    if (cls == 0) return false;
    // Connectivity of the class inside h.
    std::uint32_t reached = cls & (~cls + 1);
    std::uint32_t frontier = reached;
    while (frontier != 0) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const std::uint32_t fresh = h.Neighbors(v) & cls & ~reached;
      reached |= fresh;
      frontier |= fresh;
    }
    if (reached != cls) return false;
  }
  for (int a = 0; a < t; ++a) {
    for (int b = a + 1; b < t; ++b) {
      bool joined = false;
      for (int v : MaskToList(classes[a])) {
        joined = joined || (h.Neighbors(v) & classes[b]) != 0;
      }
      if (!joined) return false;
    }
  }
  return true;
}

bool SearchColoring(const OrderedPattern& h, std::uint32_t set_mask,
                    const std::vector<std::uint32_t>& copies,
                    const OrderedPattern& f, int t,
                    const std::vector<int>& vertices, std::size_t index,
                    int used, MinorColoring& coloring) {
  if (index == vertices.size()) {
    for (std::uint32_t copy : copies) {
      if (IsSubset(copy, set_mask) &&
          !ColorClassesFormMinor(h, copy, t, coloring)) {
        return false;
      }
    }
    return true;
  }
  const int limit = std::min(t, used + 1);
  for (int c = 1; c <= limit; ++c) {
    coloring.colors[vertices[index]] = c;
    if (SearchColoring(h, set_mask, copies, f, t, vertices, index + 1,
                       std::max(used, c), coloring)) {
      return true;
    }
  }
  coloring.colors[vertices[index]] = 0;
  return false;
}

// Gadget shared by both reductions. With `coloring`, adjacent blocks of equal
// color are joined by the identity matching instead of the host edges.
ReductionOutput BuildGadget(const Graph& g, const OrderedPattern& h,
                            std::uint32_t blocked,
                            const MinorColoring* coloring) {
  const int n = g.node_count();
  const int k = h.k();
  ReductionOutput out;
  out.blocked_vertices = MaskToList(blocked);
  std::vector<int> first(k, -1);
  for (int v : out.blocked_vertices) {
    first[v] = static_cast<int>(out.block_map.size());
    for (int w = 0; w < n; ++w) out.block_map.push_back({v, w});
  }
  for (int v = 0; v < k; ++v) {
    if ((blocked >> v) & 1u) continue;
    first[v] = static_cast<int>(out.block_map.size());
    out.block_map.push_back({v, -1});
  }
  out.gadget = Graph(static_cast<int>(out.block_map.size()), false);
  const auto host_edges = g.Edges();
  for (auto [u, v] : h.Edges()) {
    const bool u_in = (blocked >> u) & 1u;
    const bool v_in = (blocked >> v) & 1u;
    if (u_in && v_in) {
      if (coloring != nullptr && coloring->colors[u] == coloring->colors[v]) {
        for (int w = 0; w < n; ++w)
          out.gadget.AddEdge(first[u] + w, first[v] + w);
      } else {
        for (auto [w1, w2] : host_edges) {
          out.gadget.AddEdge(first[u] + w1, first[v] + w2);
          out.gadget.AddEdge(first[u] + w2, first[v] + w1);
        }
      }
    } else if (u_in || v_in) {
      const int inside = u_in ? u : v;
      const int star = first[u_in ? v : u];
      for (int w = 0; w < n; ++w) out.gadget.AddEdge(star, first[inside] + w);
    } else {
      out.gadget.AddEdge(first[u], first[v]);
    }
  }
  return out;
}

}  // namespace

absl::StatusOr<CliqueCovering> MinTCliqueCovering(const OrderedPattern& h,
                                                  int t) {
  if (auto s = CheckPatternSize(h); !s.ok()) return s;
  if (t < 2) return absl::InvalidArgumentError("t must be at least 2");
  std::vector<std::uint32_t> cliques;
  ForEachMaskOfSize(h.k(), t, [&](std::uint32_t mask) {
    if (IsCliqueMask(h, mask)) cliques.push_back(mask);
  });
  if (cliques.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("pattern has no ", t, "-clique"));
  }
  const auto candidates = MaximalSets(
      h.k(), [&](std::uint32_t mask) { return IsColorable(h, mask, t); });
  auto cover = ExactSetCover(candidates, cliques);
  if (!cover.has_value()) {
    return absl::InternalError("no t-colorable set contains some t-clique");
  }
  CliqueCovering result;
  result.t = t;
  result.is_minimum = true;
  for (std::uint32_t mask : *cover) result.sets.push_back(MaskToList(mask));
  return result;
}

absl::StatusOr<ReductionOutput> BuildCliqueReduction(const Graph& g,
                                                     const OrderedPattern& h,
                                                     int t) {
  if (g.directed()) {
    return absl::InvalidArgumentError("host graph must be undirected");
  }
  auto covering = MinTCliqueCovering(h, t);
  if (!covering.ok()) return covering.status();
  return BuildGadget(g, h, ListToMask(covering->sets.front()), nullptr);
}

absl::StatusOr<OrderedPattern> ChooseF(const OrderedPattern& h, int t, int* z) {
  if (auto s = CheckPatternSize(h); !s.ok()) return s;
  if (ChromaticNumber(h) != t) {
    return absl::InvalidArgumentError(
        absl::StrCat("pattern is not ", t, "-chromatic"));
  }
  for (int size = 1; size <= h.k(); ++size) {
    std::optional<OrderedPattern> best;
    int best_edges = -1;
    UnlabeledPatternKey best_key;
    ForEachMaskOfSize(h.k(), size, [&](std::uint32_t mask) {
      if (IsColorable(h, mask, t - 1)) return;
      const OrderedPattern sub = h.InducedOnMask(mask);
      const int edges = sub.EdgeCount();
      const UnlabeledPatternKey key = CanonicalKey(sub);
      if (edges > best_edges || (edges == best_edges && key < best_key)) {
        best = PatternFromKey(key);
        best_edges = edges;
        best_key = key;
      }
    });
    if (best.has_value()) {
      if (z != nullptr) *z = size;
      return *best;
    }
  }
  return absl::InternalError("no t-chromatic induced sub-pattern");
}

std::vector<std::uint32_t> InducedCopies(const OrderedPattern& h,
                                         const OrderedPattern& f) {
  std::vector<std::uint32_t> copies;
  const UnlabeledPatternKey target = CanonicalKey(f);
  ForEachMaskOfSize(h.k(), f.k(), [&](std::uint32_t mask) {
    if (CanonicalKey(h.InducedOnMask(mask)) == target) copies.push_back(mask);
  });
  return copies;
}

bool IsMinorColoring(const OrderedPattern& h, std::uint32_t set_mask,
                     const OrderedPattern& f, int t,
                     const MinorColoring& coloring) {
  for (std::uint32_t copy : InducedCopies(h, f)) {
    if (IsSubset(copy, set_mask) &&
        !ColorClassesFormMinor(h, copy, t, coloring)) {
      return false;
    }
  }
  return true;
}

std::optional<MinorColoring> FindMinorColoring(const OrderedPattern& h,
                                               const std::vector<int>& set,
                                               const OrderedPattern& f, int t) {
  const std::vector<std::uint32_t> copies = InducedCopies(h, f);
  MinorColoring coloring;
  coloring.colors.assign(h.k(), 0);
  if (SearchColoring(h, ListToMask(set), copies, f, t, set, 0, 0, coloring)) {
    return coloring;
  }
  return std::nullopt;
}

absl::StatusOr<FCovering> MinFCovering(const OrderedPattern& h) {
  if (auto s = CheckPatternSize(h); !s.ok()) return s;
  const int t = ChromaticNumber(h);
  if (t < 2) return absl::InvalidArgumentError("pattern must have an edge");
  FCovering result;
  auto f = ChooseF(h, t, &result.z);
  if (!f.ok()) return f.status();
  result.f = *f;
  const std::vector<std::uint32_t> copies = InducedCopies(h, result.f);
  const auto candidates = MaximalSets(h.k(), [&](std::uint32_t mask) {
    return FindMinorColoring(h, MaskToList(mask), result.f, t).has_value();
  });
  auto cover = ExactSetCover(candidates, copies);
  if (!cover.has_value()) {
    return absl::InternalError(
        "Hadwiger counterexample candidate: some copy of F has no K_t minor "
        "coloring");
  }
  for (std::uint32_t mask : *cover) {
    result.sets.push_back(MaskToList(mask));
    result.colorings.push_back(
        *FindMinorColoring(h, result.sets.back(), result.f, t));
  }
  return result;
}

absl::StatusOr<ReductionOutput> BuildChromaticReduction(
    const Graph& g, const OrderedPattern& h) {
  if (g.directed()) {
    return absl::InvalidArgumentError("host graph must be undirected");
  }
  auto covering = MinFCovering(h);
  if (!covering.ok()) return covering.status();
  return BuildGadget(g, h, ListToMask(covering->sets.front()),
                     &covering->colorings.front());
}

absl::StatusOr<bool> VerifyReductionIff(const Graph& g, const OrderedPattern& h,
                                        int t, const ReductionOutput& out) {
  auto contains = ExistsNoninducedBruteforce(out.gadget, h);
  if (!contains.ok()) return contains.status();
  return *contains == (MaxCliqueSize(g) >= t);
}

}  // namespace patdet
