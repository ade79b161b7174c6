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

// Independent oracles for the tests. Nothing here calls into the library
// beyond the plain Graph / OrderedPattern containers.

#ifndef PATDET_TESTS_TESTING_UTIL_H_
#define PATDET_TESTS_TESTING_UTIL_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "patdet/graph.h"
#include "patdet/pattern.h"
#include "patdet/rational.h"

namespace patdet::testing {

inline Graph RandomGraph(int n, double p, std::mt19937_64& rng,
                         bool directed = false) {
  std::bernoulli_distribution coin(p);
  Graph g(n, directed);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v || (!directed && v < u)) continue;
      if (coin(rng)) g.AddEdge(u, v);
    }
  }
  return g;
}

inline OrderedPattern RandomPattern(int k, std::mt19937_64& rng,
                                    double p = 0.5) {
  std::bernoulli_distribution coin(p);
  OrderedPattern h(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (coin(rng)) h.AddEdge(i, j);
    }
  }
  return h;
}

inline std::vector<std::vector<int>> Permutations(int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Is there a bijection pi with a(i,j) == b(pi i, pi j)?
inline bool Isomorphic(const OrderedPattern& a, const OrderedPattern& b) {
  if (a.k() != b.k() || a.EdgeCount() != b.EdgeCount()) return false;
  for (const auto& pi : Permutations(a.k())) {
    bool ok = true;
    for (int i = 0; i < a.k() && ok; ++i) {
      for (int j = i + 1; j < a.k() && ok; ++j) {
        ok = a.HasEdge(i, j) == b.HasEdge(pi[i], pi[j]);
      }
    }
    if (ok) return true;
  }
  return false;
}

inline std::int64_t Automorphisms(const OrderedPattern& h) {
  std::int64_t count = 0;
  for (const auto& pi : Permutations(h.k())) {
    bool ok = true;
    for (int i = 0; i < h.k() && ok; ++i) {
      for (int j = i + 1; j < h.k() && ok; ++j) {
        ok = h.HasEdge(i, j) == h.HasEdge(pi[i], pi[j]);
      }
    }
    count += ok;
  }
  return count;
}

inline OrderedPattern InducedOn(const Graph& g, const std::vector<int>& vs) {
  OrderedPattern h(static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.HasEdge(vs[i], vs[j])) h.AddEdge(i, j);
    }
  }
  return h;
}

// Calls fn on every k-subset of 0..n-1, in bitmask order.
inline void ForEachSubset(
    int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> vs;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1) vs.push_back(v);
    }
    fn(vs);
  }
}

inline std::int64_t CountInduced(const Graph& g, const OrderedPattern& h) {
  std::int64_t count = 0;
  ForEachSubset(g.node_count(), h.k(), [&](const std::vector<int>& vs) {
    count += Isomorphic(InducedOn(g, vs), h);
  });
  return count;
}

// Injective map preserving the edges of h.
inline bool ContainsNoninduced(const Graph& g, const OrderedPattern& h) {
  std::vector<int> image(h.k(), -1);
  std::vector<bool> used(g.node_count(), false);
  std::function<bool(int)> place = [&](int i) {
    if (i == h.k()) return true;
    for (int v = 0; v < g.node_count(); ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        ok = !h.HasEdge(i, j) || g.HasEdge(v, image[j]);
      }
      if (!ok) continue;
      used[v] = true;
      image[i] = v;
      if (place(i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return place(0);
}

inline bool HasClique(const Graph& g, int t) {
  bool found = false;
  ForEachSubset(g.node_count(), t, [&](const std::vector<int>& vs) {
    if (found) return;
    bool all = true;
    for (std::size_t i = 0; i < vs.size() && all; ++i) {
      for (std::size_t j = i + 1; j < vs.size() && all; ++j) {
        all = g.HasEdge(vs[i], vs[j]);
      }
    }
    found = all;
  });
  return found;
}

// Do a and b agree on every pair except (0,1)..(0,k')?
inline bool SameClass(const OrderedPattern& a, const OrderedPattern& b) {
  const int free_pairs = (a.k() - 1) / 3;
  for (int i = 0; i < a.k(); ++i) {
    for (int j = i + 1; j < a.k(); ++j) {
      if (i == 0 && j <= free_pairs) continue;
      if (a.HasEdge(i, j) != b.HasEdge(i, j)) return false;
    }
  }
  return true;
}

// Injective k-tuples of g whose ordered induced pattern lies in the class
// of `member`.
inline std::int64_t CountClassTuples(const Graph& g,
                                     const OrderedPattern& member) {
  const int k = member.k();
  std::int64_t count = 0;
  std::vector<int> tuple;
  std::vector<bool> used(g.node_count(), false);
  std::function<void()> grow = [&] {
    if (static_cast<int>(tuple.size()) == k) {
      count += SameClass(InducedOn(g, tuple), member);
      return;
    }
    for (int v = 0; v < g.node_count(); ++v) {
      if (used[v]) continue;
      used[v] = true;
      tuple.push_back(v);
      grow();
      tuple.pop_back();
      used[v] = false;
    }
  };
  grow();
  return count;
}

// Any directed cycle of exactly k distinct vertices?
inline bool HasDirectedCycle(const Graph& g, int k) {
  const int n = g.node_count();
  std::vector<int> path;
  std::vector<bool> used(n, false);
  std::function<bool()> grow = [&] {
    const int u = path.back();
    if (static_cast<int>(path.size()) == k) return g.HasEdge(u, path[0]);
    for (int v = 0; v < n; ++v) {
      if (used[v] || !g.HasEdge(u, v)) continue;
      used[v] = true;
      path.push_back(v);
      if (grow()) return true;
      path.pop_back();
      used[v] = false;
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    used.assign(n, false);
    used[s] = true;
    if (grow()) return true;
  }
  return false;
}

// alpha for each unlabeled pattern of the class of `member`, by trying
// every ordering of every member. The free pairs are (0,1)..(0,k').
inline std::vector<std::pair<OrderedPattern, std::int64_t>> ClassAlphas(
    const OrderedPattern& member) {
  std::vector<std::pair<OrderedPattern, std::int64_t>> out;
  const int k = member.k();
  const int kp = (k - 1) / 3;
  for (int bits = 0; bits < (1 << kp); ++bits) {
    OrderedPattern m = member;
    for (int j = 0; j < kp; ++j) m.SetEdge(0, j + 1, (bits >> j) & 1);
    bool known = false;
    for (auto& [rep, alpha] : out) known |= Isomorphic(rep, m);
    if (known) continue;
    std::int64_t alpha = 0;
    for (const auto& pi : Permutations(k)) {
      alpha += SameClass(m.Permuted(pi), member);
    }
    out.push_back({m, alpha});
  }
  return out;
}

// Top-down evaluation of the path-cost recursion in plain rationals.
class CapacityOracle {
 public:
  CapacityOracle(std::vector<Rational> d, Rational omega)
      : d_(std::move(d)), omega_(omega), k_(static_cast<int>(d_.size())) {}

  Rational M(Rational a, Rational b, Rational c) const {
    Rational low = std::min(a, std::min(b, c));
    return a + b + c - (Rational(3) - omega_) * low;
  }

  Rational P(int i, int j) {
    if (j == (i + 1) % k_) return Rational(1);
    auto key = std::make_pair(i, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int prev = (j + k_ - 1) % k_, next = (i + 1) % k_;
    Rational best = P(i, prev) + d_[prev];
    best = std::min(best, P(next, j) + d_[next]);
    for (int r = next; r != j; r = (r + 1) % k_) {
      Rational m = M(1 - d_[i], 1 - d_[r], 1 - d_[j]);
      best = std::min(best, std::max(m, std::max(P(i, r), P(r, j))));
    }
    memo_[key] = best;
    return best;
  }

  Rational Capacity() {
    Rational best = Rational(2) - d_[0];
    for (const Rational& x : d_) best = std::min(best, Rational(2) - x);
    for (int i = 0; i < k_; ++i) {
      for (int j = i + 1; j < k_; ++j) {
        best = std::min(best, std::max(P(i, j), P(j, i)));
      }
    }
    return best;
  }

 private:
  std::vector<Rational> d_;
  Rational omega_;
  int k_;
  std::map<std::pair<int, int>, Rational> memo_;
};

}  // namespace patdet::testing

#endif  // PATDET_TESTS_TESTING_UTIL_H_
