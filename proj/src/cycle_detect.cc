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

#include "patdet/cycle_detect.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <functional>
#include <mutex>
#include <thread>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "patdet/rng.h"

namespace patdet {

ColorCodedGraph ColorCode(const Graph& g, int k, std::uint64_t seed) {
  const int n = g.node_count();
  ColorCodedGraph cg;
  cg.k = k;
  cg.graph = Graph(n, /*directed=*/true);
  cg.color.resize(n);
  cg.parts.assign(k, {});
  Rng rng(seed);
  for (int v = 0; v < n; ++v) {
    cg.color[v] = static_cast<int>(rng.Uniform(k));
    cg.parts[cg.color[v]].push_back(v);
  }
  cg.out.assign(n, {});
  cg.in.assign(n, {});
  for (int u = 0; u < n; ++u) {
    for (int v : g.OutNeighbors(u)) {
      if (cg.color[v] != (cg.color[u] + 1) % k) continue;
      cg.graph.AddEdge(u, v);
      cg.out[u].push_back(v);
      cg.in[v].push_back(u);
    }
  }
  cg.degree_class.resize(n);
  for (int v = 0; v < n; ++v) {
    const unsigned deg = cg.out[v].size() + cg.in[v].size();
    cg.degree_class[v] = static_cast<int>(std::bit_width(deg)) - 1;
  }
  return cg;
}

int DegreeClass(const ColorCodedGraph& cg, int v) { return cg.degree_class[v]; }

int LogEdgeScale(std::int64_t m) {
  if (m <= 2) return 1;
  return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(m - 1)));
}

DegreeClassTuple MakeTuple(std::vector<int> f, std::int64_t m) {
  const int scale = LogEdgeScale(m);
  DegreeClassTuple t;
  for (int x : f) t.d.push_back(std::min(Rational(1), Rational(x, scale)));
  t.f = std::move(f);
  return t;
}

std::vector<DegreeClassTuple> PopulatedTuples(const ColorCodedGraph& cg) {
  const int k = cg.k;
  // next[p][a]: classes b with an arc from class a in part p to class b.
  std::vector<std::array<std::uint64_t, 64>> next(k);
  for (auto& row : next) row.fill(0);
  for (int u = 0; u < cg.graph.node_count(); ++u) {
    for (int v : cg.out[u]) {
      next[cg.color[u]][cg.degree_class[u]] |= std::uint64_t{1}
                                               << cg.degree_class[v];
    }
  }
  std::vector<DegreeClassTuple> out;
  std::vector<int> f(k);
  std::function<void(int)> extend = [&](int p) {
    if (p == k) {
      if ((next[k - 1][f[k - 1]] >> f[0]) & 1) {
        out.push_back(MakeTuple(f, cg.graph.edge_count()));
      }
      return;
    }
    std::uint64_t options = next[p - 1][f[p - 1]];
    while (options != 0) {
      f[p] = std::countr_zero(options);
      options &= options - 1;
      extend(p + 1);
    }
  };
  for (int a = 0; a < 64; ++a) {
    if (next[0][a] == 0) continue;
    f[0] = a;
    extend(1);
  }
  return out;
}

namespace {

int BuildPlanNode(const ExponentTable& table, int i, int j,
                  std::vector<PlanNode>& nodes) {
  const int k = table.k;
  PlanNode node;
  node.i = i;
  node.j = j;
  node.cost = table.p[i][j];
  if (j == (i + 1) % k) {
    node.rule = PathRule::kEdge;
  } else {
    node.rule = table.choice[i][j].rule;
    node.split = table.choice[i][j].split;
  }
  const int id = static_cast<int>(nodes.size());
  nodes.push_back(node);
  int left = -1, right = -1;
  switch (node.rule) {
    case PathRule::kEdge:
      break;
    case PathRule::kExtendRight:
      left = BuildPlanNode(table, i, (j + k - 1) % k, nodes);
      break;
    case PathRule::kExtendLeft:
      left = BuildPlanNode(table, (i + 1) % k, j, nodes);
      break;
    case PathRule::kProduct:
      left = BuildPlanNode(table, i, node.split, nodes);
      right = BuildPlanNode(table, node.split, j, nodes);
      break;
  }
  nodes[id].left = left;
  nodes[id].right = right;
  return id;
}

}  // namespace

EvaluationPlan PlanEvaluation(const DegreeClassTuple& tuple,
                              const Rational& omega) {
  EvaluationPlan plan;
  plan.table = ComputeExponentTable(tuple.d, omega);
  plan.capacity = EvaluateCapacity(tuple.d, omega);
  plan.use_bfs = plan.capacity.bfs_cost <= plan.capacity.pair_cost;
  const int i = plan.capacity.pair_i, j = plan.capacity.pair_j;
  plan.forward_root = BuildPlanNode(plan.table, i, j, plan.nodes);
  plan.backward_root = BuildPlanNode(plan.table, j, i, plan.nodes);
  plan.cost = plan.capacity.value;
  return plan;
}

namespace {

class ColoredSearch {
 public:
  ColoredSearch(const ColorCodedGraph& cg, const DegreeClassTuple& tuple)
      : cg_(cg), f_(tuple.f), index_(cg.graph.node_count(), -1) {
    restricted_.resize(cg.k);
    for (int p = 0; p < cg.k; ++p) {
      for (int v : cg.parts[p]) {
        if (cg.degree_class[v] != f_[p]) continue;
        index_[v] = static_cast<int>(restricted_[p].size());
        restricted_[p].push_back(v);
      }
    }
  }

  // Layered search from every vertex of part b.
  std::optional<std::vector<int>> Bfs(int b) {
    const int k = cg_.k;
    std::vector<int> pred(cg_.graph.node_count(), -1);
    std::vector<int> stamp(cg_.graph.node_count(), -1);
    for (int s : restricted_[b]) {
      std::vector<int> frontier = {s};
      for (int step = 1; step <= k && !frontier.empty(); ++step) {
        const int q = (b + step) % k;
        std::vector<int> next;
        for (int u : frontier) {
          for (int v : cg_.out[u]) {
            if (step == k) {
              if (v != s) continue;
              std::vector<int> cycle = {u};
              while (cycle.back() != s) cycle.push_back(pred[cycle.back()]);
              std::reverse(cycle.begin(), cycle.end());
              return Normalize(cycle);
            }
            if (cg_.degree_class[v] != f_[q] || stamp[v] == s) continue;
            stamp[v] = s;
            pred[v] = u;
            next.push_back(v);
          }
        }
        frontier = std::move(next);
      }
    }
    return std::nullopt;
  }

  std::optional<std::vector<int>> Matrix(const EvaluationPlan& plan) {
    matrices_.assign(plan.nodes.size(), {});
    const ReachMatrix& fwd = Compute(plan, plan.forward_root);
    const ReachMatrix& bwd = Compute(plan, plan.backward_root);
    for (std::size_t a = 0; a < fwd.rows.size(); ++a) {
      for (std::size_t b = 0; b < fwd.cols.size(); ++b) {
        if (!fwd.Get(a, b) || !bwd.Get(b, a)) continue;
        std::vector<int> cycle;
        Path(plan, plan.forward_root, fwd.rows[a], fwd.cols[b], cycle);
        cycle.pop_back();
        Path(plan, plan.backward_root, fwd.cols[b], fwd.rows[a], cycle);
        cycle.pop_back();
        return Normalize(cycle);
      }
    }
    return std::nullopt;
  }

 private:
  bool InPart(int v, int p) const {
    return cg_.color[v] == p && cg_.degree_class[v] == f_[p];
  }

  const ReachMatrix& Compute(const EvaluationPlan& plan, int id) {
    const PlanNode& node = plan.nodes[id];
    ReachMatrix& m = matrices_[id];
    m.source_part = node.i;
    m.target_part = node.j;
    m.rows = restricted_[node.i];
    m.cols = restricted_[node.j];
    m.mid.assign(m.rows.size() * m.cols.size(), -1);
    auto set = [&m](int r, int c, int w) {
      int& slot = m.mid[static_cast<std::size_t>(r) * m.cols.size() + c];
      if (slot < 0) slot = w;
    };
    switch (node.rule) {
      case PathRule::kEdge:
        for (std::size_t r = 0; r < m.rows.size(); ++r) {
          for (int v : cg_.out[m.rows[r]]) {
            if (InPart(v, node.j)) set(r, index_[v], m.rows[r]);
          }
        }
        break;
      case PathRule::kExtendRight: {
        const ReachMatrix& c = Compute(plan, node.left);
        for (std::size_t r = 0; r < c.rows.size(); ++r) {
          for (std::size_t t = 0; t < c.cols.size(); ++t) {
            if (!c.Get(r, t)) continue;
            for (int v : cg_.out[c.cols[t]]) {
              if (InPart(v, node.j)) set(r, index_[v], c.cols[t]);
            }
          }
        }
        break;
      }
      case PathRule::kExtendLeft: {
        const ReachMatrix& c = Compute(plan, node.left);
        for (std::size_t t = 0; t < c.rows.size(); ++t) {
          for (std::size_t col = 0; col < c.cols.size(); ++col) {
            if (!c.Get(t, col)) continue;
            for (int u : cg_.in[c.rows[t]]) {
              if (InPart(u, node.i)) set(index_[u], col, c.rows[t]);
            }
          }
        }
        break;
      }
      case PathRule::kProduct: {
        const ReachMatrix& a = Compute(plan, node.left);
        const ReachMatrix& b = Compute(plan, node.right);
        for (std::size_t r = 0; r < a.rows.size(); ++r) {
          for (std::size_t t = 0; t < a.cols.size(); ++t) {
            if (!a.Get(r, t)) continue;
            for (std::size_t c = 0; c < b.cols.size(); ++c) {
              if (b.Get(t, c)) set(r, c, a.cols[t]);
            }
          }
        }
        break;
      }
    }
    return m;
  }

  // Appends the path u..v realized by node `id`.
  void Path(const EvaluationPlan& plan, int id, int u, int v,
            std::vector<int>& out) const {
    const PlanNode& node = plan.nodes[id];
    const ReachMatrix& m = matrices_[id];
    const int w =
        m.mid[static_cast<std::size_t>(index_[u]) * m.cols.size() + index_[v]];
    switch (node.rule) {
      case PathRule::kEdge:
        out.push_back(u);
        out.push_back(v);
        break;
      case PathRule::kExtendRight:
        Path(plan, node.left, u, w, out);
        out.push_back(v);
        break;
      case PathRule::kExtendLeft:
        out.push_back(u);
        Path(plan, node.left, w, v, out);
        break;
      case PathRule::kProduct:
        Path(plan, node.left, u, w, out);
        out.pop_back();
        Path(plan, node.right, w, v, out);
        break;
    }
  }

  std::vector<int> Normalize(const std::vector<int>& cycle) const {
    std::vector<int> out(cycle.size());
    for (int v : cycle) out[cg_.color[v]] = v;
    return out;
  }

  const ColorCodedGraph& cg_;
  std::vector<int> f_;
  std::vector<int> index_;
  std::vector<std::vector<int>> restricted_;
  std::vector<ReachMatrix> matrices_;
};

}  // namespace

std::optional<std::vector<int>> DetectCycleColored(
    const ColorCodedGraph& cg, const DegreeClassTuple& tuple,
    CycleStrategy strategy, const Rational& omega) {
  if (static_cast<int>(tuple.f.size()) != cg.k || cg.k < 2) return std::nullopt;
  const EvaluationPlan plan = PlanEvaluation(tuple, omega);
  ColoredSearch search(cg, tuple);
  const bool bfs = strategy == CycleStrategy::kBfs ||
                   (strategy == CycleStrategy::kAuto && plan.use_bfs);
  if (bfs) return search.Bfs(plan.capacity.bfs_part);
  return search.Matrix(plan);
}

double CycleErrorBound(int k, int repetitions) {
  const double p = std::pow(static_cast<double>(k), -k);
  return std::exp(repetitions * std::log1p(-p));
}

int DefaultRepetitions(int k, double error) {
  const double p = std::pow(static_cast<double>(k), -k);
  return static_cast<int>(std::ceil(std::log(error) / std::log1p(-p)));
}

bool IsDirectedCycle(const Graph& g, const std::vector<int>& cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 2) return false;
  std::vector<int> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;
  }
  for (int i = 0; i < k; ++i) {
    const int u = cycle[i], v = cycle[(i + 1) % k];
    if (u < 0 || u >= g.node_count() || v < 0 || v >= g.node_count()) {
      return false;
    }
    if (!g.HasEdge(u, v)) return false;
  }
  return true;
}

absl::StatusOr<CycleResult> DetectKCycle(const Graph& g, int k,
                                         std::uint64_t seed, int repetitions,
                                         const CycleOptions& options) {
  if (k < 3) return absl::InvalidArgumentError("cycle length must be >= 3");
  if (repetitions < 0) {
    return absl::InvalidArgumentError("repetitions must be >= 0");
  }
  // Best repetition index with a witness; later reps stop early.
  std::mutex mu;
  int best_rep = repetitions;
  std::vector<int> best;
  std::atomic<int> next_rep{0};
  std::atomic<std::int64_t> tuples{0};
  std::atomic<int> codings{0};
  auto worker = [&] {
    for (;;) {
      const int rep = next_rep.fetch_add(1);
      if (rep >= repetitions) return;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (rep > best_rep) return;
      }
      const ColorCodedGraph cg = ColorCode(g, k, Rng(seed).Split(rep).Next());
      ++codings;
      for (const DegreeClassTuple& tuple : PopulatedTuples(cg)) {
        ++tuples;
        auto w = DetectCycleColored(cg, tuple, options.strategy, options.omega);
        if (!w.has_value()) continue;
        std::lock_guard<std::mutex> lock(mu);
        if (rep < best_rep) {
          best_rep = rep;
          best = *w;
        }
        return;
      }
    }
  };
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  CycleResult result;
  result.codings = codings.load();
  result.tuples = tuples.load();
  if (best_rep < repetitions) {
    if (!IsDirectedCycle(g, best)) {
      return absl::InternalError("witness is not a cycle of the input graph");
    }
    result.witness = best;
    result.error_bound = 0.0;
  } else {
    result.error_bound = CycleErrorBound(k, repetitions);
  }
  return result;
}

std::optional<std::vector<int>> FindDirectedCycleBruteforce(const Graph& g,
                                                            int k) {
  const int n = g.node_count();
  if (k < 2 || k > n) return std::nullopt;
  std::vector<int> path;
  std::vector<bool> used(n, false);
  std::function<bool(int)> grow = [&](int s) {
    const int u = path.back();
    if (static_cast<int>(path.size()) == k) return g.HasEdge(u, s);
    for (int v = s + 1; v < n; ++v) {
      if (used[v] || !g.HasEdge(u, v)) continue;
      used[v] = true;
      path.push_back(v);
      if (grow(s)) return true;
      path.pop_back();
      used[v] = false;
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    used[s] = true;
    if (grow(s)) return path;
    used[s] = false;
  }
  return std::nullopt;
}

}  // namespace patdet
