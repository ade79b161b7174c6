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

#include "patdet/corpus.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "patdet/graph_core.h"
#include "patdet/graph_io.h"
#include "patdet/rng.h"

namespace patdet {
namespace {

std::vector<int> Sample(int n, int k, Rng& rng) {
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  for (int i = 0; i < k; ++i) {
    std::swap(ids[i], ids[i + rng.Uniform(n - i)]);
  }
  ids.resize(k);
  return ids;
}

absl::StatusOr<CorpusFile> PlantPattern(const CorpusSpec& spec,
                                        const OrderedPattern& h,
                                        std::uint64_t seed) {
  if (h.k() > spec.n) {
    return absl::InvalidArgumentError("pattern larger than the graph");
  }
  Rng rng(seed);
  CorpusFile file;
  file.graph = RandomGnp(spec.n, spec.p, false, rng.Next());
  file.planted = Sample(spec.n, h.k(), rng);
  for (int i = 0; i < h.k(); ++i) {
    for (int j = i + 1; j < h.k(); ++j) {
      const int u = file.planted[i], v = file.planted[j];
      if (h.HasEdge(i, j)) {
        file.graph.AddEdge(u, v);
      } else {
        file.graph.RemoveEdge(u, v);
      }
    }
  }
  return file;
}

absl::StatusOr<CorpusFile> PlantCycle(const CorpusSpec& spec,
                                      std::uint64_t seed) {
  if (spec.k < 2 || spec.k > spec.n) {
    return absl::InvalidArgumentError("need 2 <= k <= n for planted-cycle");
  }
  const std::int64_t max_arcs =
      static_cast<std::int64_t>(spec.n) * (spec.n - 1);
  if (spec.m < spec.k || spec.m > max_arcs) {
    return absl::InvalidArgumentError(
        absl::StrCat("m must lie in [", spec.k, ", ", max_arcs, "]"));
  }
  Rng rng(seed);
  CorpusFile file;
  file.graph = Graph(spec.n, /*directed=*/true);
  file.planted = Sample(spec.n, spec.k, rng);
  for (int i = 0; i < spec.k; ++i) {
    file.graph.AddEdge(file.planted[i], file.planted[(i + 1) % spec.k]);
  }
  while (file.graph.edge_count() < spec.m) {
    const int u = static_cast<int>(rng.Uniform(spec.n));
    const int v = static_cast<int>(rng.Uniform(spec.n));
    if (u != v) file.graph.AddEdge(u, v);
  }
  return file;
}

absl::StatusOr<CorpusFile> TriangleFree(const CorpusSpec& spec,
                                        std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < spec.n; ++u) {
    for (int v = u + 1; v < spec.n; ++v) pairs.emplace_back(u, v);
  }
  for (std::size_t i = pairs.size(); i > 1; --i) {
    std::swap(pairs[i - 1], pairs[rng.Uniform(i)]);
  }
  CorpusFile file;
  file.graph = Graph(spec.n, /*directed=*/false);
  for (auto [u, v] : pairs) {
    if (rng.UniformDouble() >= spec.p) continue;
    bool closes = false;
    const auto ru = file.graph.Row(u), rv = file.graph.Row(v);
    for (std::size_t w = 0; w < ru.size() && !closes; ++w) {
      closes = (ru[w] & rv[w]) != 0;
    }
    if (!closes) file.graph.AddEdge(u, v);
  }
  if (MaxCliqueSize(file.graph) > 2) {
    return absl::InternalError("triangle-free generator produced a triangle");
  }
  return file;
}

}  // namespace

Graph RandomGnp(int n, double p, bool directed, std::uint64_t seed) {
  Rng rng(seed);
  Graph g(n, directed);
  for (int u = 0; u < n; ++u) {
    for (int v = directed ? 0 : u + 1; v < n; ++v) {
      if (u == v) continue;
      if (rng.UniformDouble() < p) g.AddEdge(u, v);
    }
  }
  return g;
}

absl::StatusOr<Graph> RandomDirectedGnm(int n, std::int64_t m,
                                        std::uint64_t seed) {
  const std::int64_t max_arcs = static_cast<std::int64_t>(n) * (n - 1);
  if (m < 0 || m > max_arcs) {
    return absl::InvalidArgumentError("arc count out of range");
  }
  Rng rng(seed);
  Graph g(n, /*directed=*/true);
  while (g.edge_count() < m) {
    const int u = static_cast<int>(rng.Uniform(n));
    const int v = static_cast<int>(rng.Uniform(n));
    if (u != v) g.AddEdge(u, v);
  }
  return g;
}

absl::StatusOr<Corpus> GenerateCorpus(const CorpusSpec& spec,
                                      std::uint64_t seed) {
  if (spec.n < 0 || spec.count < 0) {
    return absl::InvalidArgumentError("n and count must be non-negative");
  }
  if (spec.p < 0 || spec.p > 1) {
    return absl::InvalidArgumentError("p must lie in [0, 1]");
  }
  const bool known = spec.family == "gnp" || spec.family == "planted-pattern" ||
                     spec.family == "planted-cycle" ||
                     spec.family == "triangle-free";
  if (!known) {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown corpus family: ", spec.family));
  }
  Corpus corpus;
  std::string params;
  if (spec.family == "gnp") {
    params = absl::StrFormat("n=%d p=%g directed=%d", spec.n, spec.p,
                             spec.directed ? 1 : 0);
  } else if (spec.family == "planted-pattern") {
    const OrderedPattern h =
        spec.pattern.value_or(OrderedPattern::Complete(spec.k));
    params = absl::StrFormat("n=%d p=%g pattern=%s", spec.n, spec.p,
                             h.DebugString());
  } else if (spec.family == "planted-cycle") {
    params = absl::StrFormat("n=%d m=%d k=%d", spec.n, spec.m, spec.k);
  } else {
    params = absl::StrFormat("n=%d p=%g", spec.n, spec.p);
  }
  Rng root(seed);
  corpus.manifest =
      absl::StrCat("# family=", spec.family, " seed=", seed, " ", params,
                   "\nfile\tnodes\tedges\tdirected\tplanted\n");
  for (int i = 0; i < spec.count; ++i) {
    const std::uint64_t file_seed = root.Split(i).Next();
    absl::StatusOr<CorpusFile> file;
    if (spec.family == "gnp") {
      file = CorpusFile{
          "", RandomGnp(spec.n, spec.p, spec.directed, file_seed), {}};
    } else if (spec.family == "planted-pattern") {
      file = PlantPattern(
          spec, spec.pattern.value_or(OrderedPattern::Complete(spec.k)),
          file_seed);
    } else if (spec.family == "planted-cycle") {
      file = PlantCycle(spec, file_seed);
    } else {
      file = TriangleFree(spec, file_seed);
    }
    if (!file.ok()) return file.status();
    file->name = absl::StrFormat("%s_%03d.txt", spec.family, i);
    absl::StrAppend(
        &corpus.manifest, file->name, "\t", file->graph.node_count(), "\t",
        file->graph.edge_count(), "\t", file->graph.directed() ? "D" : "U",
        "\t", file->planted.empty() ? "-" : absl::StrJoin(file->planted, ","),
        "\n");
    corpus.files.push_back(*std::move(file));
  }
  return corpus;
}

absl::Status WriteCorpus(const Corpus& corpus, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    return absl::InternalError(
        absl::StrCat("cannot create ", dir, ": ", ec.message()));
  }
  for (const CorpusFile& file : corpus.files) {
    if (absl::Status s = WriteGraphFile(
            (std::filesystem::path(dir) / file.name).string(), file.graph);
        !s.ok()) {
      return s;
    }
  }
  std::ofstream out(std::filesystem::path(dir) / "manifest.tsv",
                    std::ios::binary);
  out << corpus.manifest;
  if (!out) return absl::InternalError("cannot write manifest.tsv");
  return absl::OkStatus();
}

}  // namespace patdet
