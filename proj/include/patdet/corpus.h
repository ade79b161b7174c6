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

// Deterministic synthetic graph corpora.

#ifndef PATDET_CORPUS_H_
#define PATDET_CORPUS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "patdet/graph.h"
#include "patdet/pattern.h"

namespace patdet {

struct CorpusSpec {
  std::string family;  // gnp, planted-pattern, planted-cycle, triangle-free
  int n = 20;
  double p = 0.3;
  // Arc count for planted-cycle; unused elsewhere.
  std::int64_t m = 0;
  int k = 4;
  int count = 1;
  bool directed = false;
  // Planted pattern; defaults to K_k.
  std::optional<OrderedPattern> pattern;
};

struct CorpusFile {
  std::string name;
  Graph graph;
  // Vertices carrying the planted structure, in pattern or cycle order.
  std::vector<int> planted;
};

struct Corpus {
  std::vector<CorpusFile> files;
  std::string manifest;
};

Graph RandomGnp(int n, double p, bool directed, std::uint64_t seed);

// Directed graph with exactly m arcs chosen uniformly without repetition.
absl::StatusOr<Graph> RandomDirectedGnm(int n, std::int64_t m,
                                        std::uint64_t seed);

absl::StatusOr<Corpus> GenerateCorpus(const CorpusSpec& spec,
                                      std::uint64_t seed);

// Writes every file plus manifest.tsv into `dir` (created if missing).
absl::Status WriteCorpus(const Corpus& corpus, const std::string& dir);

}  // namespace patdet

#endif  // PATDET_CORPUS_H_
