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

#include "patdet/graph_io.h"

#include <fstream>
#include <sstream>
#include <vector>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"

namespace patdet {
namespace {

absl::Status LineError(int line, absl::string_view message) {
  return absl::InvalidArgumentError(absl::StrCat("line ", line, ": ", message));
}

}  // namespace

absl::StatusOr<Graph> ParseGraph(absl::string_view text) {
  std::vector<absl::string_view> lines = absl::StrSplit(text, '\n');
  bool have_header = false;
  bool directed = false;
  int n = 0;
  long long m = 0;
  long long seen = 0;
  Graph g;
  for (std::size_t index = 0; index < lines.size(); ++index) {
    const int line_no = static_cast<int>(index) + 1;
    absl::string_view line = lines[index];
    if (auto hash = line.find('#'); hash != absl::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = absl::StripAsciiWhitespace(line);
    if (line.empty()) continue;
    std::vector<absl::string_view> fields =
        absl::StrSplit(line, absl::ByAnyChar(" \t"), absl::SkipEmpty());
    if (!have_header) {
      if (fields.size() != 3) return LineError(line_no, "expected 'n m D|U'");
      if (!absl::SimpleAtoi(fields[0], &n) || n < 0) {
        return LineError(line_no, "bad node count");
      }
      if (!absl::SimpleAtoi(fields[1], &m) || m < 0) {
        return LineError(line_no, "bad edge count");
      }
      if (fields[2] == "D") {
        directed = true;
      } else if (fields[2] != "U") {
        return LineError(line_no, "graph kind must be D or U");
      }
      g = Graph(n, directed);
      have_header = true;
      continue;
    }
    if (fields.size() != 2) return LineError(line_no, "expected 'u v'");
    int u = 0;
    int v = 0;
    if (!absl::SimpleAtoi(fields[0], &u) || !absl::SimpleAtoi(fields[1], &v)) {
      return LineError(line_no, "bad vertex id");
    }
    if (u < 0 || u >= n || v < 0 || v >= n) {
      return LineError(line_no, "vertex out of range");
    }
    if (u == v) return LineError(line_no, "self-loop");
    if (g.HasEdge(u, v)) return LineError(line_no, "duplicate edge");
    if (++seen > m) return LineError(line_no, "more edges than declared");
    g.AddEdge(u, v);
  }
  if (!have_header) return absl::InvalidArgumentError("line 1: empty input");
  if (seen != m) {
    return LineError(static_cast<int>(lines.size()),
                     absl::StrCat("declared ", m, " edges, found ", seen));
  }
  return g;
}

absl::StatusOr<Graph> ReadGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto graph = ParseGraph(buffer.str());
  if (!graph.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path, ": ", graph.status().message()));
  }
  return graph;
}

std::string FormatGraph(const Graph& g) {
  std::string out = absl::StrCat(g.node_count(), " ", g.edge_count(), " ",
                                 g.directed() ? "D" : "U", "\n");
  for (auto [u, v] : g.Edges()) absl::StrAppend(&out, u, " ", v, "\n");
  return out;
}

absl::Status WriteGraphFile(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out)
    return absl::PermissionDeniedError(absl::StrCat("cannot write ", path));
  out << FormatGraph(g);
  return out ? absl::OkStatus()
             : absl::DataLossError(absl::StrCat("short write to ", path));
}

}  // namespace patdet
