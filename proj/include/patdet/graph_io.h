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

#ifndef PATDET_GRAPH_IO_H_
#define PATDET_GRAPH_IO_H_

#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "patdet/graph.h"

namespace patdet {

// Text format:
//   n m D|U
//   u v        (m lines, 0-based)
// Blank lines and '#' comments are ignored. Errors carry the 1-based line
// number of the offending line.
absl::StatusOr<Graph> ParseGraph(absl::string_view text);
absl::StatusOr<Graph> ReadGraphFile(const std::string& path);

// Canonical emission: header, then Graph::Edges() order.
std::string FormatGraph(const Graph& g);
absl::Status WriteGraphFile(const std::string& path, const Graph& g);

}  // namespace patdet

#endif  // PATDET_GRAPH_IO_H_
