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

// Command-line front end shared by the `patdet` binary and the tests.

#ifndef PATDET_CLI_H_
#define PATDET_CLI_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "absl/strings/string_view.h"

namespace patdet {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAbsent = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;

// 64-bit FNV-1a.
std::uint64_t Fnv1a(absl::string_view bytes,
                    std::uint64_t basis = 14695981039346656037ull);

// args excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace patdet

#endif  // PATDET_CLI_H_
