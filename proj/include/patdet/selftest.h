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

// Quick end-to-end invariant suite behind the `selftest` subcommand.

#ifndef PATDET_SELFTEST_H_
#define PATDET_SELFTEST_H_

#include <cstdint>
#include <string>
#include <vector>

namespace patdet {

struct SelfTestCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<SelfTestCheck> RunSelfTest(std::uint64_t seed);

}  // namespace patdet

#endif  // PATDET_SELFTEST_H_
