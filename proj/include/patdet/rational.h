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

#ifndef PATDET_RATIONAL_H_
#define PATDET_RATIONAL_H_

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace patdet {

// Exact rational used by every exponent computation. Floats only appear when
// a value is printed.
using Rational = boost::rational<std::int64_t>;

// Accepts "2", "-3/4", "13/6" and finite decimals such as "2.373".
absl::StatusOr<Rational> ParseRational(absl::string_view text);

// "num/den" (den omitted when it is 1).
std::string FormatRational(const Rational& value);

// "num/den (~1.2345)".
std::string FormatRationalWithDecimal(const Rational& value);

double ToDouble(const Rational& value);

}  // namespace patdet

#endif  // PATDET_RATIONAL_H_
