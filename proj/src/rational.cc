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

#include "patdet/rational.h"

#include <charconv>
#include <cstdio>

#include "absl/strings/str_cat.h"

namespace patdet {
namespace {

absl::StatusOr<std::int64_t> ParseInt(absl::string_view text) {
  std::int64_t value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) {
    return absl::InvalidArgumentError(
        absl::StrCat("not an integer: '", text, "'"));
  }
  return value;
}

}  // namespace

absl::StatusOr<Rational> ParseRational(absl::string_view text) {
  if (auto slash = text.find('/'); slash != absl::string_view::npos) {
    auto num = ParseInt(text.substr(0, slash));
    auto den = ParseInt(text.substr(slash + 1));
    if (!num.ok()) return num.status();
    if (!den.ok()) return den.status();
    if (*den == 0) return absl::InvalidArgumentError("zero denominator");
    return Rational(*num, *den);
  }
  if (auto dot = text.find('.'); dot != absl::string_view::npos) {
    absl::string_view whole = text.substr(0, dot);
    absl::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15) {
      return absl::InvalidArgumentError(
          absl::StrCat("bad decimal: '", text, "'"));
    }
    for (char c : frac) {
      if (c < '0' || c > '9') {
        return absl::InvalidArgumentError(
            absl::StrCat("bad decimal: '", text, "'"));
      }
    }
    bool negative = !whole.empty() && whole.front() == '-';
    std::int64_t int_part = 0;
    if (!whole.empty() && whole != "-" && whole != "+") {
      auto parsed = ParseInt(whole);
      if (!parsed.ok()) return parsed.status();
      int_part = *parsed;
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    auto frac_value = ParseInt(frac);
    if (!frac_value.ok()) return frac_value.status();
    Rational result(int_part < 0 ? -int_part : int_part);
    result += Rational(*frac_value, scale);
    return negative ? -result : result;
  }
  auto value = ParseInt(text);
  if (!value.ok()) return value.status();
  return Rational(*value);
}

std::string FormatRational(const Rational& value) {
  if (value.denominator() == 1) return absl::StrCat(value.numerator());
  return absl::StrCat(value.numerator(), "/", value.denominator());
}

double ToDouble(const Rational& value) {
  return static_cast<double>(value.numerator()) /
         static_cast<double>(value.denominator());
}

std::string FormatRationalWithDecimal(const Rational& value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", ToDouble(value));
  return absl::StrCat(FormatRational(value), " (~", buffer, ")");
}

}  // namespace patdet
