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

#ifndef PATDET_RNG_H_
#define PATDET_RNG_H_

#include <cstdint>
#include <random>

namespace patdet {

// SplitMix64 finalizer. Used to derive child seeds so that every randomized
// routine consumes its own stream.
std::uint64_t SplitMix64(std::uint64_t x);

// Seedable, splittable generator. The engine is std::mt19937_64 (whose output
// sequence is fixed by the C++ standard); bounded integers use Lemire's
// multiply-shift reduction instead of std::uniform_int_distribution, whose
// algorithm is implementation-defined. Together this makes every randomized
// result reproducible bit-for-bit across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t Next() { return engine_(); }

  // Fair coin.
  bool Coin() { return (engine_() >> 63) != 0; }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t Uniform(std::uint64_t bound);

  // Uniform in [0, 1).
  double UniformDouble();

  // Independent child stream; does not advance this generator.
  Rng Split(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace patdet

#endif  // PATDET_RNG_H_
