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

#ifndef PATDET_CLASS_COUNTING_H_
#define PATDET_CLASS_COUNTING_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "patdet/graph.h"
#include "patdet/pattern.h"

namespace patdet {

// floor((k-1)/3): number of free pairs (0,1)..(0,k') of a k-vertex class.
int FreePairCount(int k);

// Ordered patterns agreeing with `base` off the free pairs. `base` is kept
// canonical: every free pair is a non-edge.
class PatternClass {
 public:
  explicit PatternClass(const OrderedPattern& any_member);

  const OrderedPattern& base() const { return base_; }
  int k() const { return base_.k(); }
  int k_prime() const { return FreePairCount(base_.k()); }
  bool Contains(const OrderedPattern& h) const;
  // All 2^{k'} members; member i sets free pair (0, j+1) iff bit j of i.
  std::vector<OrderedPattern> Members() const;

  friend bool operator==(const PatternClass& a, const PatternClass& b) {
    return a.base_ == b.base_;
  }

 private:
  OrderedPattern base_;
};

// Requires k >= 2.
PatternClass ClassOf(const OrderedPattern& h);

struct SpectrumEntry {
  UnlabeledPatternKey key;
  std::int64_t alpha = 0;
  std::int64_t automorphisms = 0;
  std::int64_t b = 0;
};

struct ClassSpectrum {
  std::vector<SpectrumEntry> entries;  // sorted by key
};

// alpha for every unlabeled pattern that embeds in c, counted over all k!
// orderings of that pattern. Checks that |Aut| divides alpha, that the b
// values sum to 2^{k'} and that k'+1 <= |U(c)| <= 2^{k'}; a violation is an
// Internal error. Requires k <= 8.
absl::StatusOr<ClassSpectrum> ComputeClassSpectrum(const PatternClass& c);

// The class whose members are h minus any subset of the edges
// {pivot, neighbors[i]}. Requires exactly k' neighbours, all adjacent to the
// pivot.
absl::StatusOr<PatternClass> ClassFromPatternEdges(
    const OrderedPattern& h, int pivot, const std::vector<int>& neighbors);

// Number of injective vertex tuples (u_0..u_{k-1}) of g whose ordered
// induced subgraph is a member of c, by the three-step product algorithm.
// With a modulus the result is reduced into [0, modulus). Fails on directed
// hosts, on a modulus below 2, and with ResourceExhausted when the product
// operands would exceed the memory guard.
absl::StatusOr<std::int64_t> CountClass(
    const Graph& g, const PatternClass& c,
    std::optional<std::int64_t> modulus = std::nullopt);

// Sum over edges uv of C(|N(u) cap N(v)|, 2).
std::int64_t DiamondIdentity(const Graph& g);

struct SchemeTerm {
  PatternClass cls;
  int sign = 1;
};

// One coefficient of the signed class sum, reduced mod the modulus.
struct SchemeCoefficient {
  std::string pattern;  // DebugString of a representative
  std::int64_t automorphisms = 0;
  std::int64_t residue = 0;
};

struct DetectionScheme {
  OrderedPattern target{1};
  std::int64_t modulus = 2;
  std::vector<SchemeTerm> terms;
  // Coefficient of the target in the signed sum, mod the modulus.
  std::int64_t lead_coefficient = 0;
  std::int64_t trials = 0;
  // Evidence gathered while building the scheme.
  std::vector<SchemeCoefficient> certificate;
};

// ceil(2^k ln(1/delta)).
std::int64_t DefaultTrials(int k, double delta = 0.01);

// Recomputes every coefficient of the signed sum from class spectra and
// checks: the target coefficient is nonzero mod q and equals
// lead_coefficient; every other coefficient is 0 mod q. Requires k <= 8.
absl::Status ValidateScheme(const DetectionScheme& scheme);

// Telescoping scheme over the edge-removal chain of h (edges removed in
// lexicographic order). Requires 4 <= k <= 6 and h neither complete nor
// edgeless.
absl::StatusOr<DetectionScheme> SchemeKLe6(const OrderedPattern& h);

// |Aut(H_s^k)| from the structure of the pattern. k <= 20.
std::int64_t HskAutomorphisms(int k, int s);

bool IsPrime(std::int64_t n);

// Smallest s in [ceil((k-1)/2), k-1-floor((k-1)/3)] with s+1 prime whose
// lead coefficient |Aut(H_s^k)| is not divisible by s+1; for k = 14 returns
// 7 (modulus 2^9). NotFound if no such s.
absl::StatusOr<int> FindHskParameter(int k);

// Single-class scheme for H_s^k = CliquePlusVertex(k, s). Verifies
// (q does not divide |Aut(H_s^k)|) and (q divides |Aut(H_{s+i}^k)|, i >= 1)
// before returning. 3 <= k <= 20.
absl::StatusOr<DetectionScheme> SchemeHsk(int k, int s);

// Randomized one-sided detector: each trial samples an induced subgraph and
// evaluates the signed class counts mod q. Returns true at the first
// nonzero residue.
absl::StatusOr<bool> DetectPatternMod(const Graph& g,
                                      const DetectionScheme& scheme,
                                      std::uint64_t seed);

// Bound on the probability that DetectPatternMod misses a present pattern:
// (1 - 2^{-k})^trials.
double DetectionErrorBound(const DetectionScheme& scheme);

}  // namespace patdet

#endif  // PATDET_CLASS_COUNTING_H_
