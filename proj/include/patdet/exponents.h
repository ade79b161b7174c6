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

#ifndef PATDET_EXPONENTS_H_
#define PATDET_EXPONENTS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "patdet/rational.h"

namespace patdet {

using DegreeVector = std::vector<Rational>;

// a + b + c - (3 - omega) min(a, b, c).
Rational MatmulCost(const Rational& a, const Rational& b, const Rational& c,
                    const Rational& omega);

// How an entry P[i][j] of the table was obtained.
enum class PathRule {
  kEdge,         // j = i + 1
  kExtendRight,  // P[i][j-1] + d[j-1]
  kExtendLeft,   // P[i+1][j] + d[i+1]
  kProduct,      // max(P[i][r], P[r][j], M(1-d_i, 1-d_r, 1-d_j))
};

struct PathChoice {
  PathRule rule = PathRule::kEdge;
  int split = -1;  // r for kProduct
};

// P[i][j] over the cyclic index range, i != j; diagonal entries are unused
// and left at zero.
struct ExponentTable {
  int k = 0;
  Rational omega;
  std::vector<std::vector<Rational>> p;
  std::vector<std::vector<PathChoice>> choice;
};

// Exact DP over cyclic interval lengths 1..k-1. Ties prefer the right
// extension, then the left extension, then the smallest split in cyclic
// order; a later option replaces an earlier one only when strictly cheaper.
ExponentTable ComputeExponentTable(const DegreeVector& d,
                                   const Rational& omega);

struct CapacityResult {
  Rational value;
  // Pair (i < j) attaining min max(P_ij, P_ji), lexicographically first.
  int pair_i = 0;
  int pair_j = 1;
  Rational pair_cost;
  // Part with the smallest 2 - d_i (lowest index on ties).
  int bfs_part = 0;
  Rational bfs_cost;
};

CapacityResult EvaluateCapacity(const DegreeVector& d, const Rational& omega);

// min(min_i (2 - d_i), min_{i<j} max(P_ij, P_ji)).
Rational Capacity(const DegreeVector& d, const Rational& omega);

struct ClosedFormResult {
  int k = 0;
  Rational omega;
  Rational value;
  // odd, odd-cap, k4, k6-piece-1..4, k6-cap, even-bound
  std::string regime;
  // False when the value is only an upper bound (even k >= 8, omega > 2).
  bool tight = true;
};

// Requires k >= 3 and 2 <= omega <= 3.
absl::StatusOr<ClosedFormResult> ClosedForm(int k, const Rational& omega);

struct HardCase {
  int k = 0;
  std::string regime;
  DegreeVector d;
  Rational expected;
};

// Every documented hard-case class whose regime contains omega: uniform
// classes for odd k <= 9 (capped variant past 2k/(k-1)), the k = 4 class,
// each k = 6 piece whose interval contains omega, and the even classes for
// k = 4, 6, 8 when omega = 2.
std::vector<HardCase> HardCases(const Rational& omega);

struct HardCaseReport {
  HardCase hard_case;
  Rational capacity;
  bool pass = false;
};

std::vector<HardCaseReport> VerifyHardCases(const Rational& omega);

struct SearchBudget {
  int grid_denominator = 8;
  int final_denominator = 1024;
  // Start points kept from the grid for refinement.
  int refine_starts = 4;
  bool use_hard_case_seeds = true;
  int threads = 1;
};

struct SearchResult {
  DegreeVector d;
  Rational value;
  std::int64_t evaluations = 0;
};

// Grid search (rotations canonicalized by d_0 = max d_i) followed by
// coordinate and pairwise ascent with halving steps. The result is a
// certified lower bound on c_k: value == Capacity(d, omega). Ties keep the
// lexicographically smallest d. Requires 3 <= k <= 8.
absl::StatusOr<SearchResult> MaximizeCapacity(int k, const Rational& omega,
                                              const SearchBudget& budget = {});

}  // namespace patdet

#endif  // PATDET_EXPONENTS_H_
