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

#include "patdet/exponents.h"

#include <algorithm>
#include <numeric>
#include <thread>

#include "absl/strings/str_cat.h"

namespace patdet {
namespace {

// Values are either exact rationals or integers over a shared denominator.
// The scaled form keeps the search fast; both run the same recursion.
struct RationalArith {
  Rational omega;
  Rational one{1};

  Rational Matmul(const Rational& a, const Rational& b,
                  const Rational& c) const {
    return MatmulCost(a, b, c, omega);
  }
};

struct ScaledArith {
  // Every value v is stored as v * scale, scale = lcm(den d) * den(omega).
  std::int64_t scale;
  std::int64_t omega_den;
  std::int64_t three_minus_omega_num;  // (3 - omega) * omega_den
  std::int64_t one;

  std::int64_t Matmul(std::int64_t a, std::int64_t b, std::int64_t c) const {
    const std::int64_t low = std::min({a, b, c});
    return a + b + c - three_minus_omega_num * (low / omega_den);
  }
};

template <typename T, typename Arith>
void RunDp(int k, const std::vector<T>& d, const Arith& arith,
           std::vector<std::vector<T>>& p,
           std::vector<std::vector<PathChoice>>* choice) {
  p.assign(k, std::vector<T>(k, T{}));
  if (choice != nullptr) {
    choice->assign(k, std::vector<PathChoice>(k));
  }
  std::vector<T> co(k);
  for (int i = 0; i < k; ++i) co[i] = arith.one - d[i];
  for (int i = 0; i < k; ++i) p[i][(i + 1) % k] = arith.one;
  for (int len = 2; len < k; ++len) {
    for (int i = 0; i < k; ++i) {
      const int j = (i + len) % k;
      const int jm = (j + k - 1) % k;
      const int ip = (i + 1) % k;
      T best = p[i][jm] + d[jm];
      PathChoice how{PathRule::kExtendRight, -1};
      if (T left = p[ip][j] + d[ip]; left < best) {
        best = left;
        how = {PathRule::kExtendLeft, -1};
      }
      for (int step = 1; step < len; ++step) {
        const int r = (i + step) % k;
        T cost = arith.Matmul(co[i], co[r], co[j]);
        cost = std::max({p[i][r], p[r][j], cost});
        if (cost < best) {
          best = cost;
          how = {PathRule::kProduct, r};
        }
      }
      p[i][j] = best;
      if (choice != nullptr) (*choice)[i][j] = how;
    }
  }
}

template <typename T>
void Summarize(int k, const std::vector<T>& d, const T& two,
               const std::vector<std::vector<T>>& p, T& value, int& pi, int& pj,
               T& pair_cost, int& bfs_part, T& bfs_cost) {
  bfs_part = 0;
  bfs_cost = two - d[0];
  for (int i = 1; i < k; ++i) {
    if (two - d[i] < bfs_cost) {
      bfs_cost = two - d[i];
      bfs_part = i;
    }
  }
  bool first = true;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const T cost = std::max(p[i][j], p[j][i]);
      if (first || cost < pair_cost) {
        pair_cost = cost;
        pi = i;
        pj = j;
        first = false;
      }
    }
  }
  value = std::min(bfs_cost, pair_cost);
}

constexpr std::int64_t kMaxScale = std::int64_t{1} << 40;

// Common denominator for the scaled arithmetic, or 0 when it is too large.
std::int64_t ScaleFor(const DegreeVector& d, const Rational& omega) {
  std::int64_t den = 1;
  for (const Rational& x : d) {
    den = std::lcm(den, x.denominator());
    if (den > kMaxScale) return 0;
  }
  const std::int64_t scale = den * omega.denominator();
  if (scale / omega.denominator() != den || scale > kMaxScale) return 0;
  return scale;
}

ScaledArith MakeScaled(std::int64_t scale, const Rational& omega) {
  return ScaledArith{scale, omega.denominator(),
                     3 * omega.denominator() - omega.numerator(), scale};
}

std::vector<std::int64_t> ScaleVector(const DegreeVector& d,
                                      std::int64_t scale) {
  std::vector<std::int64_t> out;
  for (const Rational& x : d) {
    out.push_back(x.numerator() * (scale / x.denominator()));
  }
  return out;
}

}  // namespace

Rational MatmulCost(const Rational& a, const Rational& b, const Rational& c,
                    const Rational& omega) {
  return a + b + c - (Rational(3) - omega) * std::min({a, b, c});
}

ExponentTable ComputeExponentTable(const DegreeVector& d,
                                   const Rational& omega) {
  ExponentTable table;
  table.k = static_cast<int>(d.size());
  table.omega = omega;
  if (const std::int64_t scale = ScaleFor(d, omega); scale != 0) {
    std::vector<std::vector<std::int64_t>> p;
    RunDp(table.k, ScaleVector(d, scale), MakeScaled(scale, omega), p,
          &table.choice);
    table.p.assign(table.k, std::vector<Rational>(table.k));
    for (int i = 0; i < table.k; ++i) {
      for (int j = 0; j < table.k; ++j)
        table.p[i][j] = Rational(p[i][j], scale);
    }
  } else {
    RunDp(table.k, d, RationalArith{omega}, table.p, &table.choice);
  }
  return table;
}

CapacityResult EvaluateCapacity(const DegreeVector& d, const Rational& omega) {
  const int k = static_cast<int>(d.size());
  CapacityResult out;
  if (const std::int64_t scale = ScaleFor(d, omega); scale != 0) {
    const std::vector<std::int64_t> ds = ScaleVector(d, scale);
    std::vector<std::vector<std::int64_t>> p;
    RunDp<std::int64_t>(k, ds, MakeScaled(scale, omega), p, nullptr);
    std::int64_t value = 0, pair_cost = 0, bfs_cost = 0;
    Summarize<std::int64_t>(k, ds, 2 * scale, p, value, out.pair_i, out.pair_j,
                            pair_cost, out.bfs_part, bfs_cost);
    out.value = Rational(value, scale);
    out.pair_cost = Rational(pair_cost, scale);
    out.bfs_cost = Rational(bfs_cost, scale);
  } else {
    std::vector<std::vector<Rational>> p;
    RunDp(k, d, RationalArith{omega}, p, nullptr);
    Summarize<Rational>(k, d, Rational(2), p, out.value, out.pair_i, out.pair_j,
                        out.pair_cost, out.bfs_part, out.bfs_cost);
  }
  return out;
}

Rational Capacity(const DegreeVector& d, const Rational& omega) {
  return EvaluateCapacity(d, omega).value;
}

absl::StatusOr<ClosedFormResult> ClosedForm(int k, const Rational& omega) {
  if (k < 3) return absl::InvalidArgumentError("closed forms need k >= 3");
  if (omega < Rational(2) || omega > Rational(3)) {
    return absl::InvalidArgumentError("omega must lie in [2, 3]");
  }
  ClosedFormResult out;
  out.k = k;
  out.omega = omega;
  const Rational w = omega;
  if (k % 2 == 1) {
    if (w <= Rational(2 * k, k - 1)) {
      out.value = w * (k + 1) / (2 * w + (k - 1));
      out.regime = "odd";
    } else {
      out.value = Rational(2) - Rational(2, k + 1);
      out.regime = "odd-cap";
    }
    return out;
  }
  if (k == 4) {
    if (w <= Rational(5, 2)) {
      out.value = (4 * w - 1) / (2 * w + 1);
      out.regime = "k4";
    } else {
      out.value = Rational(3, 2);
      out.regime = "k4-cap";
    }
    return out;
  }
  if (k == 6) {
    if (w <= Rational(13, 6)) {
      out.value = (10 * w - 3) / (4 * w + 3);
      out.regime = "k6-piece-1";
    } else if (w <= Rational(9, 4)) {
      out.value = (22 - 4 * w) / (17 - 4 * w);
      out.regime = "k6-piece-2";
    } else if (w <= Rational(16, 7)) {
      out.value = (11 * w - 2) / (4 * w + 5);
      out.regime = "k6-piece-3";
    } else if (w <= Rational(5, 2)) {
      out.value = (10 - w) / (7 - w);
      out.regime = "k6-piece-4";
    } else {
      out.value = Rational(5, 3);
      out.regime = "k6-cap";
    }
    return out;
  }
  const Rational four_over_k(4, k);
  out.value = (k * w - four_over_k) / (2 * w + (k - 2) - four_over_k);
  // Rule 1 alone keeps every class at or below 2.
  out.value = std::min(out.value, Rational(2));
  out.regime = "even-bound";
  out.tight = (w == Rational(2));
  return out;
}

namespace {

DegreeVector Uniform(int k, const Rational& value) {
  return DegreeVector(k, value);
}

// d_0 = 2 beta, d_1..d_t = delta, the rest beta, with t = k/2 - 1,
// h = k/2, beta = delta t / h.
HardCase EvenClass(int k, const Rational& omega) {
  const int t = k / 2 - 1;
  const int h = k / 2;
  const Rational delta =
      (omega - 1) / (Rational(t) + omega - 1 + Rational(t, h));
  const Rational beta = delta * t / h;
  HardCase out;
  out.k = k;
  out.regime = k == 4 ? "k4" : "even-bound";
  out.d.push_back(2 * beta);
  for (int i = 1; i <= t; ++i) out.d.push_back(delta);
  for (int i = t + 1; i < k; ++i) out.d.push_back(beta);
  out.expected = 1 + t * delta;
  return out;
}

}  // namespace

std::vector<HardCase> HardCases(const Rational& omega) {
  std::vector<HardCase> out;
  const Rational w = omega;
  for (int k = 3; k <= 9; k += 2) {
    const int t = (k - 1) / 2;
    HardCase hc;
    hc.k = k;
    if (w <= Rational(2 * k, k - 1)) {
      const Rational delta = (w - 1) / (t + w);
      hc.regime = "odd";
      hc.d = Uniform(k, delta);
      hc.expected = w * (k + 1) / (2 * w + (k - 1));
    } else {
      hc.regime = "odd-cap";
      hc.d = Uniform(k, Rational(2, k + 1));
      hc.expected = Rational(2) - Rational(2, k + 1);
    }
    out.push_back(hc);
  }
  if (w <= Rational(5, 2)) {
    out.push_back(EvenClass(4, w));
  } else {
    HardCase hc = EvenClass(4, Rational(5, 2));
    hc.regime = "k4-cap";
    out.push_back(hc);
    // Piece 4 at its right end keeps its value for larger omega.
    const Rational b(5, 3);
    out.push_back(
        {6,
         "k6-cap",
         {2 - b, 2 - b, 2 * b - 3, (2 - b) / 2, (2 - b) / 2, 2 * b - 3},
         b});
  }
  if (w <= Rational(13, 6)) {
    const Rational b = (10 * w - 3) / (4 * w + 3);
    const Rational delta = (b - 1) / 2;
    out.push_back({6,
                   "k6-piece-1",
                   {4 * delta / 3, delta, delta, 2 * delta / 3, 2 * delta / 3,
                    2 * delta / 3},
                   b});
  }
  if (w >= Rational(13, 6) && w <= Rational(9, 4)) {
    const Rational b = (22 - 4 * w) / (17 - 4 * w);
    out.push_back({6,
                   "k6-piece-2",
                   {2 - b, (7 * b - 10) / 4, (6 - 3 * b) / 4, (2 - b) / 2,
                    (2 - b) / 2, 2 * b - 3},
                   b});
  }
  if (w >= Rational(9, 4) && w <= Rational(16, 7)) {
    const Rational b = (11 * w - 2) / (4 * w + 5);
    const Rational delta = (b - 1) / 2;
    out.push_back({6,
                   "k6-piece-3",
                   {8 * delta / 7, 8 * delta / 7, 6 * delta / 7, 4 * delta / 7,
                    4 * delta / 7, 6 * delta / 7},
                   b});
  }
  if (w >= Rational(16, 7) && w <= Rational(5, 2)) {
    const Rational b = (10 - w) / (7 - w);
    out.push_back(
        {6,
         "k6-piece-4",
         {2 - b, 2 - b, 2 * b - 3, (2 - b) / 2, (2 - b) / 2, 2 * b - 3},
         b});
  }
  if (w == Rational(2)) {
    for (int k = 6; k <= 8; k += 2) out.push_back(EvenClass(k, w));
  }
  return out;
}

std::vector<HardCaseReport> VerifyHardCases(const Rational& omega) {
  std::vector<HardCaseReport> out;
  for (const HardCase& hc : HardCases(omega)) {
    HardCaseReport report;
    report.hard_case = hc;
    report.capacity = Capacity(hc.d, omega);
    report.pass = report.capacity == hc.expected;
    out.push_back(report);
  }
  return out;
}

namespace {

struct Candidate {
  DegreeVector d;
  Rational value;
};

// Larger value wins; equal values keep the lexicographically smaller d.
bool Better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.d < b.d;
}

class Searcher {
 public:
  Searcher(int k, const Rational& omega, const SearchBudget& budget)
      : k_(k), omega_(omega), budget_(budget) {}

  SearchResult Run() {
    std::vector<Candidate> starts = Grid();
    if (budget_.use_hard_case_seeds) {
      for (const HardCase& hc : HardCases(omega_)) {
        if (hc.k == k_) starts.push_back(Evaluate(hc.d));
      }
    }
    Candidate best = starts.front();
    for (const Candidate& start : starts) {
      Candidate refined = Refine(start);
      if (Better(refined, best)) best = refined;
    }
    return {best.d, best.value, evaluations_};
  }

 private:
  Candidate Evaluate(const DegreeVector& d) {
    ++evaluations_;
    return {d, Capacity(d, omega_)};
  }

  // Grid points with d_0 = max d_i; returns the best refine_starts of them.
  std::vector<Candidate> Grid() {
    const int g = budget_.grid_denominator;
    std::vector<std::vector<int>> points;
    std::vector<int> cur(k_, 0);
    for (int top = 0; top <= g; ++top) {
      cur[0] = top;
      Enumerate(1, top, cur, points);
    }
    const int threads = std::max(1, budget_.threads);
    std::vector<std::vector<Candidate>> partial(threads);
    std::vector<std::int64_t> counts(threads, 0);
    auto work = [&](int id) {
      for (std::size_t i = id; i < points.size(); i += threads) {
        DegreeVector d;
        for (int x : points[i]) d.push_back(Rational(x, g));
        Candidate c{d, Capacity(d, omega_)};
        ++counts[id];
        Keep(partial[id], std::move(c));
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int id = 0; id < threads; ++id) pool.emplace_back(work, id);
      for (auto& th : pool) th.join();
    }
    std::vector<Candidate> merged;
    for (int id = 0; id < threads; ++id) {
      evaluations_ += counts[id];
      for (Candidate& c : partial[id]) Keep(merged, std::move(c));
    }
    return merged;
  }

  void Enumerate(int pos, int top, std::vector<int>& cur,
                 std::vector<std::vector<int>>& points) {
    if (pos == k_) {
      points.push_back(cur);
      return;
    }
    for (int x = 0; x <= top; ++x) {
      cur[pos] = x;
      Enumerate(pos + 1, top, cur, points);
    }
  }

  // Bounded best-first list, ordered by Better.
  void Keep(std::vector<Candidate>& list, Candidate c) {
    auto it = std::lower_bound(list.begin(), list.end(), c, Better);
    list.insert(it, std::move(c));
    if (static_cast<int>(list.size()) > std::max(1, budget_.refine_starts)) {
      list.pop_back();
    }
  }

  // Coordinate and pairwise moves with halving steps, first improvement.
  Candidate Refine(Candidate cur) {
    for (int den = budget_.grid_denominator; den <= budget_.final_denominator;
         den *= 2) {
      const Rational step(1, den);
      bool improved = true;
      while (improved) {
        improved = false;
        for (const DegreeVector& d : Moves(cur.d, step)) {
          Candidate next = Evaluate(d);
          if (next.value > cur.value) {
            cur = std::move(next);
            improved = true;
            break;
          }
        }
      }
    }
    return cur;
  }

  std::vector<DegreeVector> Moves(const DegreeVector& d, const Rational& step) {
    std::vector<DegreeVector> out;
    auto push = [&](DegreeVector v) {
      for (const Rational& x : v) {
        if (x < Rational(0) || x > Rational(1)) return;
      }
      out.push_back(std::move(v));
    };
    for (int i = 0; i < k_; ++i) {
      for (int s : {1, -1}) {
        DegreeVector v = d;
        v[i] += s * step;
        push(std::move(v));
      }
    }
    for (int i = 0; i < k_; ++i) {
      for (int j = i + 1; j < k_; ++j) {
        for (int si : {1, -1}) {
          for (int sj : {1, -1}) {
            DegreeVector v = d;
            v[i] += si * step;
            v[j] += sj * step;
            push(std::move(v));
          }
        }
      }
    }
    return out;
  }

  int k_;
  Rational omega_;
  SearchBudget budget_;
  std::int64_t evaluations_ = 0;
};

}  // namespace

absl::StatusOr<SearchResult> MaximizeCapacity(int k, const Rational& omega,
                                              const SearchBudget& budget) {
  if (k < 3 || k > 8) return absl::InvalidArgumentError("need 3 <= k <= 8");
  if (omega < Rational(2) || omega > Rational(3)) {
    return absl::InvalidArgumentError("omega must lie in [2, 3]");
  }
  if (budget.grid_denominator < 1 ||
      budget.final_denominator < budget.grid_denominator) {
    return absl::InvalidArgumentError("bad search budget");
  }
  return Searcher(k, omega, budget).Run();
}

}  // namespace patdet
