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

#include "patdet/class_counting.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "absl/strings/str_cat.h"
#include "patdet/graph_core.h"
#include "patdet/rng.h"

namespace patdet {

int FreePairCount(int k) { return (k - 1) / 3; }

PatternClass::PatternClass(const OrderedPattern& any_member)
    : base_(any_member) {
  for (int j = 1; j <= k_prime(); ++j) base_.RemoveEdge(0, j);
}

bool PatternClass::Contains(const OrderedPattern& h) const {
  if (h.k() != k()) return false;
  OrderedPattern stripped = h;
  for (int j = 1; j <= k_prime(); ++j) stripped.RemoveEdge(0, j);
  return stripped == base_;
}

std::vector<OrderedPattern> PatternClass::Members() const {
  std::vector<OrderedPattern> members;
  for (std::uint32_t bits = 0; bits < (1u << k_prime()); ++bits) {
    OrderedPattern m = base_;
    for (int j = 0; j < k_prime(); ++j) {
      if ((bits >> j) & 1u) m.AddEdge(0, j + 1);
    }
    members.push_back(m);
  }
  return members;
}

PatternClass ClassOf(const OrderedPattern& h) { return PatternClass(h); }

absl::StatusOr<ClassSpectrum> ComputeClassSpectrum(const PatternClass& c) {
  const int k = c.k();
  if (k > kMaxPatternSize) {
    return absl::InvalidArgumentError("class spectra need k <= 8");
  }
  std::vector<UnlabeledPatternKey> keys;
  for (const OrderedPattern& m : c.Members()) keys.push_back(CanonicalKey(m));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  ClassSpectrum spectrum;
  std::int64_t b_sum = 0;
  std::vector<int> order(k);
  for (const UnlabeledPatternKey& key : keys) {
    const OrderedPattern unlabeled = PatternFromKey(key);
    SpectrumEntry entry;
    entry.key = key;
    std::iota(order.begin(), order.end(), 0);
    do {
      entry.alpha += c.Contains(unlabeled.Permuted(order));
    } while (std::next_permutation(order.begin(), order.end()));
    entry.automorphisms = AutomorphismCount(unlabeled);
    if (entry.alpha % entry.automorphisms != 0) {
      return absl::InternalError(absl::StrCat(
          "|Aut| = ", entry.automorphisms, " does not divide alpha = ",
          entry.alpha, " for ", unlabeled.DebugString()));
    }
    entry.b = entry.alpha / entry.automorphisms;
    b_sum += entry.b;
    spectrum.entries.push_back(entry);
  }
  const std::int64_t classes = std::int64_t{1} << c.k_prime();
  const auto size = static_cast<std::int64_t>(spectrum.entries.size());
  if (b_sum != classes) {
    return absl::InternalError(
        absl::StrCat("sum of b is ", b_sum, ", expected ", classes));
  }
  if (size < c.k_prime() + 1 || size > classes) {
    return absl::InternalError(absl::StrCat(
        "|U(c)| = ", size, " outside [", c.k_prime() + 1, ", ", classes, "]"));
  }
  return spectrum;
}

absl::StatusOr<PatternClass> ClassFromPatternEdges(
    const OrderedPattern& h, int pivot, const std::vector<int>& neighbors) {
  const int k = h.k();
  if (pivot < 0 || pivot >= k) {
    return absl::InvalidArgumentError("pivot out of range");
  }
  if (static_cast<int>(neighbors.size()) != FreePairCount(k)) {
    return absl::InvalidArgumentError(
        absl::StrCat("need exactly ", FreePairCount(k), " pivot edges"));
  }
  if (h.Degree(pivot) < FreePairCount(k)) {
    return absl::InvalidArgumentError("pivot degree below k'");
  }
  std::vector<int> order = {pivot};
  std::vector<bool> placed(k, false);
  placed[pivot] = true;
  for (int v : neighbors) {
    if (v < 0 || v >= k || placed[v] || !h.HasEdge(pivot, v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("vertex ", v, " is not a distinct pivot neighbour"));
    }
    placed[v] = true;
    order.push_back(v);
  }
  for (int v = 0; v < k; ++v) {
    if (!placed[v]) order.push_back(v);
  }
  return ClassOf(h.Permuted(order));
}

namespace {

// Matrices beyond this many entries are refused.
constexpr std::int64_t kMaxMatrixEntries = std::int64_t{1} << 27;

std::int64_t Power(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

// Arithmetic either exact (with overflow detection) or mod q.
class Ring {
 public:
  explicit Ring(std::optional<std::int64_t> modulus) : modulus_(modulus) {}

  std::int64_t Add(std::int64_t a, std::int64_t b) {
    if (modulus_) return (a + b) % *modulus_;
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) overflow_ = true;
    return out;
  }
  std::int64_t Mul(std::int64_t a, std::int64_t b) {
    if (modulus_) {
      return static_cast<std::int64_t>(static_cast<__int128>(a) * b %
                                       *modulus_);
    }
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) overflow_ = true;
    return out;
  }
  std::int64_t Reduce(std::int64_t a) const {
    if (!modulus_) return a;
    const std::int64_t r = a % *modulus_;
    return r < 0 ? r + *modulus_ : r;
  }
  bool overflow() const { return overflow_; }

 private:
  std::optional<std::int64_t> modulus_;
  bool overflow_ = false;
};

// Enumerates tuples of distinct host vertices for the pattern positions
// `slots`, extending `fixed` (host vertex, pattern position) pairs, such
// that the whole ordered induced subgraph agrees with the pattern.
class TupleEnumerator {
 public:
  TupleEnumerator(const Graph& g, const OrderedPattern& h) : g_(g), h_(h) {}

  template <typename Fn>
  void Run(std::vector<std::pair<int, int>>& fixed,
           const std::vector<int>& slots, Fn&& fn) {
    std::vector<int> tuple;
    tuple.reserve(slots.size());
    Extend(fixed, slots, 0, tuple, fn);
  }

 private:
  template <typename Fn>
  void Extend(std::vector<std::pair<int, int>>& fixed,
              const std::vector<int>& slots, std::size_t depth,
              std::vector<int>& tuple, Fn&& fn) {
    if (depth == slots.size()) {
      fn(tuple);
      return;
    }
    const int position = slots[depth];
    for (int x = 0; x < g_.node_count(); ++x) {
      bool ok = true;
      for (auto [y, q] : fixed) {
        if (y == x || g_.HasEdge(x, y) != h_.HasEdge(position, q)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      fixed.emplace_back(x, position);
      tuple.push_back(x);
      Extend(fixed, slots, depth + 1, tuple, fn);
      tuple.pop_back();
      fixed.pop_back();
    }
  }

  const Graph& g_;
  const OrderedPattern& h_;
};

std::int64_t TupleIndex(const std::vector<int>& tuple, std::size_t begin,
                        std::size_t end, int n) {
  std::int64_t index = 0;
  for (std::size_t i = begin; i < end; ++i) index = index * n + tuple[i];
  return index;
}

std::vector<int> Range(int first, int last) {
  std::vector<int> out;
  for (int i = first; i <= last; ++i) out.push_back(i);
  return out;
}

}  // namespace

absl::StatusOr<std::int64_t> CountClass(const Graph& g, const PatternClass& c,
                                        std::optional<std::int64_t> modulus) {
  if (g.directed()) {
    return absl::InvalidArgumentError("host graph must be undirected");
  }
  if (modulus.has_value() && *modulus < 2) {
    return absl::InvalidArgumentError("modulus must be at least 2");
  }
  const int k = c.k();
  if (k < 2) return absl::InvalidArgumentError("class needs k >= 2");
  const int n = g.node_count();
  const OrderedPattern& h = c.base();
  const int kp = FreePairCount(k);
  const int k1 = (k - 1 + 2) / 3;
  const int k2 = (k - 2 + 2) / 3;
  // Pattern positions: w_0, then P = w_1..w_k', then tail A and tail B.
  const std::vector<int> p_slots = Range(1, kp);
  const std::vector<int> a_slots = Range(kp + 1, kp + k1);
  const std::vector<int> b_slots = Range(kp + k1 + 1, k - 1);

  const std::int64_t columns = Power(n, k2);
  const std::int64_t p_rows = Power(n, kp);
  if (n > 0 && (static_cast<double>(p_rows + n) * static_cast<double>(columns) >
                static_cast<double>(kMaxMatrixEntries))) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "product operands need ", (p_rows + n) * columns, " entries"));
  }

  // r: positions w_i (1 <= i <= k') that relate to the tail like w_0.
  int r = 0;
  for (int i = 1; i <= kp; ++i) {
    bool same = true;
    for (int j = kp + 1; j < k; ++j)
      same = same && h.HasEdge(i, j) == h.HasEdge(0, j);
    r += same;
  }

  Ring ring(modulus);
  TupleEnumerator enumerate(g, h);
  std::vector<std::pair<int, int>> fixed;

  // C (n x n^{k2}): (v, p_b) maps to (w_0, tail B).
  std::vector<std::int64_t> c_mat(static_cast<std::size_t>(n) * columns, 0);
  for (int v = 0; v < n; ++v) {
    fixed = {{v, 0}};
    enumerate.Run(fixed, b_slots, [&](const std::vector<int>& tuple) {
      c_mat[v * columns + TupleIndex(tuple, 0, tuple.size(), n)] = 1;
    });
  }
  // C' (n^{k'} x n^{k2}): (P, p_b) maps to (w_1..w_k', tail B).
  std::vector<std::int64_t> cp_mat(static_cast<std::size_t>(p_rows) * columns,
                                   0);
  fixed.clear();
  enumerate.Run(fixed, p_slots, [&](const std::vector<int>& p) {
    const std::int64_t row = TupleIndex(p, 0, p.size(), n);
    std::vector<std::pair<int, int>> inner;
    for (int i = 0; i < kp; ++i) inner.emplace_back(p[i], p_slots[i]);
    enumerate.Run(inner, b_slots, [&](const std::vector<int>& tuple) {
      cp_mat[row * columns + TupleIndex(tuple, 0, tuple.size(), n)] = 1;
    });
  });

  // Rows of M = BC and M' = B'C' are formed one tail-A tuple at a time; only
  // rows with a member of S are ever needed.
  std::vector<std::int64_t> m_row(columns);
  std::vector<std::int64_t> mp_row(columns);
  std::int64_t total = 0;
  fixed.clear();
  enumerate.Run(fixed, a_slots, [&](const std::vector<int>& pa) {
    std::fill(m_row.begin(), m_row.end(), 0);
    std::fill(mp_row.begin(), mp_row.end(), 0);
    std::vector<std::pair<int, int>> base;
    for (int i = 0; i < k1; ++i) base.emplace_back(pa[i], a_slots[i]);
    // Row p_a of B: vertices v with (v, p_a) mapping to (w_0, tail A).
    std::vector<std::pair<int, int>> with_v = base;
    enumerate.Run(with_v, {0}, [&](const std::vector<int>& v) {
      const std::int64_t* src = &c_mat[v[0] * columns];
      for (std::int64_t col = 0; col < columns; ++col) {
        if (src[col] != 0) m_row[col] = ring.Add(m_row[col], src[col]);
      }
    });
    // Row p_a of B': tuples P with (P, p_a) mapping to (w_1..w_k', tail A).
    std::vector<std::pair<int, int>> with_p = base;
    enumerate.Run(with_p, p_slots, [&](const std::vector<int>& p) {
      const std::int64_t* src =
          &cp_mat[TupleIndex(p, 0, p.size(), n) * columns];
      for (std::int64_t col = 0; col < columns; ++col) {
        if (src[col] != 0) mp_row[col] = ring.Add(mp_row[col], src[col]);
      }
    });
    // Members of S with this prefix.
    std::vector<std::pair<int, int>> with_b = base;
    enumerate.Run(with_b, b_slots, [&](const std::vector<int>& pb) {
      const std::int64_t col = TupleIndex(pb, 0, pb.size(), n);
      if (mp_row[col] == 0) return;
      const std::int64_t free_v = ring.Reduce(m_row[col] - r);
      total = ring.Add(total, ring.Mul(free_v, mp_row[col]));
    });
  });
  if (ring.overflow()) {
    return absl::OutOfRangeError("class count overflows 64 bits");
  }
  return ring.Reduce(total);
}

std::int64_t DiamondIdentity(const Graph& g) {
  std::int64_t total = 0;
  for (auto [u, v] : g.Edges()) {
    auto a = g.Row(u);
    auto b = g.Row(v);
    std::int64_t common = 0;
    for (int w = 0; w < g.words_per_row(); ++w) {
      common += std::popcount(a[w] & b[w]);
    }
    total += common * (common - 1) / 2;
  }
  return total;
}

std::int64_t DefaultTrials(int k, double delta) {
  return static_cast<std::int64_t>(
      std::ceil(std::ldexp(1.0, k) * std::log(1.0 / delta)));
}

absl::Status ValidateScheme(const DetectionScheme& scheme) {
  const int k = scheme.target.k();
  if (k > kMaxPatternSize) {
    return absl::InvalidArgumentError("scheme validation needs k <= 8");
  }
  if (scheme.modulus < 2) return absl::InvalidArgumentError("modulus < 2");
  std::map<UnlabeledPatternKey, std::int64_t> coefficient;
  for (const SchemeTerm& term : scheme.terms) {
    auto spectrum = ComputeClassSpectrum(term.cls);
    if (!spectrum.ok()) return spectrum.status();
    for (const SpectrumEntry& e : spectrum->entries) {
      coefficient[e.key] += term.sign * e.alpha;
    }
  }
  const auto mod = [&](std::int64_t x) {
    const std::int64_t r = x % scheme.modulus;
    return r < 0 ? r + scheme.modulus : r;
  };
  const UnlabeledPatternKey target = CanonicalKey(scheme.target);
  for (const auto& [key, value] : coefficient) {
    if (key == target) {
      if (mod(value) == 0 || mod(value) != mod(scheme.lead_coefficient)) {
        return absl::InternalError(absl::StrCat(
            "target coefficient ", value, " is ", mod(value), " mod ",
            scheme.modulus, "; recorded lead ", scheme.lead_coefficient));
      }
    } else if (mod(value) != 0) {
      return absl::InternalError(absl::StrCat(
          "coefficient ", value, " of ", PatternFromKey(key).DebugString(),
          " is nonzero mod ", scheme.modulus));
    }
  }
  if (!coefficient.contains(target)) {
    return absl::InternalError("target does not occur in the signed sum");
  }
  return absl::OkStatus();
}

absl::StatusOr<DetectionScheme> SchemeKLe6(const OrderedPattern& h) {
  const int k = h.k();
  if (k < 4 || k > 6) {
    return absl::InvalidArgumentError("telescoping scheme needs 4 <= k <= 6");
  }
  const auto edges = h.Edges();
  if (edges.empty() || static_cast<int>(edges.size()) == k * (k - 1) / 2) {
    return absl::InvalidArgumentError(
        "complete and edgeless patterns have no telescoping scheme");
  }
  DetectionScheme scheme;
  scheme.target = h;
  std::int64_t factorial = 1;
  for (int i = 2; i <= k; ++i) factorial *= i;
  scheme.modulus = factorial;
  OrderedPattern current = h;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    auto cls = ClassFromPatternEdges(current, u, {v});
    if (!cls.ok()) return cls.status();
    // Sign (-1)^{i} with i counted from 0 keeps the target term positive.
    scheme.terms.push_back({*cls, (i % 2 == 0) ? 1 : -1});
    scheme.certificate.push_back({current.DebugString(),
                                  AutomorphismCount(current),
                                  AutomorphismCount(current) % factorial});
    current.RemoveEdge(u, v);
  }
  scheme.certificate.push_back({current.DebugString(),
                                AutomorphismCount(current),
                                AutomorphismCount(current) % factorial});
  scheme.lead_coefficient = AutomorphismCount(h) % factorial;
  scheme.trials = DefaultTrials(k);
  return scheme;
}

std::int64_t HskAutomorphisms(int k, int s) {
  auto factorial = [](int m) {
    std::int64_t out = 1;
    for (int i = 2; i <= m; ++i) out *= i;
    return out;
  };
  if (s == k - 1) return factorial(k);
  // The extra vertex and the single non-neighbour in the clique are twins.
  if (s == k - 2) return 2 * factorial(k - 2);
  return factorial(s) * factorial(k - 1 - s);
}

bool IsPrime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

int HskLow(int k) { return k / 2; }  // ceil((k-1)/2)
int HskHigh(int k) { return k - 1 - FreePairCount(k); }

// Lead residue and the divisibility of the other terms for modulus q.
bool HskCertificateHolds(int k, int s, std::int64_t q) {
  if (HskAutomorphisms(k, s) % q == 0) return false;
  for (int i = 1; i <= FreePairCount(k); ++i) {
    if (HskAutomorphisms(k, s + i) % q != 0) return false;
  }
  return true;
}

}  // namespace

absl::StatusOr<int> FindHskParameter(int k) {
  if (k < 3 || k > 20) return absl::InvalidArgumentError("need 3 <= k <= 20");
  if (k == 14) return 7;
  for (int s = HskLow(k); s <= HskHigh(k); ++s) {
    if (IsPrime(s + 1) && HskCertificateHolds(k, s, s + 1)) return s;
  }
  return absl::NotFoundError(
      absl::StrCat("no admissible s for k = ", k,
                   " passes the automorphism divisibility check"));
}

absl::StatusOr<DetectionScheme> SchemeHsk(int k, int s) {
  if (k < 3 || k > 20) return absl::InvalidArgumentError("need 3 <= k <= 20");
  const int kp = FreePairCount(k);
  std::int64_t q = 0;
  if (k == 14 && s == 7) {
    q = 512;
  } else {
    if (s < HskLow(k) || s > HskHigh(k)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "s = ", s, " outside [", HskLow(k), ", ", HskHigh(k), "]"));
    }
    if (!IsPrime(s + 1)) {
      return absl::InvalidArgumentError(
          absl::StrCat("s + 1 = ", s + 1, " is not prime"));
    }
    q = s + 1;
  }
  DetectionScheme scheme;
  scheme.target = OrderedPattern::CliquePlusVertex(k, s);
  scheme.modulus = q;
  for (int i = 0; i <= kp; ++i) {
    const std::int64_t aut = HskAutomorphisms(k, s + i);
    scheme.certificate.push_back(
        {absl::StrCat("H_", s + i, "^", k), aut, aut % q});
  }
  if (!HskCertificateHolds(k, s, q)) {
    return absl::FailedPreconditionError(
        absl::StrCat("automorphism divisibility fails for k = ", k, ", s = ", s,
                     ", q = ", q));
  }
  // Extra vertex first, then k' clique vertices it misses, then the rest.
  std::vector<int> order = {0};
  for (int v = s + 1; v <= s + kp; ++v) order.push_back(v);
  for (int v = 1; v <= s; ++v) order.push_back(v);
  for (int v = s + kp + 1; v < k; ++v) order.push_back(v);
  scheme.terms.push_back({ClassOf(scheme.target.Permuted(order)), 1});
  scheme.lead_coefficient = HskAutomorphisms(k, s) % q;
  scheme.trials = DefaultTrials(k);
  return scheme;
}

absl::StatusOr<bool> DetectPatternMod(const Graph& g,
                                      const DetectionScheme& scheme,
                                      std::uint64_t seed) {
  const Rng root(seed);
  for (std::int64_t trial = 0; trial < scheme.trials; ++trial) {
    const SampledSubgraph sample =
        RandomInducedSubgraph(g, root.Split(trial).Next());
    std::int64_t residue = 0;
    for (const SchemeTerm& term : scheme.terms) {
      auto count = CountClass(sample.graph, term.cls, scheme.modulus);
      if (!count.ok()) return count.status();
      residue = (residue + term.sign * *count) % scheme.modulus;
    }
    if (residue != 0) return true;
  }
  return false;
}

double DetectionErrorBound(const DetectionScheme& scheme) {
  const double p = std::ldexp(1.0, -scheme.target.k());
  return std::pow(1.0 - p, static_cast<double>(scheme.trials));
}

}  // namespace patdet
