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

#include "patdet/selftest.h"

#include <functional>

#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "patdet/class_counting.h"
#include "patdet/corpus.h"
#include "patdet/cycle_detect.h"
#include "patdet/exponents.h"
#include "patdet/graph_core.h"
#include "patdet/reductions.h"
#include "patdet/rng.h"

namespace patdet {
namespace {

using CheckFn = std::function<absl::StatusOr<std::string>(Rng&)>;

OrderedPattern RandomPattern(int k, Rng& rng) {
  OrderedPattern h(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (rng.Coin()) h.AddEdge(i, j);
    }
  }
  return h;
}

absl::Status Fail(const std::string& what) { return absl::InternalError(what); }

absl::StatusOr<std::string> CheckSpectra(Rng& rng) {
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 4 + trial % 3;
    absl::StatusOr<ClassSpectrum> s =
        ComputeClassSpectrum(ClassOf(RandomPattern(k, rng)));
    if (!s.ok()) return s.status();
  }
  return std::string("30 classes, k in {4,5,6}");
}

absl::StatusOr<std::string> CheckCountClass(Rng& rng) {
  for (int trial = 0; trial < 12; ++trial) {
    const int k = 4 + trial % 3;
    const Graph g = RandomGnp(8, 0.5, false, rng.Next());
    const PatternClass c = ClassOf(RandomPattern(k, rng));
    absl::StatusOr<std::int64_t> fast = CountClass(g, c);
    if (!fast.ok()) return fast.status();
    absl::StatusOr<ClassSpectrum> s = ComputeClassSpectrum(c);
    if (!s.ok()) return s.status();
    std::int64_t slow = 0;
    for (const SpectrumEntry& e : s->entries) {
      absl::StatusOr<std::int64_t> n =
          CountInducedBruteforce(g, PatternFromKey(e.key));
      if (!n.ok()) return n.status();
      slow += e.alpha * *n;
    }
    if (slow != *fast) {
      return Fail(
          absl::StrCat("count_class ", *fast, " vs weighted sum ", slow));
    }
  }
  return std::string("12 random (G, c) pairs");
}

absl::StatusOr<std::string> CheckDiamond(Rng& rng) {
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = RandomGnp(10, 0.5, false, rng.Next());
    absl::StatusOr<std::int64_t> diamonds =
        CountInducedBruteforce(g, OrderedPattern::Diamond());
    absl::StatusOr<std::int64_t> k4 =
        CountInducedBruteforce(g, OrderedPattern::Complete(4));
    if (!diamonds.ok()) return diamonds.status();
    if (!k4.ok()) return k4.status();
    if (DiamondIdentity(g) != *diamonds + 6 * *k4) {
      return Fail("diamond identity mismatch");
    }
  }
  return std::string("10 random G(10, 1/2)");
}

absl::StatusOr<std::string> CheckReductions(Rng& rng) {
  // K_4 with a pendant path: one 4-clique, two outside vertices.
  const std::vector<std::pair<int, int>> edges = {
      {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}};
  const OrderedPattern h = OrderedPattern::FromEdges(6, edges);
  int checked = 0;
  for (int trial = 0; trial < 4; ++trial) {
    const Graph g = RandomGnp(6, 0.6, false, rng.Next());
    absl::StatusOr<ReductionOutput> out = BuildCliqueReduction(g, h, 3);
    if (!out.ok()) return out.status();
    absl::StatusOr<bool> ok = VerifyReductionIff(g, h, 3, *out);
    if (!ok.ok()) return ok.status();
    if (!*ok) return Fail("clique reduction iff failed");
    ++checked;
  }
  const OrderedPattern c5 = OrderedPattern::Cycle(5);
  for (int trial = 0; trial < 3; ++trial) {
    const Graph g = RandomGnp(5, 0.5, false, rng.Next());
    absl::StatusOr<ReductionOutput> out = BuildChromaticReduction(g, c5);
    if (!out.ok()) return out.status();
    absl::StatusOr<bool> ok = VerifyReductionIff(g, c5, 3, *out);
    if (!ok.ok()) return ok.status();
    if (!*ok) return Fail("chromatic reduction iff failed");
    ++checked;
  }
  return absl::StrCat(checked, " gadgets verified");
}

absl::StatusOr<std::string> CheckSchemes(Rng&) {
  for (const OrderedPattern& h :
       {OrderedPattern::Paw(), OrderedPattern::Cycle(4),
        OrderedPattern::Diamond(), OrderedPattern::Cycle(5),
        OrderedPattern::Path(6)}) {
    absl::StatusOr<DetectionScheme> s = SchemeKLe6(h);
    if (!s.ok()) return s.status();
    if (absl::Status v = ValidateScheme(*s); !v.ok()) return v;
  }
  for (int k = 4; k <= 20; ++k) {
    absl::StatusOr<int> s = FindHskParameter(k);
    if (!s.ok()) return s.status();
    absl::StatusOr<DetectionScheme> scheme = SchemeHsk(k, *s);
    if (!scheme.ok()) return scheme.status();
    if (k <= 8) {
      if (absl::Status v = ValidateScheme(*scheme); !v.ok()) return v;
    }
  }
  return std::string("k<=6 chains and H_s^k for k = 4..20");
}

absl::StatusOr<std::string> CheckDetection(Rng& rng) {
  const OrderedPattern h = OrderedPattern::Paw();
  absl::StatusOr<DetectionScheme> s = SchemeKLe6(h);
  if (!s.ok()) return s.status();
  CorpusSpec spec;
  spec.family = "planted-pattern";
  spec.n = 12;
  spec.pattern = h;
  absl::StatusOr<Corpus> planted = GenerateCorpus(spec, rng.Next());
  if (!planted.ok()) return planted.status();
  absl::StatusOr<bool> hit =
      DetectPatternMod(planted->files[0].graph, *s, rng.Next());
  if (!hit.ok()) return hit.status();
  if (!*hit) return Fail("planted paw not detected");
  // A triangle-free host has no paw.
  spec.family = "triangle-free";
  absl::StatusOr<Corpus> clean = GenerateCorpus(spec, rng.Next());
  if (!clean.ok()) return clean.status();
  hit = DetectPatternMod(clean->files[0].graph, *s, rng.Next());
  if (!hit.ok()) return hit.status();
  if (*hit) return Fail("paw reported in a triangle-free host");
  return std::string("planted and clean hosts");
}

absl::StatusOr<std::string> CheckCycles(Rng& rng) {
  CorpusSpec spec;
  spec.family = "planted-cycle";
  spec.n = 15;
  spec.m = 30;
  spec.k = 4;
  absl::StatusOr<Corpus> c = GenerateCorpus(spec, rng.Next());
  if (!c.ok()) return c.status();
  absl::StatusOr<CycleResult> r =
      DetectKCycle(c->files[0].graph, 4, rng.Next(), 2000);
  if (!r.ok()) return r.status();
  if (!r->witness.has_value()) return Fail("planted C_4 not found");
  Graph dag(10, /*directed=*/true);
  for (int u = 0; u < 10; ++u) {
    for (int v = u + 1; v < 10; ++v) dag.AddEdge(u, v);
  }
  r = DetectKCycle(dag, 3, rng.Next(), 200);
  if (!r.ok()) return r.status();
  if (r->witness.has_value()) return Fail("cycle reported in a DAG");
  return std::string("planted C_4 found, DAG clean");
}

absl::StatusOr<std::string> CheckExponents(Rng&) {
  int count = 0;
  for (const Rational& w : {Rational(2), Rational(13, 6), Rational(9, 4),
                            Rational(16, 7), Rational(5, 2)}) {
    for (const HardCaseReport& r : VerifyHardCases(w)) {
      if (!r.pass) {
        return Fail(absl::StrCat("hard case k=", r.hard_case.k, " ",
                                 r.hard_case.regime, " at omega ",
                                 FormatRational(w)));
      }
      ++count;
    }
  }
  return absl::StrCat(count, " hard-case classes exact");
}

}  // namespace

std::vector<SelfTestCheck> RunSelfTest(std::uint64_t seed) {
  const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"class-spectra", CheckSpectra},
      {"count-class", CheckCountClass},
      {"diamond-identity", CheckDiamond},
      {"reductions", CheckReductions},
      {"schemes", CheckSchemes},
      {"detection", CheckDetection},
      {"cycles", CheckCycles},
      {"exponents", CheckExponents},
  };
  std::vector<SelfTestCheck> out;
  Rng root(seed);
  for (std::size_t i = 0; i < checks.size(); ++i) {
    Rng rng = root.Split(i);
    SelfTestCheck check;
    check.name = checks[i].first;
    absl::StatusOr<std::string> r;
    try {
      r = checks[i].second(rng);
    } catch (const std::exception& e) {
      r = absl::InternalError(e.what());
    }
    check.pass = r.ok();
    check.detail = r.ok() ? *r : r.status().ToString();
    out.push_back(check);
  }
  return out;
}

}  // namespace patdet
