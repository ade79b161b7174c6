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

#include "patdet/cli.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "nlohmann/json.hpp"
#include "patdet/class_counting.h"
#include "patdet/corpus.h"
#include "patdet/cycle_detect.h"
#include "patdet/exponents.h"
#include "patdet/graph_core.h"
#include "patdet/graph_io.h"
#include "patdet/pattern.h"
#include "patdet/rational.h"
#include "patdet/reductions.h"
#include "patdet/selftest.h"

namespace patdet {

std::uint64_t Fnv1a(absl::string_view bytes, std::uint64_t basis) {
  std::uint64_t h = basis;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

using Json = nlohmann::ordered_json;

struct Globals {
  std::uint64_t seed = 1;
  bool json = false;
  int threads = 1;
};

// Tracks the digest of everything read and the fields of the report.
class Session {
 public:
  Session(std::string command, const Globals& globals, std::ostream& out,
          std::ostream& err)
      : globals_(globals),
        out_(out),
        err_(err),
        start_(std::chrono::steady_clock::now()) {
    report_["schema"] = 1;
    report_["command"] = std::move(command);
  }

  const Globals& globals() const { return globals_; }
  std::ostream& out() { return out_; }
  Json& report() { return report_; }

  void Digest(absl::string_view bytes) { digest_ = Fnv1a(bytes, digest_); }

  absl::StatusOr<Graph> LoadGraph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    Digest(text);
    absl::StatusOr<Graph> g = ParseGraph(text);
    if (!g.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat(path, ": ", g.status().message()));
    }
    return g;
  }

  absl::StatusOr<OrderedPattern> LoadPattern(const std::string& path) {
    absl::StatusOr<Graph> g = LoadGraph(path);
    if (!g.ok()) return g.status();
    absl::StatusOr<OrderedPattern> h = OrderedPattern::FromGraph(*g);
    if (!h.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat(path, ": ", h.status().message()));
    }
    return h;
  }

  // Human text goes to `out` unless --json is set.
  void Say(absl::string_view line) {
    if (!globals_.json) out_ << line << "\n";
  }

  int Finish(int code) {
    if (globals_.json) {
      report_["input_digest"] = absl::StrFormat("fnv1a64:%016x", digest_);
      report_["seed"] = globals_.seed;
      report_["exit_code"] = code;
      report_["wall_time_ms"] = std::chrono::duration<double, std::milli>(
                                    std::chrono::steady_clock::now() - start_)
                                    .count();
      out_ << report_.dump() << "\n";
    }
    return code;
  }

  int Fail(const absl::Status& status) {
    err_ << "error: " << status.message() << "\n";
    int code = kExitInvariant;
    switch (status.code()) {
      case absl::StatusCode::kInvalidArgument:
      case absl::StatusCode::kNotFound:
      case absl::StatusCode::kFailedPrecondition:
      case absl::StatusCode::kOutOfRange:
      case absl::StatusCode::kResourceExhausted:
      case absl::StatusCode::kUnimplemented:
        code = kExitUsage;
        break;
      default:
        break;
    }
    report_["error"] = std::string(status.message());
    return Finish(code);
  }

 private:
  Globals globals_;
  std::ostream& out_;
  std::ostream& err_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t digest_ = 14695981039346656037ull;
  Json report_;
};

Json RationalJson(const Rational& r) {
  return Json{{"num", r.numerator()},
              {"den", r.denominator()},
              {"text", FormatRational(r)},
              {"decimal", ToDouble(r)}};
}

std::string VectorText(const DegreeVector& d) {
  std::vector<std::string> parts;
  for (const Rational& x : d) parts.push_back(FormatRational(x));
  return absl::StrJoin(parts, " ");
}

std::string BoundText(double bound) {
  return absl::StrFormat("ABSENT(p_err<=%.3g)", bound);
}

// ---- detect ------------------------------------------------------------

struct DetectArgs {
  std::string pattern, graph, scheme = "auto";
  std::optional<std::int64_t> trials;
};

// The s with h isomorphic to H_s^k, if any.
std::optional<int> HskShape(const OrderedPattern& h) {
  if (h.k() > kMaxPatternSize) return std::nullopt;
  const UnlabeledPatternKey key = CanonicalKey(h);
  for (int s = 0; s < h.k(); ++s) {
    if (CanonicalKey(OrderedPattern::CliquePlusVertex(h.k(), s)) == key) {
      return s;
    }
  }
  return std::nullopt;
}

absl::StatusOr<DetectionScheme> PickScheme(const OrderedPattern& h,
                                           const std::string& which,
                                           std::string& name) {
  if (which == "hsk" || which == "auto") {
    const std::optional<int> s = HskShape(h);
    if (s.has_value()) {
      absl::StatusOr<DetectionScheme> scheme = SchemeHsk(h.k(), *s);
      if (scheme.ok()) {
        name = absl::StrCat("hsk(s=", *s, ")");
        return scheme;
      }
      if (which == "hsk") return scheme.status();
    } else if (which == "hsk") {
      return absl::InvalidArgumentError("pattern is not of the form H_s^k");
    }
  }
  if (which == "k6" || which == "auto") {
    absl::StatusOr<DetectionScheme> scheme = SchemeKLe6(h);
    if (scheme.ok()) {
      name = "k6";
      return scheme;
    }
    if (which == "k6") return scheme.status();
  }
  if (which != "auto") {
    return absl::InvalidArgumentError(absl::StrCat("unknown scheme ", which));
  }
  return absl::NotFoundError("no modular scheme");
}

int RunDetect(const DetectArgs& args, Session& s) {
  absl::StatusOr<OrderedPattern> h = s.LoadPattern(args.pattern);
  if (!h.ok()) return s.Fail(h.status());
  absl::StatusOr<Graph> g = s.LoadGraph(args.graph);
  if (!g.ok()) return s.Fail(g.status());
  std::string name;
  absl::StatusOr<DetectionScheme> scheme = PickScheme(*h, args.scheme, name);
  if (!scheme.ok() && !absl::IsNotFound(scheme.status())) {
    return s.Fail(scheme.status());
  }
  if (!scheme.ok()) {
    // No scheme covers this pattern; fall back to exhaustive search.
    absl::StatusOr<std::optional<std::vector<int>>> found =
        FindInducedBruteforce(*g, *h);
    if (!found.ok()) return s.Fail(found.status());
    s.report()["scheme"] = "bruteforce";
    s.report()["verdict"] = found->has_value() ? "PRESENT" : "ABSENT";
    s.report()["error_bound"] = 0.0;
    s.Say(found->has_value() ? "PRESENT" : BoundText(0.0));
    return s.Finish(found->has_value() ? kExitOk : kExitAbsent);
  }
  if (args.trials.has_value()) {
    if (*args.trials < 1) {
      return s.Fail(absl::InvalidArgumentError("--trials must be >= 1"));
    }
    scheme->trials = *args.trials;
  }
  absl::StatusOr<bool> hit = DetectPatternMod(*g, *scheme, s.globals().seed);
  if (!hit.ok()) return s.Fail(hit.status());
  const double bound = DetectionErrorBound(*scheme);
  s.report()["scheme"] = name;
  s.report()["modulus"] = scheme->modulus;
  s.report()["trials"] = scheme->trials;
  s.report()["verdict"] = *hit ? "PRESENT" : "ABSENT";
  s.report()["error_bound"] = *hit ? 0.0 : bound;
  s.Say(*hit ? "PRESENT" : BoundText(bound));
  return s.Finish(*hit ? kExitOk : kExitAbsent);
}

// ---- count-class -------------------------------------------------------

struct CountArgs {
  std::string pattern, graph;
  std::optional<std::int64_t> modulus;
};

int RunCountClass(const CountArgs& args, Session& s) {
  absl::StatusOr<OrderedPattern> h = s.LoadPattern(args.pattern);
  if (!h.ok()) return s.Fail(h.status());
  absl::StatusOr<Graph> g = s.LoadGraph(args.graph);
  if (!g.ok()) return s.Fail(g.status());
  if (h->k() < 2) {
    return s.Fail(absl::InvalidArgumentError("pattern needs k >= 2"));
  }
  absl::StatusOr<std::int64_t> count =
      CountClass(*g, ClassOf(*h), args.modulus);
  if (!count.ok()) return s.Fail(count.status());
  s.report()["value"] = *count;
  if (args.modulus.has_value()) s.report()["modulus"] = *args.modulus;
  s.Say(absl::StrCat(*count));
  return s.Finish(kExitOk);
}

// ---- reduce ------------------------------------------------------------

struct ReduceArgs {
  std::string mode, graph, pattern, out, map;
  std::optional<int> t;
  bool verify = false;
};

int RunReduce(const ReduceArgs& args, Session& s) {
  absl::StatusOr<Graph> g = s.LoadGraph(args.graph);
  if (!g.ok()) return s.Fail(g.status());
  absl::StatusOr<OrderedPattern> h = s.LoadPattern(args.pattern);
  if (!h.ok()) return s.Fail(h.status());
  if (g->directed()) {
    return s.Fail(absl::InvalidArgumentError("host graph must be undirected"));
  }
  absl::StatusOr<ReductionOutput> red;
  int t = 0;
  if (args.mode == "clique") {
    if (!args.t.has_value()) {
      return s.Fail(absl::InvalidArgumentError("clique mode needs -t"));
    }
    t = *args.t;
    red = BuildCliqueReduction(*g, *h, t);
  } else if (args.mode == "chromatic") {
    t = ChromaticNumber(*h);
    if (args.t.has_value() && *args.t != t) {
      return s.Fail(absl::InvalidArgumentError(
          absl::StrCat("-t ", *args.t, " differs from chi(H) = ", t)));
    }
    red = BuildChromaticReduction(*g, *h);
  } else {
    return s.Fail(
        absl::InvalidArgumentError(absl::StrCat("unknown mode ", args.mode)));
  }
  if (!red.ok()) return s.Fail(red.status());
  if (!args.out.empty()) {
    if (absl::Status w = WriteGraphFile(args.out, red->gadget); !w.ok()) {
      return s.Fail(w);
    }
  }
  if (!args.map.empty()) {
    std::ofstream map(args.map, std::ios::binary);
    map << "# gadget_vertex\tpattern_vertex\tsource_vertex\n";
    for (std::size_t v = 0; v < red->block_map.size(); ++v) {
      const BlockEntry& e = red->block_map[v];
      map << v << "\t" << e.pattern_vertex << "\t"
          << (e.source_vertex < 0 ? std::string("-")
                                  : std::to_string(e.source_vertex))
          << "\n";
    }
    if (!map) {
      return s.Fail(
          absl::InternalError(absl::StrCat("cannot write ", args.map)));
    }
  }
  s.report()["t"] = t;
  s.report()["gadget_nodes"] = red->gadget.node_count();
  s.report()["gadget_edges"] = red->gadget.edge_count();
  s.report()["blocked_vertices"] = red->blocked_vertices;
  s.Say(absl::StrCat("gadget: ", red->gadget.node_count(), " nodes, ",
                     red->gadget.edge_count(), " edges; t = ", t,
                     "; blocked pattern vertices: ",
                     absl::StrJoin(red->blocked_vertices, " ")));
  if (args.verify) {
    absl::StatusOr<bool> ok = VerifyReductionIff(*g, *h, t, *red);
    if (!ok.ok()) return s.Fail(ok.status());
    s.report()["verified"] = *ok;
    if (!*ok) {
      return s.Fail(absl::InternalError("reduction iff check failed"));
    }
    s.Say("iff: verified");
  }
  return s.Finish(kExitOk);
}

// ---- cycle -------------------------------------------------------------

struct CycleArgs {
  std::string graph, strategy = "auto", omega = "2.373";
  int k = 0;
  std::optional<int> reps;
  bool witness = false;
};

int RunCycle(const CycleArgs& args, Session& s) {
  absl::StatusOr<Graph> g = s.LoadGraph(args.graph);
  if (!g.ok()) return s.Fail(g.status());
  CycleOptions options;
  options.threads = s.globals().threads;
  if (args.strategy == "bfs") {
    options.strategy = CycleStrategy::kBfs;
  } else if (args.strategy == "matrix") {
    options.strategy = CycleStrategy::kMatrix;
  } else if (args.strategy != "auto") {
    return s.Fail(absl::InvalidArgumentError(
        absl::StrCat("unknown strategy ", args.strategy)));
  }
  absl::StatusOr<Rational> omega = ParseRational(args.omega);
  if (!omega.ok()) return s.Fail(omega.status());
  options.omega = *omega;
  if (args.k < 3) {
    return s.Fail(absl::InvalidArgumentError("-k must be at least 3"));
  }
  const int reps = args.reps.value_or(DefaultRepetitions(args.k));
  absl::StatusOr<CycleResult> r =
      DetectKCycle(*g, args.k, s.globals().seed, reps, options);
  if (!r.ok()) return s.Fail(r.status());
  s.report()["k"] = args.k;
  s.report()["repetitions"] = reps;
  s.report()["codings"] = r->codings;
  s.report()["tuples"] = r->tuples;
  if (r->witness.has_value()) {
    s.report()["verdict"] = "PRESENT";
    s.report()["witness"] = *r->witness;
    s.report()["error_bound"] = 0.0;
    s.Say("PRESENT");
    if (args.witness) s.Say(absl::StrJoin(*r->witness, " "));
    return s.Finish(kExitOk);
  }
  s.report()["verdict"] = "ABSENT";
  s.report()["error_bound"] = r->error_bound;
  s.Say(BoundText(r->error_bound));
  return s.Finish(kExitAbsent);
}

// ---- exponents ---------------------------------------------------------

struct ExponentArgs {
  int k = 0;
  std::string omega = "2";
  bool search = false, closed = false, hard_cases = false;
  std::string csv;
  int grid = 8, final_den = 1024, starts = 4;
};

struct CsvRow {
  int k;
  Rational omega;
  std::string regime;
  Rational value;
  DegreeVector d;
};

int RunExponents(const ExponentArgs& args, Session& s) {
  absl::StatusOr<Rational> omega = ParseRational(args.omega);
  if (!omega.ok()) return s.Fail(omega.status());
  const int modes = args.search + args.closed + args.hard_cases;
  if (modes > 1) {
    return s.Fail(absl::InvalidArgumentError(
        "pick one of --search, --closed, --hard-cases"));
  }
  s.Digest(
      absl::StrCat("exponents k=", args.k, " omega=", FormatRational(*omega)));
  s.report()["omega"] = RationalJson(*omega);
  std::vector<CsvRow> rows;
  int code = kExitOk;
  if (args.hard_cases) {
    Json list = Json::array();
    for (const HardCaseReport& r : VerifyHardCases(*omega)) {
      if (args.k != 0 && r.hard_case.k != args.k) continue;
      list.push_back({{"k", r.hard_case.k},
                      {"regime", r.hard_case.regime},
                      {"d", VectorText(r.hard_case.d)},
                      {"expected", RationalJson(r.hard_case.expected)},
                      {"capacity", RationalJson(r.capacity)},
                      {"pass", r.pass}});
      s.Say(
          absl::StrCat(r.pass ? "PASS" : "FAIL", " k=", r.hard_case.k, " ",
                       r.hard_case.regime, " d=(", VectorText(r.hard_case.d),
                       ") capacity=", FormatRationalWithDecimal(r.capacity),
                       " B=", FormatRationalWithDecimal(r.hard_case.expected)));
      rows.push_back({r.hard_case.k, *omega, r.hard_case.regime, r.capacity,
                      r.hard_case.d});
      if (!r.pass) code = kExitInvariant;
    }
    s.report()["hard_cases"] = list;
  } else {
    if (args.k == 0)
      return s.Fail(absl::InvalidArgumentError("--k is required"));
    s.report()["k"] = args.k;
    if (args.search) {
      SearchBudget budget;
      budget.grid_denominator = args.grid;
      budget.final_denominator = args.final_den;
      budget.refine_starts = args.starts;
      budget.threads = s.globals().threads;
      absl::StatusOr<SearchResult> r = MaximizeCapacity(args.k, *omega, budget);
      if (!r.ok()) return s.Fail(r.status());
      s.report()["mode"] = "search";
      s.report()["value"] = RationalJson(r->value);
      s.report()["d"] = VectorText(r->d);
      s.report()["evaluations"] = r->evaluations;
      s.Say(absl::StrCat(FormatRationalWithDecimal(r->value), " at d=(",
                         VectorText(r->d), ")"));
      rows.push_back({args.k, *omega, "search", r->value, r->d});
    } else {
      absl::StatusOr<ClosedFormResult> r = ClosedForm(args.k, *omega);
      if (!r.ok()) return s.Fail(r.status());
      s.report()["mode"] = "closed";
      s.report()["value"] = RationalJson(r->value);
      s.report()["regime"] = r->regime;
      s.report()["tight"] = r->tight;
      s.Say(absl::StrCat(FormatRationalWithDecimal(r->value), " [", r->regime,
                         r->tight ? "" : ", upper bound", "]"));
      rows.push_back({args.k, *omega, r->regime, r->value, {}});
    }
  }
  if (!args.csv.empty()) {
    std::ofstream csv(args.csv, std::ios::binary);
    csv << "k,omega,regime,value_num,value_den,d_vector\n";
    for (const CsvRow& row : rows) {
      csv << row.k << "," << FormatRational(row.omega) << "," << row.regime
          << "," << row.value.numerator() << "," << row.value.denominator()
          << "," << VectorText(row.d) << "\n";
    }
    if (!csv) {
      return s.Fail(
          absl::InternalError(absl::StrCat("cannot write ", args.csv)));
    }
  }
  if (code == kExitInvariant) {
    return s.Fail(absl::InternalError("hard-case capacity mismatch"));
  }
  return s.Finish(code);
}

// ---- gen-corpus --------------------------------------------------------

struct CorpusArgs {
  CorpusSpec spec;
  std::string pattern, out;
};

int RunGenCorpus(CorpusArgs args, Session& s) {
  if (!args.pattern.empty()) {
    absl::StatusOr<OrderedPattern> h = s.LoadPattern(args.pattern);
    if (!h.ok()) return s.Fail(h.status());
    args.spec.pattern = *h;
  }
  absl::StatusOr<Corpus> corpus = GenerateCorpus(args.spec, s.globals().seed);
  if (!corpus.ok()) return s.Fail(corpus.status());
  s.Digest(corpus->manifest);
  if (absl::Status w = WriteCorpus(*corpus, args.out); !w.ok()) {
    return s.Fail(w);
  }
  s.report()["family"] = args.spec.family;
  s.report()["files"] = corpus->files.size();
  s.report()["out"] = args.out;
  s.Say(absl::StrCat("wrote ", corpus->files.size(), " ", args.spec.family,
                     " graphs to ", args.out));
  return s.Finish(kExitOk);
}

// ---- selftest ----------------------------------------------------------

int RunSelfTestCommand(Session& s) {
  bool ok = true;
  Json list = Json::array();
  for (const SelfTestCheck& c : RunSelfTest(s.globals().seed)) {
    ok = ok && c.pass;
    list.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    s.Say(absl::StrCat(c.pass ? "PASS " : "FAIL ", c.name, ": ", c.detail));
  }
  s.report()["checks"] = list;
  s.report()["verdict"] = ok ? "PASS" : "FAIL";
  return s.Finish(ok ? kExitOk : kExitInvariant);
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Pattern detection, reductions and cycle exponents", "patdet"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--seed", globals.seed, "random seed");
  app.add_flag("--json", globals.json, "machine-readable report");
  app.add_option("--threads", globals.threads, "worker threads")
      ->check(CLI::PositiveNumber);

  DetectArgs detect;
  CLI::App* detect_cmd =
      app.add_subcommand("detect", "induced pattern detection");
  detect_cmd->add_option("--pattern", detect.pattern)->required();
  detect_cmd->add_option("--graph", detect.graph)->required();
  detect_cmd->add_option("--scheme", detect.scheme)
      ->check(CLI::IsMember({"auto", "k6", "hsk"}));
  detect_cmd->add_option("--trials", detect.trials);

  CountArgs count;
  CLI::App* count_cmd =
      app.add_subcommand("count-class", "count tuples inducing a class member");
  count_cmd->add_option("--pattern", count.pattern)->required();
  count_cmd->add_option("--graph", count.graph)->required();
  count_cmd->add_option("--mod", count.modulus);

  ReduceArgs reduce;
  CLI::App* reduce_cmd =
      app.add_subcommand("reduce", "build a hardness gadget");
  reduce_cmd->add_option("--mode", reduce.mode)
      ->required()
      ->check(CLI::IsMember({"clique", "chromatic"}));
  reduce_cmd->add_option("--graph", reduce.graph)->required();
  reduce_cmd->add_option("--pattern", reduce.pattern)->required();
  reduce_cmd->add_option("-t", reduce.t);
  reduce_cmd->add_option("--out", reduce.out);
  reduce_cmd->add_option("--map", reduce.map);
  reduce_cmd->add_flag("--verify", reduce.verify);

  CycleArgs cycle;
  CLI::App* cycle_cmd =
      app.add_subcommand("cycle", "directed k-cycle detection");
  cycle_cmd->add_option("--graph", cycle.graph)->required();
  cycle_cmd->add_option("-k,--k", cycle.k)->required();
  cycle_cmd->add_option("--reps", cycle.reps);
  cycle_cmd->add_flag("--witness", cycle.witness);
  cycle_cmd->add_option("--strategy", cycle.strategy)
      ->check(CLI::IsMember({"auto", "bfs", "matrix"}));
  cycle_cmd->add_option("--omega", cycle.omega);

  ExponentArgs expo;
  CLI::App* expo_cmd =
      app.add_subcommand("exponents", "cycle-detection runtime exponents");
  expo_cmd->add_option("-k,--k", expo.k);
  expo_cmd->add_option("--omega", expo.omega);
  expo_cmd->add_flag("--search", expo.search);
  expo_cmd->add_flag("--closed", expo.closed);
  expo_cmd->add_flag("--hard-cases", expo.hard_cases);
  expo_cmd->add_option("--csv", expo.csv);
  expo_cmd->add_option("--grid", expo.grid)->check(CLI::PositiveNumber);
  expo_cmd->add_option("--final", expo.final_den)->check(CLI::PositiveNumber);
  expo_cmd->add_option("--starts", expo.starts)->check(CLI::PositiveNumber);

  CorpusArgs corpus;
  CLI::App* corpus_cmd = app.add_subcommand("gen-corpus", "synthetic graphs");
  corpus_cmd->add_option("--family", corpus.spec.family)->required();
  corpus_cmd->add_option("--n", corpus.spec.n);
  corpus_cmd->add_option("--p", corpus.spec.p);
  corpus_cmd->add_option("--m", corpus.spec.m);
  corpus_cmd->add_option("-k,--k", corpus.spec.k);
  corpus_cmd->add_option("--count", corpus.spec.count);
  corpus_cmd->add_flag("--directed", corpus.spec.directed);
  corpus_cmd->add_option("--pattern", corpus.pattern);
  corpus_cmd->add_option("--out", corpus.out)->required();

  CLI::App* selftest_cmd = app.add_subcommand("selftest", "invariant suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  Session session(cmd->get_name(), globals, out, err);
  try {
    if (cmd == detect_cmd) return RunDetect(detect, session);
    if (cmd == count_cmd) return RunCountClass(count, session);
    if (cmd == reduce_cmd) return RunReduce(reduce, session);
    if (cmd == cycle_cmd) return RunCycle(cycle, session);
    if (cmd == expo_cmd) return RunExponents(expo, session);
    if (cmd == corpus_cmd) return RunGenCorpus(corpus, session);
    if (cmd == selftest_cmd) return RunSelfTestCommand(session);
  } catch (const std::exception& e) {
    return session.Fail(absl::InternalError(e.what()));
  }
  err << "usage error: unknown command\n";
  return kExitUsage;
}

}  // namespace patdet
