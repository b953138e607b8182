#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "strikeback/harness/corpus.hpp"

namespace strikeback::harness {

struct SuiteOptions {
  std::uint64_t seed = 42;
  int jobs = 1;
  SolveOptions solve;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckOutcome> outcomes;
  Tally tally;
  double elapsed_ms = 0.0;
};

namespace detail {

inline CorpusInstance enumerated(const Graph& g, int index) {
  return {Instance::literal(g, "enumerated", {{"n", g.order()}, {"index", index}}), g};
}

/// All connected graphs on 1..max_n vertices, one per isomorphism class.
inline std::vector<CorpusInstance> all_connected(int max_n) {
  std::vector<CorpusInstance> out;
  for (int n = 1; n <= max_n; ++n) {
    int i = 0;
    for (auto& g : enumerate_connected(n)) out.push_back(enumerated(g, i++));
  }
  return out;
}

inline CorpusInstance named(const FamilySpec& f, std::uint64_t seed = 0) {
  Graph g = generate(f, seed);
  return {Instance::of(f, g, seed), std::move(g)};
}

inline void append(std::vector<CorpusInstance>& to, std::vector<CorpusInstance> more) {
  to.insert(to.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

}  // namespace detail

// Corpora shared by the suites and the acceptance tests.

inline std::vector<CorpusInstance> sandwich_corpus(std::uint64_t seed) {
  auto out = detail::all_connected(6);
  detail::append(out, generate_corpus({{"connected-gnp", 8, 0, 0, 0.5}, 200, seed}));
  return out;
}

/// 100 random connected bipartite graphs with parts of 2..5 vertices.
inline std::vector<CorpusInstance> bipartite_corpus(std::uint64_t seed, int count = 100) {
  std::vector<CorpusInstance> out;
  for (int i = 0; i < count; ++i) {
    const FamilySpec f{"bipartite", 0, 2 + i % 4, 2 + (i / 4) % 4, 0.45};
    out.push_back(detail::named(f, instance_seed(seed, static_cast<std::uint64_t>(i))));
  }
  return out;
}

inline std::vector<CorpusInstance> bipartite_named() {
  std::vector<CorpusInstance> out;
  for (int n = 4; n <= 12; n += 2) out.push_back(detail::named({"cycle", n}));
  for (int n = 2; n <= 9; ++n) out.push_back(detail::named({"path", n}));
  return out;
}

/// Bipartite graphs on at most 8 vertices for the shadow-strategy run.
inline std::vector<CorpusInstance> shadow_corpus(std::uint64_t seed, int count = 24) {
  std::vector<CorpusInstance> out{detail::named({"cycle", 6}), detail::named({"path", 5}), detail::named({"cycle", 8}),
                                  detail::named({"complete-bipartite", 0, 3, 3})};
  for (int i = 0; i < count; ++i) {
    const FamilySpec f{"bipartite", 0, 2 + i % 3, 2 + (i / 3) % 3, 0.45};
    out.push_back(detail::named(f, instance_seed(seed ^ 0x5ad0, static_cast<std::uint64_t>(i))));
  }
  return out;
}

/// Connected diameter-2 claw-free graphs on at most 7 vertices.
inline std::vector<CorpusInstance> claw_free_diameter2_corpus() {
  std::vector<CorpusInstance> out;
  for (auto& ci : detail::all_connected(7)) {
    if (ci.graph.order() < 3) continue;
    if (invariants_basic(ci.graph).diameter == 2 && is_k1m_free(ci.graph, 3)) out.push_back(std::move(ci));
  }
  return out;
}

inline std::vector<CorpusInstance> outerplanar_corpus(std::uint64_t seed, int count = 50) {
  std::vector<CorpusInstance> out;
  for (int i = 0; i < count; ++i)
    out.push_back(detail::named({"maximal-outerplanar", 3 + i % 10}, instance_seed(seed ^ 0x0e7e, static_cast<std::uint64_t>(i))));
  return out;
}

inline std::vector<CorpusInstance> guard_corpus(std::uint64_t seed, int count = 30) {
  std::vector<CorpusInstance> out;
  for (int i = 0; i < count; ++i)
    out.push_back(detail::named({"connected-gnp", 5 + i % 5, 0, 0, 0.4}, instance_seed(seed ^ 0x9a4d, static_cast<std::uint64_t>(i))));
  return out;
}

inline std::vector<CorpusInstance> girth_probe_corpus() {
  std::vector<CorpusInstance> out;
  for (int n = 5; n <= 12; ++n) out.push_back(detail::named({"cycle", n}));
  out.push_back(detail::named({"petersen"}));
  return out;
}

/// Searches the corpus first, then all small connected graphs.
inline CheckOutcome guard_witness_outcome(const std::vector<CorpusInstance>& corpus) {
  std::vector<Graph> graphs;
  for (const auto& ci : corpus) graphs.push_back(ci.graph);
  auto w = find_guard_witness(graphs);
  std::string source = "corpus";
  if (!w) {
    w = find_guard_witness(enumerate_connected_up_to(6));
    source = "enumeration";
  }
  CheckOutcome o;
  o.check = "guard_witness";
  if (!w) {
    o.instance = Instance::literal(Graph(1), "none");
    o.verdict = Verdict::violation;
    o.note = "no path found that two guards hold and one cannot";
    return o;
  }
  o.instance = Instance::literal(w->graph, "witness", {{"source", source}});
  o.quantities = {{"path", w->path}, {"robber_start", w->robber_start}, {"one_guard", false}, {"two_guards", true}};
  o.verdict = Verdict::pass;
  o.note = "isometric path held by two guards but not by one (attacking rules)";
  return o;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cycles",  "petersen",    "petersen-line", "sandwich",
                                              "characterization", "bipartite", "shadow", "claw-free",
                                              "outerplanar", "guard", "girth", "oracle"};
  return names;
}

inline SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r{name, {}, {}, 0.0};
  auto& out = r.outcomes;
  auto run = [&](const std::vector<CorpusInstance>& instances, const std::vector<std::string>& checks) {
    auto res = run_checks(instances, checks, opt.solve, opt.jobs);
    out.insert(out.end(), res.begin(), res.end());
  };

  if (name == "cycles") {
    out = check_cycle_formula(3, 12, opt.solve);
  } else if (name == "petersen") {
    const auto p = detail::named({"petersen"});
    GraphFacts f(p.graph, opt.solve);
    out.push_back(check_claim("claim_petersen_c", p.instance, "c", 3, f.c()));
    out.push_back(check_sandwich(f, p.instance));
  } else if (name == "petersen-line") {
    const auto l = detail::named({"petersen-line"});
    GraphFacts f(l.graph, opt.solve);
    out.push_back(check_claim("claim_line_petersen_c", l.instance, "c", 2, f.c()));
    out.push_back(check_claim("claim_line_petersen_cc", l.instance, "cc", 4, f.cc()));
    const auto h = hypergraph_from_graph(petersen_graph());
    out.push_back(check_hyper_lower(h, 2, Instance::literal(petersen_graph(), "petersen-hypergraph"), opt.solve));
    out.push_back(check_sandwich(f, l.instance));
    out.push_back(check_k1m_diam2(f, l.instance, 3));
  } else if (name == "sandwich") {
    run(sandwich_corpus(opt.seed), {"sandwich"});
  } else if (name == "characterization") {
    run(detail::all_connected(6), {"cc1_cc2"});
  } else if (name == "bipartite") {
    auto instances = bipartite_corpus(opt.seed);
    detail::append(instances, bipartite_named());
    run(instances, {"bipartite_bound"});
  } else if (name == "shadow") {
    run(shadow_corpus(opt.seed), {"shadow_strategy"});
  } else if (name == "claw-free") {
    run(claw_free_diameter2_corpus(), {"k1m_diam2"});
    run({detail::named({"petersen-line"})}, {"k1m_diam2"});
  } else if (name == "outerplanar") {
    auto instances = outerplanar_corpus(opt.seed);
    instances.push_back(detail::named({"cycle", 9}));
    instances.push_back(detail::named({"fan", 8}));
    run(instances, {"outerplanar_bound"});
  } else if (name == "guard") {
    const auto instances = guard_corpus(opt.seed);
    run(instances, {"guard_paths", "guard_paths_classic"});
    out.push_back(guard_witness_outcome(instances));
  } else if (name == "girth") {
    run(girth_probe_corpus(), {"girth_bound"});
  } else if (name == "oracle") {
    run(detail::all_connected(5), {"oracle_equivalence"});
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  for (const auto& o : out) r.tally.add(o);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;
  Tally tally;

  bool has_violations() const { return tally.violation > 0; }
};

inline VerifyReport run_verify(const std::vector<std::string>& suites, const SuiteOptions& opt) {
  VerifyReport rep;
  rep.seed = opt.seed;
  for (const auto& name : suites) {
    rep.suites.push_back(run_suite(name, opt));
    for (const auto& o : rep.suites.back().outcomes) rep.tally.add(o);
  }
  return rep;
}

inline nlohmann::json tally_json(const Tally& t) {
  return {{"pass", t.pass}, {"violation", t.violation}, {"skipped", t.skipped}, {"discrepancies", t.discrepancies}};
}

/// Report-only violations are listed apart under "discrepancies".
inline nlohmann::json to_json(const VerifyReport& rep, bool with_timing) {
  nlohmann::json suites = nlohmann::json::array();
  nlohmann::json discrepancies = nlohmann::json::array();
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& s : rep.suites) {
    nlohmann::json js{{"suite", s.name}, {"outcomes", s.outcomes}, {"summary", tally_json(s.tally)}};
    js["ratio_histogram"] = ratio_histogram(s.outcomes);
    if (with_timing) js["elapsed_ms"] = s.elapsed_ms;
    suites.push_back(std::move(js));
    for (const auto& o : s.outcomes)
      if (o.verdict == Verdict::violation) (is_report_only(o.check) ? discrepancies : violations).push_back(o);
  }
  return {{"seed", rep.seed},
          {"suites", suites},
          {"summary", tally_json(rep.tally)},
          {"violations", violations},
          {"discrepancies", discrepancies}};
}

}  // namespace strikeback::harness
