// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "strikeback/harness/suites.hpp"

using namespace strikeback;
using namespace strikeback::harness;

namespace {

struct Result {
  bool ok = false;
  std::string detail;
};

constexpr std::uint64_t kSeed = 42;

int count_verdict(const std::vector<CheckOutcome>& out, Verdict v) {
  int n = 0;
  for (const auto& o : out) n += o.verdict == v;
  return n;
}

std::string tally(const std::vector<CheckOutcome>& out) {
  std::ostringstream s;
  s << out.size() << " checked, " << count_verdict(out, Verdict::violation) << " violations, "
    << count_verdict(out, Verdict::skipped) << " skipped";
  return s.str();
}

Result cycle_formula() {
  const int expected[] = {1, 2, 2, 2, 3, 3, 3, 3, 3, 3};
  std::string got;
  bool ok = true;
  for (int n = 3; n <= 12; ++n) {
    const int cc = cop_number(cycle_graph(n), Variant::attacking).value;
    got += (n > 3 ? "," : "") + std::to_string(cc);
    ok = ok && cc == expected[n - 3];
  }
  return {ok, "cc(C_3..C_12) = " + got};
}

Result petersen() {
  const int c = cop_number(petersen_graph(), Variant::classic).value;
  return {c == 3, "c = " + std::to_string(c)};
}

Result line_petersen() {
  const Graph l = generate({"petersen-line"});
  const int c = cop_number(l, Variant::classic).value;
  const int cc = cop_number(l, Variant::attacking).value;
  const auto four = solve_k(l, {Variant::attacking, 4});
  std::ostringstream s;
  s << "c = " << c << " (want 2), cc = " << cc << " (want 4); k=4 attacking solve: "
    << (four.cops_win() ? "cops win" : "robber wins") << ", " << four.metrics().states << " states";
  return {c == 2 && cc == 4, s.str()};
}

Result hyper_lower() {
  const auto o = check_hyper_lower(hypergraph_from_graph(petersen_graph()), 2, Instance::literal(petersen_graph()));
  const auto& q = o.quantities;
  const bool gamma_ok = q.contains("line_graph_gamma") && q["line_graph_gamma"].get<int>() >= 4;
  const bool cc_ok = q.contains("line_graph_cc") && q["line_graph_cc"].get<int>() >= 4;
  return {o.verdict == Verdict::pass && gamma_ok && cc_ok,
          std::string(to_string(o.verdict)) + ": " + q.dump() + (o.note.empty() ? "" : " (" + o.note + ")")};
}

Result over(const std::vector<CorpusInstance>& corpus, const std::vector<std::string>& checks, std::size_t min_size = 1) {
  const auto out = run_checks(corpus, checks, {}, default_jobs());
  const bool ok = corpus.size() >= min_size && count_verdict(out, Verdict::violation) == 0 &&
                  count_verdict(out, Verdict::skipped) == 0;
  return {ok, tally(out)};
}

Result sandwich() { return over(sandwich_corpus(kSeed), {"sandwich"}); }

Result characterization() { return over(harness::detail::all_connected(6), {"cc1_cc2"}); }

Result bipartite() {
  auto corpus = bipartite_corpus(kSeed);
  harness::detail::append(corpus, bipartite_named());
  return over(corpus, {"bipartite_bound"});
}

Result shadow() {
  const auto corpus = shadow_corpus(kSeed);
  const auto out = run_checks(corpus, {"shadow_strategy"}, {}, default_jobs());
  long attacks = 0, inv = 0, states = 0;
  bool cycles = false;
  for (const auto& o : out) {
    if (o.verdict == Verdict::skipped) continue;
    const auto& q = o.quantities;
    attacks += q["attack_opportunities"].get<long>();
    inv += q["invariant1_violations"].get<long>() + q["invariant2_violations"].get<long>() +
           q["invariant3_violations"].get<long>();
    states += q["states"].get<long>();
    cycles = cycles || q["escape_cycle"].get<bool>();
  }
  bool small = true;
  for (const auto& ci : corpus) small = small && ci.graph.order() <= 8;
  const bool ok = corpus.size() >= 20 && small && count_verdict(out, Verdict::pass) == static_cast<int>(out.size());
  std::ostringstream s;
  s << out.size() << " instances, " << states << " states, " << attacks << " attack opportunities, " << inv
    << " invariant violations, escape cycle: " << (cycles ? "yes" : "no");
  return {ok && attacks == 0 && inv == 0 && !cycles, s.str()};
}

Result claw_free() {
  auto corpus = claw_free_diameter2_corpus();
  const Graph l = generate({"petersen-line"});
  const bool lp_included = invariants_basic(l).diameter == 2;
  if (lp_included) corpus.push_back({Instance::literal(l, "petersen-line"), l});
  auto r = over(corpus, {"k1m_diam2"});
  r.detail += lp_included ? " (line graph of Petersen included)" : " (line graph of Petersen has diameter 3, excluded)";
  return r;
}

Result outerplanar() {
  const auto corpus = outerplanar_corpus(kSeed);
  bool ok = corpus.size() == 50;
  for (const auto& ci : corpus) ok = ok && ci.graph.order() <= 12;
  auto r = over(corpus, {"outerplanar_bound"});
  return {ok && r.ok, r.detail};
}

Result guards() {
  const auto corpus = guard_corpus(kSeed);
  auto r = over(corpus, {"guard_paths"});
  bool small = corpus.size() == 30;
  for (const auto& ci : corpus) small = small && ci.graph.order() <= 9;
  const auto w = guard_witness_outcome(corpus);
  return {r.ok && small && w.verdict == Verdict::pass,
          r.detail + "; witness " + w.instance.graph6 + " " + w.quantities.dump()};
}

Result girth_report() {
  const auto out = run_checks(girth_probe_corpus(), {"girth_bound"}, {}, default_jobs());
  bool ok = true;
  std::string got;
  for (const auto& o : out) {
    const std::string name = o.instance.family == "cycle" ? "C_" + o.instance.params["n"].dump() : o.instance.family;
    got += name + ":" + to_string(o.verdict) + " ";
    if (o.instance.family == "cycle") {
      const int n = o.instance.params["n"].get<int>();
      if (n == 5) ok = ok && o.verdict == Verdict::violation;
      if (n >= 7) ok = ok && o.verdict == Verdict::pass;
    } else {
      ok = ok && o.verdict != Verdict::skipped && o.quantities.contains("cc");
    }
  }
  return {ok && out.size() == 9, got};
}

Result oracle() { return over(harness::detail::all_connected(5), {"oracle_equivalence"}); }

Result determinism() {
  auto run = [] {
    FILE* p = ::popen(STRIKEBACK_CLI " verify --suite all --seed 42 --json 2>/dev/null", "r");
    std::string out;
    char buf[4096];
    for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, got);
    ::pclose(p);
    return out;
  };
  const auto a = run();
  const auto b = run();
  return {!a.empty() && a == b, std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"cycle formula", cycle_formula},
      {"Petersen cop number", petersen},
      {"line graph of Petersen", line_petersen},
      {"line-graph lower bound on Petersen", hyper_lower},
      {"sandwich bound", sandwich},
      {"cc=1 and cc=2 characterisations", characterization},
      {"bipartite bound", bipartite},
      {"shadow strategy mechanics", shadow},
      {"claw-free diameter-2 bound", claw_free},
      {"outerplanar bound", outerplanar},
      {"isometric path guarding", guards},
      {"girth discrepancy report", girth_report},
      {"solver vs minimax oracle", oracle},
      {"verify report determinism", determinism},
  };
  // Runtime ceilings in seconds, where a criterion states one.
  const double limits[] = {30, 60, 600, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limits[i] > 0 && secs > limits[i]) {
      r.ok = false;
      r.detail += " [over time limit]";
    }
    failed += !r.ok;
    std::printf("[%s] %2zu %s: %s (%.2fs)\n", r.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                r.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
