// strikeback: solve, inspect and verify Cops and (attacking) Robbers games.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "strikeback/export.hpp"
#include "strikeback/family.hpp"
#include "strikeback/graph6.hpp"
#include "strikeback/harness/suites.hpp"
#include "strikeback/hypergraph.hpp"
#include "strikeback/invariants.hpp"
#include "strikeback/play.hpp"
#include "strikeback/solver.hpp"

namespace {

using namespace strikeback;
using nlohmann::json;

enum Exit { kOk = 0, kViolation = 1, kBadInput = 2, kBudget = 3, kIllegalScript = 4 };

struct Input {
  std::string graph6;
  std::string file;
  std::string hypergraph;
  std::string family;
  int n = 0;
  int a = 0;
  int b = 0;
  double p = 0.5;
  std::uint64_t seed = 0;

  void attach(CLI::App* cmd) {
    auto* g6 = cmd->add_option("--graph6", graph6, "Graph in graph6 format");
    auto* f = cmd->add_option("--file", file, "Edge-list file ('n m' then one 'u v' per line)");
    auto* h = cmd->add_option("--hypergraph", hypergraph, "Hypergraph file; its line graph is used for games");
    auto* fam = cmd->add_option("--family", family, "Named family")->check(CLI::IsMember(family_names()));
    g6->excludes(f, h, fam);
    f->excludes(h, fam);
    h->excludes(fam);
    add_family_params(cmd);
  }

  void add_family_params(CLI::App* cmd) {
    cmd->add_option("--n", n, "Order (or star leaves) for sized families");
    cmd->add_option("--a", a, "First side for bipartite families");
    cmd->add_option("--b", b, "Second side for bipartite families");
    cmd->add_option("--p", p, "Edge probability for random families")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--seed", seed, "Seed for random families (default 0)");
  }

  FamilySpec spec() const { return {family, n, a, b, p}; }

  std::optional<Hypergraph> load_hypergraph() const {
    if (hypergraph.empty()) return std::nullopt;
    std::ifstream in(hypergraph);
    if (!in) throw GraphError("cannot open '" + hypergraph + "'");
    return read_hypergraph(in);
  }

  Graph load() const {
    if (!graph6.empty()) return parse_graph6(graph6);
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw GraphError("cannot open '" + file + "'");
      return read_edge_list(in);
    }
    if (auto h = load_hypergraph()) return line_graph(*h);
    if (!family.empty()) return generate(spec(), seed);
    throw GraphError("no input: give one of --graph6, --file, --hypergraph, --family");
  }
};

Variant parse_variant(const std::string& s) { return s == "classic" ? Variant::classic : Variant::attacking; }

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i]);
  return s;
}

// --- solve ---------------------------------------------------------------

struct SolveCmd {
  Input input;
  std::string variant = "attacking";
  std::optional<int> k;
  std::string strategy;
  bool as_json = false;
  bool timing = false;

  int run() const {
    const Graph g = input.load();
    const Variant v = parse_variant(variant);
    const SolveOptions opts{budget_from_env()};
    const char* symbol = v == Variant::classic ? "c" : "cc";
    json out{{"graph6", to_graph6(g)}, {"variant", to_string(v)}};
    std::optional<SolveResult> solved;
    if (k) {
      solved = solve_k(g, Ruleset{v, *k}, opts);
      out["k"] = *k;
      out["winner"] = solved->cops_win() ? "cops" : "robber";
    } else {
      auto r = cop_number(g, v, opts);
      out[symbol] = r.value;
      solved = r.result;
    }
    out["initial"] = to_json(solved->initial());
    out["metrics"] = to_json(solved->metrics(), timing);

    if (!strategy.empty()) {
      std::ofstream file(strategy);
      if (!file) throw GraphError("cannot write '" + strategy + "'");
      file << strategy_json(*solved).dump() << '\n';
    }
    if (as_json) {
      print(out);
      return kOk;
    }
    const auto& init = solved->initial();
    if (k)
      std::cout << (solved->cops_win() ? "cops win" : "robber wins") << " with " << *k << " cop(s), "
                << to_string(v) << " rules\n";
    else
      std::cout << symbol << " = " << out[symbol].get<int>() << '\n';
    std::cout << "cops start on: " << join(init.cops) << '\n';
    if (init.robber) std::cout << "robber replies: " << *init.robber << '\n';
    if (init.rank) std::cout << "plies to capture: " << *init.rank << '\n';
    const auto& m = solved->metrics();
    std::cout << "states: " << m.states << " (live " << m.live_states << "), transitions: " << m.transitions << '\n';
    if (timing) std::cout << "elapsed: " << m.elapsed_ms << " ms\n";
    return kOk;
  }
};

// --- verify --------------------------------------------------------------

struct VerifyCmd {
  std::vector<std::string> suites{"all"};
  std::uint64_t seed = 0;
  int jobs = harness::default_jobs();
  bool as_json = false;
  bool timing = false;

  int run() const {
    std::vector<std::string> selected;
    for (const auto& s : suites) {
      if (s == "all")
        selected.insert(selected.end(), harness::suite_names().begin(), harness::suite_names().end());
      else
        selected.push_back(s);
    }
    harness::SuiteOptions opt;
    opt.seed = seed;
    opt.jobs = jobs;
    opt.solve.transition_budget = budget_from_env();
    const auto rep = harness::run_verify(selected, opt);
    if (as_json) {
      print(harness::to_json(rep, timing));
    } else {
      for (const auto& s : rep.suites) {
        std::cout << "== " << s.name << '\n';
        for (const auto& o : s.outcomes) {
          std::cout << harness::to_string(o.verdict) << "  " << o.check << "  " << o.instance.family;
          if (!o.instance.params.empty()) std::cout << ' ' << o.instance.params.dump();
          if (o.instance.seed) std::cout << " seed=" << *o.instance.seed;
          std::cout << "  " << o.instance.graph6 << "  " << o.quantities.dump();
          if (!o.note.empty()) std::cout << "  (" << o.note << ')';
          std::cout << '\n';
        }
        std::cout << "-- " << s.tally.pass << " pass, " << s.tally.violation << " violation, " << s.tally.skipped
                  << " skipped, " << s.tally.discrepancies << " discrepancies";
        if (timing) std::cout << ", " << s.elapsed_ms << " ms";
        std::cout << '\n';
      }
      std::cout << "total: " << rep.tally.pass << " pass, " << rep.tally.violation << " violation, "
                << rep.tally.skipped << " skipped, " << rep.tally.discrepancies << " discrepancies\n";
    }
    return rep.has_violations() ? kViolation : kOk;
  }
};

// --- generate / invariants -------------------------------------------------

struct GenerateCmd {
  Input input;
  int count = 1;
  std::string format = "graph6";

  int run() const {
    for (int i = 0; i < count; ++i) {
      const auto seed = count == 1 ? input.seed : instance_seed(input.seed, static_cast<std::uint64_t>(i));
      const Graph g = generate(input.spec(), seed);
      if (format == "graph6")
        std::cout << to_graph6(g) << '\n';
      else
        write_edge_list(std::cout, g);
    }
    return kOk;
  }
};

struct InvariantsCmd {
  Input input;
  bool as_json = false;

  int run() const {
    const Graph g = input.load();
    const auto basic = invariants_basic(g);
    json j{{"graph6", to_graph6(g)},
           {"order", g.order()},
           {"size", g.size()},
           {"min_degree", basic.min_degree},
           {"max_degree", basic.max_degree},
           {"connected", basic.is_connected},
           {"diameter", harness::infinite_or(basic.diameter)},
           {"girth", harness::infinite_or(girth(g))},
           {"bipartite", basic.bipartition.has_value()},
           {"least_free_star", least_free_star(g)},
           {"claw_free", is_k1m_free(g, 3)}};
    if (g.order() <= kDominationMaxOrder) {
      const auto d = domination_number(g);
      j["domination_number"] = d.number;
      j["dominating_set"] = d.witness;
    } else {
      j["domination_number"] = nullptr;
    }
    if (auto h = input.load_hypergraph()) {
      const auto hp = hyper_properties(*h);
      j["hypergraph"] = {{"order", h->order()},
                         {"edges", h->edge_count()},
                         {"uniform", hp.uniform_k ? json(*hp.uniform_k) : json(nullptr)},
                         {"linear", hp.is_linear},
                         {"min_vertex_degree", hp.min_vertex_degree},
                         {"berge_girth", harness::infinite_or(hp.berge_girth)}};
    }
    if (as_json) {
      print(j);
      return kOk;
    }
    const auto text = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    for (const auto& key : {"graph6", "order", "size", "min_degree", "max_degree", "connected", "diameter", "girth",
                            "bipartite", "least_free_star", "claw_free", "domination_number"})
      std::cout << key << ": " << text(j[key]) << '\n';
    if (j.contains("hypergraph"))
      for (const auto& [key, v] : j["hypergraph"].items()) std::cout << "hypergraph." << key << ": " << text(v) << '\n';
    return kOk;
  }
};

// --- play ----------------------------------------------------------------

struct PlayCmd {
  Input input;
  std::string variant = "attacking";
  std::optional<int> k;
  std::string human = "robber";
  std::string script;

  int run() const {
    const Graph g = input.load();
    const Variant v = parse_variant(variant);
    const SolveOptions opts{budget_from_env()};
    const SolveResult solved = k ? solve_k(g, Ruleset{v, *k}, opts) : cop_number(g, v, opts).result;
    PlayOptions po;
    po.human = human == "cops" ? Side::cops : Side::robber;
    PlayEnd end;
    if (script.empty()) {
      end = play_session(solved, std::cin, std::cout, po);
    } else {
      std::ifstream in(script);
      if (!in) throw GraphError("cannot open '" + script + "'");
      po.scripted = true;
      end = play_session(solved, in, std::cout, po);
    }
    return end == PlayEnd::illegal_script ? kIllegalScript : kOk;
  }
};

// --- corpus --------------------------------------------------------------

struct CorpusCmd {
  Input input;
  int count = 10;
  std::vector<std::string> checks{"sandwich"};
  int jobs = harness::default_jobs();
  bool as_json = false;
  bool timing = false;

  int run() const {
    for (const auto& c : checks) harness::find_check(c);
    SolveOptions opts{budget_from_env()};
    const auto rep = harness::run_corpus({input.spec(), count, input.seed}, checks, opts, jobs);
    if (as_json) {
      print(harness::to_json(rep, timing));
    } else {
      for (const auto& o : rep.outcomes)
        std::cout << harness::to_string(o.verdict) << "  " << o.check << "  seed=" << o.instance.seed.value_or(0)
                  << "  " << o.instance.graph6 << "  " << o.quantities.dump() << '\n';
      std::cout << "total: " << rep.tally.pass << " pass, " << rep.tally.violation << " violation, "
                << rep.tally.skipped << " skipped, " << rep.tally.discrepancies << " discrepancies\n";
      for (const auto& [ratio, n] : rep.ratios) std::cout << "cc/c = " << ratio << ": " << n << '\n';
    }
    return rep.tally.violation > 0 ? kViolation : kOk;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cops and Robbers solver with attacking robbers"};
  app.require_subcommand(1);
  const std::vector<std::string> variants{"classic", "attacking"};

  SolveCmd solve;
  auto* s = app.add_subcommand("solve", "Solve a game, or find the least winning number of cops");
  solve.input.attach(s);
  s->add_option("--variant", solve.variant, "classic or attacking")->check(CLI::IsMember(variants));
  s->add_option("--k", solve.k, "Number of cops; omit to search for the cop number")->check(CLI::PositiveNumber);
  s->add_option("--strategy", solve.strategy, "Write the strategy table as JSON to this file");
  s->add_flag("--json", solve.as_json, "Machine-readable output");
  s->add_flag("--timing", solve.timing, "Include timings");

  VerifyCmd verify;
  auto* v = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suite_choices = harness::suite_names();
  suite_choices.push_back("all");
  v->add_option("--suite", verify.suites, "Suite name (repeatable; default all)")
      ->check(CLI::IsMember(suite_choices))
      ->take_all();
  v->add_option("--seed", verify.seed, "Base seed (default 0)");
  v->add_option("--jobs", verify.jobs, "Worker threads")->check(CLI::PositiveNumber);
  v->add_flag("--json", verify.as_json, "Machine-readable output");
  v->add_flag("--timing", verify.timing, "Include timings (output is then not reproducible)");

  GenerateCmd gen;
  auto* g = app.add_subcommand("generate", "Emit family members");
  g->add_option("--family", gen.input.family, "Named family")->required()->check(CLI::IsMember(family_names()));
  gen.input.add_family_params(g);
  g->add_option("--count", gen.count, "Number of graphs; member i uses a seed derived from --seed and i")
      ->check(CLI::PositiveNumber);
  g->add_option("--format", gen.format, "graph6 or edge-list")->check(CLI::IsMember({"graph6", "edge-list"}));

  InvariantsCmd inv;
  auto* i = app.add_subcommand("invariants", "Print structural invariants");
  inv.input.attach(i);
  i->add_flag("--json", inv.as_json, "Machine-readable output");

  PlayCmd play;
  auto* p = app.add_subcommand("play", "Play against the optimal strategy");
  play.input.attach(p);
  p->add_option("--variant", play.variant, "classic or attacking")->check(CLI::IsMember(variants));
  p->add_option("--k", play.k, "Number of cops (default: the least winning number)")->check(CLI::PositiveNumber);
  p->add_option("--human", play.human, "Side you play")->check(CLI::IsMember({"robber", "cops"}));
  p->add_option("--script", play.script, "Read moves from a file, one per line");

  CorpusCmd corpus;
  auto* c = app.add_subcommand("corpus", "Run checks over a seeded family corpus");
  c->add_option("--family", corpus.input.family, "Named family")->required()->check(CLI::IsMember(family_names()));
  corpus.input.add_family_params(c);
  c->add_option("--count", corpus.count, "Corpus size")->check(CLI::NonNegativeNumber);
  c->add_option("--check", corpus.checks, "Check name (repeatable)")->take_all();
  c->add_option("--jobs", corpus.jobs, "Worker threads")->check(CLI::PositiveNumber);
  c->add_flag("--json", corpus.as_json, "Machine-readable output");
  c->add_flag("--timing", corpus.timing, "Include timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (s->parsed()) return solve.run();
    if (v->parsed()) return verify.run();
    if (g->parsed()) return gen.run();
    if (i->parsed()) return inv.run();
    if (p->parsed()) return play.run();
    if (c->parsed()) return corpus.run();
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kOk;
}
