#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "strikeback/guard.hpp"
#include "strikeback/harness/outcome.hpp"
#include "strikeback/hypergraph.hpp"
#include "strikeback/invariants.hpp"
#include "strikeback/oracle.hpp"
#include "strikeback/solver.hpp"

namespace strikeback::harness {

/// Lazily computed quantities of one graph, shared by the checks run on it.
class GraphFacts {
 public:
  explicit GraphFacts(Graph g, SolveOptions options = {}) : graph_(std::move(g)), options_(options) {}

  const Graph& graph() const { return graph_; }
  const SolveOptions& options() const { return options_; }

  int c() { return classic().value; }
  int cc() { return attacking().value; }

  const CopNumberResult& classic() {
    if (!classic_) classic_ = cop_number(graph_, Variant::classic, options_);
    return *classic_;
  }
  const CopNumberResult& attacking() {
    if (!attacking_) attacking_ = cop_number(graph_, Variant::attacking, options_);
    return *attacking_;
  }
  const DominationResult& domination() {
    if (!domination_) domination_ = domination_number(graph_);
    return *domination_;
  }
  int gamma() { return domination().number; }
  const BasicInvariants& basic() {
    if (!basic_) basic_ = invariants_basic(graph_);
    return *basic_;
  }
  int girth() {
    if (!girth_) girth_ = strikeback::girth(graph_);
    return *girth_;
  }

 private:
  Graph graph_;
  SolveOptions options_;
  std::optional<CopNumberResult> classic_;
  std::optional<CopNumberResult> attacking_;
  std::optional<DominationResult> domination_;
  std::optional<BasicInvariants> basic_;
  std::optional<int> girth_;
};

inline nlohmann::json infinite_or(int v) { return v == kInfinite ? nlohmann::json("inf") : nlohmann::json(v); }

inline CheckOutcome make_outcome(std::string check, const Instance& in) {
  CheckOutcome o;
  o.check = std::move(check);
  o.instance = in;
  return o;
}

/// c <= cc <= min(2c, gamma).
inline CheckOutcome check_sandwich(GraphFacts& f, const Instance& in) {
  auto o = make_outcome("sandwich", in);
  const int c = f.c();
  const int cc = f.cc();
  const int gamma = f.gamma();
  const int upper = std::min(2 * c, gamma);
  o.quantities = {{"c", c}, {"cc", cc}, {"gamma", gamma}, {"upper", upper}};
  o.verdict = (c <= cc && cc <= upper) ? Verdict::pass : Verdict::violation;
  if (o.verdict == Verdict::violation)
    o.note = c > cc ? "cc below the classic cop number" : "cc above min(2c, gamma)";
  return o;
}

/// Expected cc of the n-cycle: 1 for n = 3, 2 for 4..6, 3 beyond.
inline int cycle_cc_formula(int n) { return n == 3 ? 1 : n <= 6 ? 2 : 3; }

inline std::vector<CheckOutcome> check_cycle_formula(int n_lo, int n_hi, const SolveOptions& options = {}) {
  if (n_lo < 3 || n_hi < n_lo) throw std::invalid_argument("check_cycle_formula needs 3 <= n_lo <= n_hi");
  std::vector<CheckOutcome> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    const FamilySpec fam{"cycle", n};
    GraphFacts f(generate(fam), options);
    auto o = make_outcome("cycle_formula", Instance::of(fam, f.graph()));
    const int expected = cycle_cc_formula(n);
    o.quantities = {{"n", n}, {"cc", f.cc()}, {"expected", expected}};
    o.verdict = f.cc() == expected ? Verdict::pass : Verdict::violation;
    out.push_back(std::move(o));
  }
  return out;
}

/// Report-only: girth >= 5 should give cc >= min degree + 1.
inline CheckOutcome check_girth_bound(GraphFacts& f, const Instance& in) {
  auto o = make_outcome("girth_bound", in);
  const int g = f.girth();
  const int delta = f.basic().min_degree;
  o.quantities = {{"girth", infinite_or(g)}, {"delta", delta}};
  if (g < 5) {
    o.verdict = Verdict::skipped;
    o.note = "girth below 5";
    return o;
  }
  const int cc = f.cc();
  o.quantities["cc"] = cc;
  o.quantities["gamma"] = f.gamma();
  if (cc >= delta + 1) {
    o.verdict = Verdict::pass;
  } else {
    o.verdict = Verdict::violation;
    o.note = "cc < delta + 1 (report-only)";
  }
  return o;
}

/// cc = 1 iff a universal vertex exists; cop-win without a universal vertex
/// gives cc = 2; not cop-win with gamma = 2 gives cc = 2.
inline CheckOutcome check_cc1_and_cc2(GraphFacts& f, const Instance& in) {
  auto o = make_outcome("cc1_cc2", in);
  const int c = f.c();
  const int cc = f.cc();
  const int gamma = f.gamma();
  const bool universal = has_universal_vertex(f.graph());
  o.quantities = {{"c", c}, {"cc", cc}, {"gamma", gamma}, {"universal", universal}};
  std::vector<std::string> failed;
  if ((cc == 1) != universal) failed.emplace_back("cc=1 iff universal vertex");
  if (c == 1 && !universal && cc != 2) failed.emplace_back("cop-win without universal vertex gives cc=2");
  if (c >= 2 && gamma == 2 && cc != 2) failed.emplace_back("non-cop-win with gamma=2 gives cc=2");
  o.verdict = failed.empty() ? Verdict::pass : Verdict::violation;
  for (const auto& s : failed) o.note += (o.note.empty() ? "" : "; ") + s;
  return o;
}

inline CheckOutcome check_bipartite_bound(GraphFacts& f, const Instance& in) {
  auto o = make_outcome("bipartite_bound", in);
  if (!f.basic().bipartition || !f.basic().is_connected) {
    o.verdict = Verdict::skipped;
    o.note = "not a connected bipartite graph";
    return o;
  }
  const int c = f.c();
  const int cc = f.cc();
  o.quantities = {{"c", c}, {"cc", cc}, {"bound", c + 2}};
  o.verdict = cc <= c + 2 ? Verdict::pass : Verdict::violation;
  return o;
}

/// cc <= c + 2m - 2 on K_{1,m}-free diameter-2 graphs. With no m given the
/// least m >= 3 that applies is used.
inline CheckOutcome check_k1m_diam2(GraphFacts& f, const Instance& in, std::optional<int> m = std::nullopt) {
  auto o = make_outcome("k1m_diam2", in);
  const int diam = f.basic().diameter;
  o.quantities = {{"diameter", infinite_or(diam)}};
  if (diam != 2) {
    o.verdict = Verdict::skipped;
    o.note = "diameter is not 2";
    return o;
  }
  const int use = m.value_or(least_free_star(f.graph()));
  o.quantities["m"] = use;
  if (use < 3 || !is_k1m_free(f.graph(), use)) {
    o.verdict = Verdict::skipped;
    o.note = "not K_{1,m}-free for m=" + std::to_string(use);
    return o;
  }
  const int c = f.c();
  const int cc = f.cc();
  o.quantities["c"] = c;
  o.quantities["cc"] = cc;
  o.quantities["bound"] = c + 2 * use - 2;
  o.verdict = cc <= c + 2 * use - 2 ? Verdict::pass : Verdict::violation;
  return o;
}

/// cc <= 3; the caller vouches that the instance is outerplanar.
inline CheckOutcome check_outerplanar_bound(GraphFacts& f, const Instance& in) {
  auto o = make_outcome("outerplanar_bound", in);
  const int cc = f.cc();
  o.quantities = {{"cc", cc}, {"n", f.graph().order()}, {"edges", f.graph().size()}};
  o.verdict = cc <= 3 ? Verdict::pass : Verdict::violation;
  return o;
}

inline std::vector<CheckOutcome> check_outerplanar(const std::vector<std::pair<Instance, Graph>>& instances,
                                                   const SolveOptions& options = {}) {
  std::vector<CheckOutcome> out;
  for (const auto& [in, g] : instances) {
    GraphFacts f(g, options);
    out.push_back(check_outerplanar_bound(f, in));
  }
  return out;
}

/// Hypotheses of the line-graph lower bound, then cc(L(H)) >= 2k.
inline CheckOutcome check_hyper_lower(const Hypergraph& h, int k, const Instance& in, const SolveOptions& options = {}) {
  auto o = make_outcome("hyper_lower", in);
  const auto props = hyper_properties(h);
  o.quantities = {{"k", k},
                  {"uniform_k", props.uniform_k ? nlohmann::json(*props.uniform_k) : nlohmann::json(nullptr)},
                  {"linear", props.is_linear},
                  {"min_vertex_degree", props.min_vertex_degree},
                  {"berge_girth", infinite_or(props.berge_girth)}};
  std::string failed;
  if (!props.is_linear)
    failed = "not linear";
  else if (props.uniform_k != k)
    failed = "not " + std::to_string(k) + "-uniform";
  else if (props.min_vertex_degree < 3)
    failed = "min vertex degree below 3";
  else if (props.berge_girth < 5)
    failed = "Berge girth below 5";
  if (!failed.empty()) {
    o.verdict = Verdict::skipped;
    o.note = "hypothesis fails: " + failed;
    return o;
  }
  GraphFacts lg(line_graph(h), options);
  const auto& dom = lg.domination();
  o.quantities["line_graph_gamma"] = dom.number;
  o.quantities["line_graph_gamma_witness"] = dom.witness;
  o.quantities["line_graph_cc"] = lg.cc();
  o.quantities["line_graph_c"] = lg.c();
  if (dom.number < 2 * k) {
    o.verdict = Verdict::skipped;
    o.note = "hypothesis fails: gamma(L(H)) = " + std::to_string(dom.number) + " < 2k = " + std::to_string(2 * k);
    return o;
  }
  o.verdict = lg.cc() >= 2 * k ? Verdict::pass : Verdict::violation;
  return o;
}

/// A single numeric claim about a named graph.
inline CheckOutcome check_claim(std::string id, const Instance& in, const std::string& quantity, int expected,
                                int computed) {
  auto o = make_outcome(std::move(id), in);
  o.quantities = {{quantity, computed}, {"expected", expected}};
  o.verdict = computed == expected ? Verdict::pass : Verdict::violation;
  if (o.verdict == Verdict::violation)
    o.note = quantity + " = " + std::to_string(computed) + ", claimed " + std::to_string(expected);
  return o;
}

/// Every pair's canonical shortest path is `guards`-guardable.
inline CheckOutcome check_guard_paths(GraphFacts& f, const Instance& in, int guards = 2,
                                      Variant variant = Variant::attacking) {
  auto o = make_outcome(variant == Variant::attacking ? "guard_paths" : "guard_paths_classic", in);
  const Graph& g = f.graph();
  int checked = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const auto path = isometric_shortest_path(g, u, v);
      ++checked;
      const auto verdict = solve_guard_game({g, path, guards, variant});
      if (!verdict.guardable) {
        o.quantities = {{"guards", guards}, {"paths_checked", checked}, {"path", path}, {"robber_start", *verdict.robber_start}};
        o.verdict = Verdict::violation;
        o.note = "path not guardable";
        return o;
      }
    }
  o.quantities = {{"guards", guards}, {"paths_checked", checked}};
  o.verdict = Verdict::pass;
  return o;
}

struct GuardWitness {
  Graph graph;
  std::vector<Vertex> path;
  Vertex robber_start;
};

/// First (graph, canonical shortest path) that one guard cannot hold under
/// attacking rules while two can.
inline std::optional<GuardWitness> find_guard_witness(const std::vector<Graph>& graphs) {
  for (const auto& g : graphs)
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v) {
        const auto path = isometric_shortest_path(g, u, v);
        const auto one = solve_guard_game({g, path, 1, Variant::attacking});
        if (!one.guardable && guardable({g, path, 2, Variant::attacking})) return GuardWitness{g, path, *one.robber_start};
      }
  return std::nullopt;
}

/// Attractor solver and minimax oracle agree for k in {1,2}, both variants.
inline CheckOutcome check_oracle_equivalence(GraphFacts& f, const Instance& in) {
  auto o = make_outcome("oracle_equivalence", in);
  int compared = 0;
  for (int k = 1; k <= 2; ++k)
    for (Variant v : {Variant::classic, Variant::attacking}) {
      const bool solver = solve_k(f.graph(), {v, k}, f.options()).cops_win();
      const bool oracle = minimax_oracle(f.graph(), {v, k});
      ++compared;
      if (solver != oracle) {
        o.verdict = Verdict::violation;
        o.note = std::string("disagreement at k=") + std::to_string(k) + " " + to_string(v);
        o.quantities = {{"compared", compared}, {"solver", solver}, {"oracle", oracle}};
        return o;
      }
    }
  o.quantities = {{"compared", compared}};
  o.verdict = Verdict::pass;
  return o;
}

}  // namespace strikeback::harness
