#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strikeback/harness/checks.hpp"
#include "strikeback/invariants.hpp"
#include "strikeback/solver.hpp"

namespace strikeback::harness {

// Exhaustive check of the k+2 cop strategy for bipartite graphs: k real
// cops each trail a "shadow" playing an optimal classic strategy, and a
// co-located pair of extra cops walks toward the robber every round.

/// One round of a play, positions after the cops' move.
struct ShadowRound {
  std::vector<Vertex> shadows;
  std::vector<Vertex> cops;
  Vertex pair = 0;
  Vertex robber = 0;  // robber position the cops just answered
  bool robber_passed = false;
  bool inv1 = true;
  bool inv2 = true;
  bool inv3 = true;
};

struct ShadowTrace {
  std::vector<ShadowRound> rounds;
};

struct ShadowReport {
  CheckOutcome outcome;
  std::optional<ShadowTrace> trace;  // set on failure
};

inline constexpr std::size_t kShadowMaxStates = 2'000'000;

namespace detail {

struct ShadowKey {
  std::vector<Vertex> shadows;
  std::vector<Vertex> cops;
  Vertex pair;
  Vertex robber;
  auto operator<=>(const ShadowKey&) const = default;
};

/// Relabels the multiset `next` onto shadows so that shadow i moves within
/// N[shadows[i]]; first valid assignment in lexicographic order.
inline std::optional<std::vector<Vertex>> label_move(const Graph& g, const std::vector<Vertex>& shadows,
                                                     std::vector<Vertex> next) {
  std::sort(next.begin(), next.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < next.size() && ok; ++i) ok = g.in_closed_nbhd(shadows[i], next[i]);
    if (ok) return next;
  } while (std::next_permutation(next.begin(), next.end()));
  return std::nullopt;
}

}  // namespace detail

/// Explores every robber behaviour against the composed k+2 cop strategy,
/// with k = c(G).
///
/// Round t+1 (robber at R, shadows S, cops C): the shadows take the optimal
/// classic move S -> S'; cop i goes to S_i if C_i != S_i, else to S'_i when
/// S'_i is not adjacent to R, else stays. The pair steps along a shortest
/// path toward R. When the robber passed, cops and shadows pass too while
/// the pair still advances.
///
/// After every cop move that does not capture, the three proof invariants
/// are checked: S'_i in N[C'_i]; C'_i != S'_i implies S'_i and R on
/// opposite sides; C'_i not adjacent to R. PASS needs no violation, no
/// attack opportunity, and no reachable cycle (so every play ends in
/// capture). With `all_starts` play also begins from every classic cop-win
/// position (cops on their shadows) and every pair vertex.
inline ShadowReport shadow_strategy_exhaustive(GraphFacts& f, const Instance& in, bool all_starts = true,
                                               std::size_t max_states = kShadowMaxStates) {
  ShadowReport report{make_outcome("shadow_strategy", in), std::nullopt};
  auto& o = report.outcome;
  const Graph& g = f.graph();
  const auto& basic = f.basic();
  if (!basic.bipartition || !basic.is_connected) {
    o.verdict = Verdict::skipped;
    o.note = "not a connected bipartite graph";
    return report;
  }
  const auto& side = basic.bipartition->side;
  const auto& classic = f.classic();
  const SolveResult& strategy = classic.result;
  const int k = classic.value;
  const int n = g.order();
  const auto dist = all_pairs_distances(g);

  Vertex pair_start = 0;
  {
    int best = kInfinite;
    for (Vertex v = 0; v < n; ++v) {
      const int ecc = *std::max_element(dist[v].begin(), dist[v].end());
      if (ecc < best) {
        best = ecc;
        pair_start = v;
      }
    }
  }

  std::size_t attacks = 0;
  std::size_t inv_fail[3] = {0, 0, 0};
  std::size_t off_strategy = 0;
  std::size_t captures = 0;
  bool cycle = false;
  bool budget_hit = false;

  // Cop response to the robber at `r`; returns the next robber-to-move key,
  // or nullopt on capture. Fills `round` for traces.
  auto respond = [&](const detail::ShadowKey& at, Vertex r, bool passed, ShadowRound& round)
      -> std::optional<detail::ShadowKey> {
    detail::ShadowKey next = at;
    next.robber = r;
    const bool on_shadow = std::find(at.shadows.begin(), at.shadows.end(), r) != at.shadows.end();
    if (!passed) {
      std::vector<Vertex> moved = at.shadows;
      if (!on_shadow) {
        std::vector<Vertex> sorted = at.shadows;
        std::sort(sorted.begin(), sorted.end());
        const auto best = strategy.best_cop_move(GameState{sorted, r, Side::cops});
        if (auto labelled = detail::label_move(g, at.shadows, best.state.cops)) moved = *labelled;
      }
      for (int i = 0; i < k; ++i) {
        const Vertex c = at.cops[i];
        const Vertex s = at.shadows[i];
        if (c != s)
          next.cops[i] = s;  // (a)
        else if (!g.adjacent(moved[i], r))
          next.cops[i] = moved[i];  // (b)
        else
          next.cops[i] = c;  // (c)
      }
      next.shadows = moved;
    }
    if (at.pair == r || g.adjacent(at.pair, r)) {
      next.pair = r;
    } else {
      for (Vertex w : g.neighbours(at.pair))
        if (dist[w][r] == dist[at.pair][r] - 1) {
          next.pair = w;
          break;
        }
    }
    round = ShadowRound{next.shadows, next.cops, next.pair, r, passed, true, true, true};
    const bool captured = next.pair == r || std::find(next.cops.begin(), next.cops.end(), r) != next.cops.end();
    if (captured) {
      ++captures;
      return std::nullopt;
    }
    // Only positions the robber goes on to face are held to the invariants.
    for (int i = 0; i < k; ++i) {
      const Vertex c = next.cops[i];
      const Vertex s = next.shadows[i];
      if (!g.in_closed_nbhd(c, s)) round.inv1 = false;
      if (c != s && side[s] == side[r]) round.inv2 = false;
      if (g.adjacent(c, r)) round.inv3 = false;
    }
    inv_fail[0] += !round.inv1;
    inv_fail[1] += !round.inv2;
    inv_fail[2] += !round.inv3;
    if (!passed && on_shadow) ++off_strategy;
    return next;
  };

  // Depth-first search over robber-to-move states; grey = on the stack.
  enum class Mark : std::uint8_t { grey, black };
  std::map<detail::ShadowKey, Mark> marks;
  struct Frame {
    detail::ShadowKey key;
    ShadowRound round;
    std::vector<Vertex> options;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  std::optional<ShadowTrace> failure;
  auto fail_with_stack = [&](const ShadowRound* last) {
    if (failure) return;
    ShadowTrace tr;
    for (const auto& fr : stack) tr.rounds.push_back(fr.round);
    if (last) tr.rounds.push_back(*last);
    failure = std::move(tr);
  };

  auto push = [&](const detail::ShadowKey& key, const ShadowRound& round) {
    if (!round.inv1 || !round.inv2 || !round.inv3) fail_with_stack(&round);
    auto it = marks.find(key);
    if (it != marks.end()) {
      if (it->second == Mark::grey) {
        cycle = true;
        fail_with_stack(&round);
      }
      return;
    }
    if (marks.size() >= max_states) {
      budget_hit = true;
      return;
    }
    marks.emplace(key, Mark::grey);
    Frame fr{key, round, {key.robber}, 0};
    for (Vertex u : g.neighbours(key.robber)) fr.options.push_back(u);
    stack.push_back(std::move(fr));
  };

  // The optimal opening first, then (if asked) every classic cop-win
  // position with any pair vertex: the invariants must not depend on how
  // play got there.
  std::vector<detail::ShadowKey> starts;
  const auto& opening = strategy.initial().cops;
  for (Vertex r = 0; r < n; ++r)
    if (r != pair_start && cops_on(opening, r) == 0) starts.push_back({opening, opening, pair_start, r});
  if (all_starts)
    strategy.for_each_live_state([&](const GameState& s) {
      if (s.to_move != Side::cops || static_cast<int>(s.cops.size()) != k || !strategy.is_cop_win(s)) return;
      for (Vertex p = 0; p < n; ++p)
        if (p != s.robber) starts.push_back({s.cops, s.cops, p, s.robber});
    });

  for (const auto& placed : starts) {
    if (budget_hit) break;
    const Vertex r = placed.robber;
    ShadowRound round;
    if (auto next = respond(placed, r, false, round)) push(*next, round);
    else if (!round.inv1 || !round.inv2 || !round.inv3) fail_with_stack(&round);

    while (!stack.empty() && !budget_hit) {
      Frame& top = stack.back();
      if (top.next == top.options.size()) {
        marks[top.key] = Mark::black;
        stack.pop_back();
        continue;
      }
      const Vertex u = top.options[top.next++];
      const detail::ShadowKey at = top.key;
      const bool passed = u == at.robber;
      int here = 0;
      if (!passed) {
        here = static_cast<int>(std::count(at.cops.begin(), at.cops.end(), u)) + (at.pair == u ? 2 : 0);
        if (here == 1) {
          ++attacks;
          fail_with_stack(nullptr);
          continue;
        }
        if (here >= 2) {
          ++captures;
          continue;
        }
      }
      ShadowRound next_round;
      if (auto next = respond(at, u, passed, next_round)) push(*next, next_round);
      else if (!next_round.inv1 || !next_round.inv2 || !next_round.inv3) fail_with_stack(&next_round);
    }
  }

  o.quantities = {{"c", k},
                  {"cops", k + 2},
                  {"starts", starts.size()},
                  {"states", marks.size()},
                  {"captures", captures},
                  {"attack_opportunities", attacks},
                  {"invariant1_violations", inv_fail[0]},
                  {"invariant2_violations", inv_fail[1]},
                  {"invariant3_violations", inv_fail[2]},
                  {"escape_cycle", cycle},
                  {"off_strategy_rounds", off_strategy}};
  if (budget_hit) {
    o.verdict = Verdict::skipped;
    o.note = "state budget of " + std::to_string(max_states) + " exceeded";
    return report;
  }
  const bool ok = attacks == 0 && inv_fail[0] == 0 && inv_fail[1] == 0 && inv_fail[2] == 0 && !cycle;
  o.verdict = ok ? Verdict::pass : Verdict::violation;
  if (!ok) {
    o.note = cycle ? "a robber strategy avoids capture forever" : "proof invariant or attack opportunity observed";
    report.trace = failure;
  }
  return report;
}

}  // namespace strikeback::harness
