#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strikeback/game.hpp"
#include "strikeback/graph.hpp"
#include "strikeback/invariants.hpp"
#include "strikeback/multiset_index.hpp"

namespace strikeback {

inline constexpr std::uint64_t kDefaultTransitionBudget = 100'000'000;

/// STRIKEBACK_BUDGET if set to a positive integer, else the default.
inline std::uint64_t budget_from_env() {
  if (const char* env = std::getenv("STRIKEBACK_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultTransitionBudget;
}

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t states, std::uint64_t transitions, std::uint64_t budget)
      : std::runtime_error("transition budget of " + std::to_string(budget) + " exceeded after " +
                           std::to_string(states) + " states / " + std::to_string(transitions) + " transitions"),
        states(states),
        transitions(transitions) {}

  std::uint64_t states;
  std::uint64_t transitions;
};

struct SolveOptions {
  std::uint64_t transition_budget = kDefaultTransitionBudget;
};

struct SolveMetrics {
  std::uint64_t states = 0;       // indexed states, live or not
  std::uint64_t live_states = 0;  // no cop on the robber
  std::uint64_t transitions = 0;  // edges of the game graph
  double elapsed_ms = 0.0;
};

/// The cops' opening placement and the robber's best reply to it. `robber`
/// is empty when the cops cover every vertex; `rank` is set iff cops win.
struct InitialPlacement {
  std::vector<Vertex> cops;
  std::optional<Vertex> robber;
  std::optional<int> rank;
};

namespace detail {

/// Solved game graph. State index = (multiset id * n + robber) * 2 + side,
/// where multiset ids are grouped by size, lexicographic within a size.
struct SolvedTables {
  Graph graph;
  Ruleset rules;
  int n = 0;
  MultisetIndexer indexer{1, 0};
  std::vector<std::uint64_t> mset_offset;  // first id of each size
  std::vector<Vertex> verts;               // k slots per multiset
  std::vector<std::uint8_t> sizes;
  std::vector<std::uint64_t> move_begin;  // CSR of cop moves
  std::vector<std::uint32_t> move_target;
  std::vector<std::uint8_t> win;
  std::vector<std::uint32_t> rank;
  SolveMetrics metrics;
  InitialPlacement initial;
  bool cops_win = false;

  std::uint64_t multisets() const { return sizes.size(); }
  int size_of(std::uint64_t id) const { return sizes[id]; }
  const Vertex* begin_of(std::uint64_t id) const { return verts.data() + id * rules.cops; }
  std::vector<Vertex> multiset(std::uint64_t id) const { return {begin_of(id), begin_of(id) + size_of(id)}; }

  std::uint64_t id_of(const std::vector<Vertex>& sorted) const {
    return mset_offset[sorted.size()] + indexer.rank(sorted);
  }
  std::uint64_t state(std::uint64_t id, Vertex r, Side side) const {
    return (id * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(r)) * 2 + (side == Side::robber ? 1 : 0);
  }
  int count_on(std::uint64_t id, Vertex v) const {
    const Vertex* b = begin_of(id);
    return static_cast<int>(std::count(b, b + size_of(id), v));
  }

  std::uint64_t index_of(const GameState& s) const {
    if (static_cast<int>(s.cops.size()) > rules.cops) throw MalformedState("more cops than the ruleset allows");
    validate_live(graph, s);
    return state(id_of(s.cops), s.robber, s.to_move);
  }
};

}  // namespace detail

/// Outcome of one backward-induction solve. Cheap to copy; immutable.
///
/// Ranks count plies to capture under optimal play: a capture move is 0,
/// a cops-to-move state is 1 + the best successor, a robber-to-move state
/// is 1 + the worst successor for the cops.
class SolveResult {
 public:
  explicit SolveResult(std::shared_ptr<const detail::SolvedTables> t) : t_(std::move(t)) {}

  bool cops_win() const { return t_->cops_win; }
  const InitialPlacement& initial() const { return t_->initial; }
  const SolveMetrics& metrics() const { return t_->metrics; }
  const Ruleset& rules() const { return t_->rules; }
  const Graph& graph() const { return t_->graph; }

  std::uint64_t index(const GameState& s) const { return t_->index_of(s); }

  bool is_cop_win(const GameState& s) const { return t_->win[t_->index_of(s)] != 0; }

  std::optional<int> rank(const GameState& s) const {
    const auto i = t_->index_of(s);
    if (!t_->win[i]) return std::nullopt;
    return static_cast<int>(t_->rank[i]);
  }

  /// Fastest capturing move; smallest state index among equal ranks. In a
  /// robber-win state every move loses, and the smallest index is returned.
  Successor best_cop_move(const GameState& s) const {
    if (s.to_move != Side::cops) throw MalformedState("best_cop_move: robber to move");
    const auto& t = *t_;
    const auto id = t.id_of(s.cops);
    t.index_of(s);
    std::uint64_t best_target = 0;
    std::uint64_t best_rank = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t best_index = std::numeric_limits<std::uint64_t>::max();
    bool best_capture = false;
    for (auto e = t.move_begin[id]; e < t.move_begin[id + 1]; ++e) {
      const std::uint64_t target = t.move_target[e];
      const bool capture = t.count_on(target, s.robber) > 0;
      const auto idx = t.state(target, s.robber, Side::robber);
      std::uint64_t r = std::numeric_limits<std::uint64_t>::max() - 1;
      if (capture)
        r = 0;
      else if (t.win[idx])
        r = t.rank[idx];
      if (r < best_rank || (r == best_rank && idx < best_index)) {
        best_rank = r;
        best_index = idx;
        best_target = target;
        best_capture = capture;
      }
    }
    return {GameState{t.multiset(best_target), s.robber, Side::robber}, best_capture};
  }

  /// Escaping move if one exists (first in successor order), else the
  /// move that delays capture longest; ties go to the smallest index.
  Successor best_robber_move(const GameState& s) const {
    const auto& t = *t_;
    const auto succ = robber_successors(t.graph, t.rules, s);
    std::optional<std::size_t> pick;
    std::int64_t best_rank = -1;
    std::uint64_t best_index = 0;
    for (std::size_t i = 0; i < succ.size(); ++i) {
      const auto& next = succ[i];
      const auto id = t.id_of(next.state.cops);
      const auto idx = t.state(id, next.state.robber, Side::cops);
      if (next.capture) {
        if (best_rank < 0 || (best_rank == 0 && idx < best_index)) {
          best_rank = 0;
          best_index = idx;
          pick = i;
        }
        continue;
      }
      if (!t.win[idx]) return next;
      const auto r = static_cast<std::int64_t>(t.rank[idx]);
      if (r > best_rank || (r == best_rank && idx < best_index)) {
        best_rank = r;
        best_index = idx;
        pick = i;
      }
    }
    return succ[*pick];
  }

  /// Robber's reply to a cop placement: first vertex that escapes, else the
  /// vertex maximising capture time. Empty if every vertex holds a cop.
  std::optional<Vertex> best_robber_placement(const std::vector<Vertex>& cops) const {
    const auto& t = *t_;
    const auto id = t.id_of(cops);
    std::optional<Vertex> best;
    std::uint32_t worst = 0;
    for (Vertex r = 0; r < t.n; ++r) {
      if (t.count_on(id, r) > 0) continue;
      const auto idx = t.state(id, r, Side::cops);
      if (!t.win[idx]) return r;
      if (!best || t.rank[idx] > worst) {
        best = r;
        worst = t.rank[idx];
      }
    }
    return best;
  }

  /// Visits every live state in index order.
  void for_each_live_state(const std::function<void(const GameState&)>& fn) const {
    const auto& t = *t_;
    for (std::uint64_t id = 0; id < t.multisets(); ++id) {
      const auto cops = t.multiset(id);
      for (Vertex r = 0; r < t.n; ++r) {
        if (t.count_on(id, r) > 0) continue;
        fn(GameState{cops, r, Side::cops});
        fn(GameState{cops, r, Side::robber});
      }
    }
  }

 private:
  std::shared_ptr<const detail::SolvedTables> t_;
};

namespace detail {

inline void build_tables(SolvedTables& t, std::uint64_t budget) {
  const int n = t.n;
  const int k = t.rules.cops;
  t.mset_offset.assign(static_cast<std::size_t>(k + 2), 0);
  for (int j = 0; j <= k; ++j) t.mset_offset[j + 1] = t.mset_offset[j] + t.indexer.count(j);
  const std::uint64_t total = t.mset_offset[k + 1];
  if (total * static_cast<std::uint64_t>(n) * 2 > std::numeric_limits<std::uint32_t>::max())
    throw BudgetExceeded(total * n * 2, 0, budget);
  t.verts.assign(total * static_cast<std::uint64_t>(k), 0);
  t.sizes.assign(total, 0);
  t.move_begin.assign(total + 1, 0);

  std::uint64_t transitions = 0;
  for (int j = 0; j <= k; ++j)
    for (std::uint64_t r = 0; r < t.indexer.count(j); ++r) {
      const std::uint64_t id = t.mset_offset[j] + r;
      const auto m = t.indexer.unrank(j, r);
      std::copy(m.begin(), m.end(), t.verts.begin() + static_cast<std::ptrdiff_t>(id * k));
      t.sizes[id] = static_cast<std::uint8_t>(j);
      for (const auto& next : cop_moves(t.graph, m)) t.move_target.push_back(static_cast<std::uint32_t>(t.id_of(next)));
      t.move_begin[id + 1] = t.move_target.size();
      transitions = t.move_target.size() * static_cast<std::uint64_t>(n);
      if (transitions > budget) throw BudgetExceeded((id + 1) * n * 2, transitions, budget);
    }
  for (Vertex r = 0; r < n; ++r) transitions += total * static_cast<std::uint64_t>(t.graph.degree(r) + 1);
  if (transitions > budget) throw BudgetExceeded(total * n * 2, transitions, budget);
  t.metrics.states = total * static_cast<std::uint64_t>(n) * 2;
  t.metrics.transitions = transitions;
}

inline void run_attractor(SolvedTables& t) {
  const int n = t.n;
  const int k = t.rules.cops;
  const Graph& g = t.graph;
  const bool attacking = t.rules.variant == Variant::attacking;
  const std::uint64_t states = t.metrics.states;
  t.win.assign(states, 0);
  t.rank.assign(states, 0);
  std::vector<std::uint32_t> pending(states, 0);  // robber states: successors not yet cop-win
  std::vector<std::uint32_t> queue;
  queue.reserve(states / 2);

  std::uint64_t live = 0;
  for (std::uint64_t id = 0; id < t.multisets(); ++id)
    for (Vertex r = 0; r < n; ++r) {
      if (t.count_on(id, r) > 0) continue;
      live += 2;
      std::uint32_t options = 1;
      for (Vertex u : g.neighbours(r)) {
        const int here = t.count_on(id, u);
        if (here == 0 || (attacking && here == 1)) ++options;
      }
      pending[t.state(id, r, Side::robber)] = options;
      const Vertex* c = t.begin_of(id);
      const bool adjacent = std::any_of(c, c + t.size_of(id), [&](Vertex v) { return g.adjacent(v, r); });
      if (adjacent) {
        const auto idx = t.state(id, r, Side::cops);
        t.win[idx] = 1;
        t.rank[idx] = 1;
        queue.push_back(static_cast<std::uint32_t>(idx));
      }
    }
  t.metrics.live_states = live;

  auto settle_robber = [&](std::uint64_t idx, std::uint32_t rank) {
    if (t.win[idx]) return;
    if (--pending[idx] == 0) {
      t.win[idx] = 1;
      t.rank[idx] = rank;
      queue.push_back(static_cast<std::uint32_t>(idx));
    }
  };

  std::vector<Vertex> grown;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint64_t s = queue[head];
    const std::uint32_t next_rank = t.rank[s] + 1;
    const std::uint64_t id = s / 2 / static_cast<std::uint64_t>(n);
    const Vertex x = static_cast<Vertex>(s / 2 % static_cast<std::uint64_t>(n));
    if (s % 2 == 0) {
      // Cops-to-move (C, x) won: robber states that can step (or pass) into it.
      settle_robber(t.state(id, x, Side::robber), next_rank);
      for (Vertex from : g.neighbours(x))
        if (t.count_on(id, from) == 0) settle_robber(t.state(id, from, Side::robber), next_rank);
      if (attacking && t.size_of(id) < k) {
        grown = t.multiset(id);
        grown.insert(std::upper_bound(grown.begin(), grown.end(), x), x);
        const auto bigger = t.id_of(grown);
        for (Vertex from : g.neighbours(x))
          if (t.count_on(bigger, from) == 0) settle_robber(t.state(bigger, from, Side::robber), next_rank);
      }
    } else {
      // Robber-to-move (C, x) won: any cop state one cop move away wins.
      for (auto e = t.move_begin[id]; e < t.move_begin[id + 1]; ++e) {
        const std::uint64_t before = t.move_target[e];
        if (t.count_on(before, x) > 0) continue;
        const auto idx = t.state(before, x, Side::cops);
        if (t.win[idx]) continue;
        t.win[idx] = 1;
        t.rank[idx] = next_rank;
        queue.push_back(static_cast<std::uint32_t>(idx));
      }
    }
  }
}

inline void choose_initial(SolvedTables& t) {
  const int k = t.rules.cops;
  std::optional<std::uint64_t> best_id;
  std::optional<Vertex> best_robber;
  std::uint32_t best_worst = std::numeric_limits<std::uint32_t>::max();
  for (std::uint64_t id = t.mset_offset[k]; id < t.mset_offset[k + 1]; ++id) {
    bool wins = true;
    std::optional<Vertex> reply;
    std::uint32_t worst = 0;
    for (Vertex r = 0; r < t.n && wins; ++r) {
      if (t.count_on(id, r) > 0) continue;
      const auto idx = t.state(id, r, Side::cops);
      if (!t.win[idx]) {
        wins = false;
      } else if (!reply || t.rank[idx] > worst) {
        worst = t.rank[idx];
        reply = r;
      }
    }
    if (wins && worst < best_worst) {
      best_worst = worst;
      best_id = id;
      best_robber = reply;
    }
  }
  if (best_id) {
    t.cops_win = true;
    t.initial = {t.multiset(*best_id), best_robber, static_cast<int>(best_worst)};
    return;
  }
  t.cops_win = false;
  const auto first = t.mset_offset[k];
  t.initial.cops = t.multiset(first);
  for (Vertex r = 0; r < t.n; ++r)
    if (t.count_on(first, r) == 0 && !t.win[t.state(first, r, Side::cops)]) {
      t.initial.robber = r;
      break;
    }
}

}  // namespace detail

/// Solves the game with `rules.cops` cops by backward induction.
///
/// A cops-to-move state is won if some successor is a capture or a won
/// robber state; a robber-to-move state is won once every successor is won
/// (tracked with per-state pending counters, so each edge is used once).
/// Whatever is unlabelled at the fixpoint is a robber win: infinite play
/// favours the robber.
inline SolveResult solve_k(const Graph& g, const Ruleset& rules, const SolveOptions& options = {}) {
  if (rules.cops < 1) throw std::invalid_argument("ruleset needs at least one cop");
  if (rules.cops > 255) throw std::invalid_argument("too many cops");
  const auto start = std::chrono::steady_clock::now();
  auto t = std::make_shared<detail::SolvedTables>();
  t->graph = g;
  t->rules = rules;
  t->n = g.order();
  t->indexer = MultisetIndexer(g.order(), rules.cops);
  detail::build_tables(*t, options.transition_budget);
  detail::run_attractor(*t);
  detail::choose_initial(*t);
  t->metrics.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return SolveResult(std::move(t));
}

struct CopNumberResult {
  int value = 0;
  SolveResult result;  // the solve at k = value
};

/// Least k for which the cops win, trying k = 1, 2, ... A dominating set of
/// cops always wins, so the search never passes gamma(G) (or n when the
/// graph is too large for the exact domination search).
inline CopNumberResult cop_number(const Graph& g, Variant variant, const SolveOptions& options = {}) {
  const int cutoff = g.order() <= kDominationMaxOrder ? domination_number(g).number : g.order();
  for (int k = 1; k <= cutoff; ++k) {
    auto r = solve_k(g, Ruleset{variant, k}, options);
    if (r.cops_win()) return {k, std::move(r)};
  }
  throw std::logic_error("cop_number: " + std::to_string(cutoff) + " cops on a dominating set failed to win");
}

}  // namespace strikeback
