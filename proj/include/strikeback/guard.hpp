#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

#include "strikeback/game.hpp"
#include "strikeback/graph.hpp"
#include "strikeback/invariants.hpp"
#include "strikeback/multiset_index.hpp"

namespace strikeback {

/// Guards patrol the isometric path `path` (listed end to end) in `graph`.
struct GuardInstance {
  Graph graph;
  std::vector<Vertex> path;
  int guards = 1;
  Variant variant = Variant::classic;
};

struct GuardVerdict {
  bool guardable = false;
  /// A robber start that beats every guard placement, when not guardable.
  std::optional<Vertex> robber_start;
};

/// Solves the guarding game on an isometric path.
///
/// The robber places first, the guards answer with any placement on the
/// path, then the robber moves first and the sides alternate. Guards never
/// leave the path. The robber wins as soon as one of his moves (a pass
/// included) leaves him on the path and the guards' reply cannot take him;
/// play that never gets there is a guard win. Solved as a least fixpoint
/// of the robber's winning region.
inline GuardVerdict solve_guard_game(const GuardInstance& in) {
  const Graph& g = in.graph;
  if (in.guards < 1) throw std::invalid_argument("guard game needs at least one guard");
  if (!is_isometric(g, in.path)) throw GraphError("guard game: path is not isometric");
  const int n = g.order();
  const int h = static_cast<int>(in.path.size());
  const int k = in.guards;
  const bool attacking = in.variant == Variant::attacking;

  std::vector<int> slot(static_cast<std::size_t>(n), -1);  // graph vertex -> path position
  for (int i = 0; i < h; ++i) slot[in.path[i]] = i;

  MultisetIndexer indexer(h, k);
  std::vector<std::uint64_t> offset(static_cast<std::size_t>(k + 2), 0);
  for (int j = 0; j <= k; ++j) offset[j + 1] = offset[j] + indexer.count(j);
  const std::uint64_t total = offset[k + 1];
  std::vector<std::vector<int>> sets(total);
  std::vector<std::vector<std::uint64_t>> moves(total);
  for (int j = 0; j <= k; ++j)
    for (std::uint64_t r = 0; r < indexer.count(j); ++r) sets[offset[j] + r] = indexer.unrank(j, r);
  auto id_of = [&](const std::vector<int>& s) { return offset[s.size()] + indexer.rank(s); };
  for (std::uint64_t id = 0; id < total; ++id) {
    // Path positions are adjacent in the induced subgraph iff consecutive.
    const auto& s = sets[id];
    std::vector<std::vector<int>> out{{}};
    for (int p : s) {
      std::vector<std::vector<int>> next;
      for (const auto& partial : out)
        for (int q = std::max(0, p - 1); q <= std::min(h - 1, p + 1); ++q) {
          auto e = partial;
          e.push_back(q);
          next.push_back(std::move(e));
        }
      out = std::move(next);
    }
    for (auto& e : out) {
      std::sort(e.begin(), e.end());
      moves[id].push_back(id_of(e));
    }
    std::sort(moves[id].begin(), moves[id].end());
    moves[id].erase(std::unique(moves[id].begin(), moves[id].end()), moves[id].end());
  }

  auto guards_at = [&](std::uint64_t id, Vertex v) {
    if (slot[v] < 0) return 0;
    return static_cast<int>(std::count(sets[id].begin(), sets[id].end(), slot[v]));
  };
  auto index = [&](std::uint64_t id, Vertex r, bool robber_turn) {
    return (id * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(r)) * 2 + (robber_turn ? 1 : 0);
  };

  std::vector<std::uint8_t> robber_wins(total * static_cast<std::uint64_t>(n) * 2, 0);
  // Entries the guards cannot punish are won outright.
  for (std::uint64_t id = 0; id < total; ++id)
    for (Vertex r = 0; r < n; ++r) {
      if (slot[r] < 0 || guards_at(id, r) > 0) continue;
      const bool punished = std::any_of(sets[id].begin(), sets[id].end(),
                                        [&](int p) { return std::abs(p - slot[r]) <= 1; });
      if (!punished) robber_wins[index(id, r, false)] = 1;
    }

  for (bool changed = true; changed;) {
    changed = false;
    for (std::uint64_t id = 0; id < total; ++id)
      for (Vertex r = 0; r < n; ++r) {
        if (guards_at(id, r) > 0) continue;
        const auto guard_state = index(id, r, false);
        if (!robber_wins[guard_state] && slot[r] < 0) {
          const bool all = std::all_of(moves[id].begin(), moves[id].end(),
                                       [&](std::uint64_t to) { return robber_wins[index(to, r, true)] != 0; });
          if (all) {
            robber_wins[guard_state] = 1;
            changed = true;
          }
        }
        const auto robber_state = index(id, r, true);
        if (robber_wins[robber_state]) continue;
        bool escape = robber_wins[index(id, r, false)] != 0;
        for (Vertex u : g.neighbours(r)) {
          if (escape) break;
          const int here = guards_at(id, u);
          if (here == 0) {
            escape = robber_wins[index(id, u, false)] != 0;
          } else if (attacking && here == 1) {
            auto rest = sets[id];
            rest.erase(std::find(rest.begin(), rest.end(), slot[u]));
            escape = robber_wins[index(id_of(rest), u, false)] != 0;
          }
        }
        if (escape) {
          robber_wins[robber_state] = 1;
          changed = true;
        }
      }
  }

  for (Vertex r = 0; r < n; ++r) {
    bool answered = false;
    for (std::uint64_t id = offset[k]; id < offset[k + 1] && !answered; ++id)
      answered = guards_at(id, r) > 0 || !robber_wins[index(id, r, true)];
    if (!answered) return {false, r};
  }
  return {true, std::nullopt};
}

inline bool guardable(const GuardInstance& in) { return solve_guard_game(in).guardable; }

}  // namespace strikeback
