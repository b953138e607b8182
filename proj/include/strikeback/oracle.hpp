#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "strikeback/graph.hpp"
#include "strikeback/game.hpp"

namespace strikeback {

inline constexpr std::size_t kOracleMaxStates = 100'000;

class OracleLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Reference decision procedure for tiny instances, written apart from the
/// attractor solver: positions live in a std::map, successors are
/// regenerated by brute force, and the cop-win set is grown by depth-bounded
/// minimax, one ply of look-ahead per sweep (win within d plies from win
/// within d-1), up to (live positions + 1) plies.
inline bool minimax_oracle(const Graph& g, const Ruleset& rules) {
  using Key = std::tuple<std::vector<Vertex>, Vertex, bool>;  // cops, robber, cops_to_move
  const int n = g.order();
  const bool attacking = rules.variant == Variant::attacking;

  std::vector<std::vector<Vertex>> multisets{{}};
  for (int j = 1; j <= rules.cops; ++j) {
    std::vector<std::vector<Vertex>> next;
    for (const auto& m : multisets)
      if (static_cast<int>(m.size()) == j - 1)
        for (Vertex v = m.empty() ? 0 : m.back(); v < n; ++v) {
          auto grown = m;
          grown.push_back(v);
          next.push_back(std::move(grown));
        }
    multisets.insert(multisets.end(), next.begin(), next.end());
  }

  auto holds = [](const std::vector<Vertex>& m, Vertex v) { return std::find(m.begin(), m.end(), v) != m.end(); };

  std::map<Key, bool> won;
  for (const auto& m : multisets)
    for (Vertex r = 0; r < n; ++r)
      if (!holds(m, r)) {
        won[{m, r, true}] = false;
        won[{m, r, false}] = false;
      }
  if (won.size() > kOracleMaxStates) throw OracleLimitError("minimax_oracle: instance too large");

  // All assignments of each cop to a vertex of its closed neighbourhood.
  auto cop_options = [&](const std::vector<Vertex>& cops) {
    std::vector<std::vector<Vertex>> out{{}};
    for (Vertex c : cops) {
      std::vector<std::vector<Vertex>> next;
      for (const auto& partial : out)
        for (Vertex v = 0; v < n; ++v)
          if (v == c || g.adjacent(v, c)) {
            auto p = partial;
            p.push_back(v);
            next.push_back(std::move(p));
          }
      out = std::move(next);
    }
    for (auto& o : out) std::sort(o.begin(), o.end());
    return out;
  };

  // Cop-win within `depth` plies, given the set won within depth-1.
  auto evaluate = [&](const Key& key) {
    const auto& [cops, r, cops_turn] = key;
    if (cops_turn) {
      for (const auto& next : cop_options(cops)) {
        if (holds(next, r)) return true;
        if (won.at({next, r, false})) return true;
      }
      return false;
    }
    std::vector<Vertex> dests{r};
    for (Vertex u = 0; u < n; ++u)
      if (g.adjacent(r, u)) dests.push_back(u);
    for (Vertex u : dests) {
      const auto here = std::count(cops.begin(), cops.end(), u);
      if (u != r && here > 0 && (!attacking || here >= 2)) continue;  // suicide
      auto left = cops;
      if (u != r && here == 1) left.erase(std::find(left.begin(), left.end(), u));
      if (!won.at({left, u, true})) return false;
    }
    return true;
  };

  const std::size_t bound = won.size() + 1;
  for (std::size_t depth = 1; depth <= bound; ++depth) {
    std::vector<Key> fresh;
    for (const auto& [key, w] : won)
      if (!w && evaluate(key)) fresh.push_back(key);
    if (fresh.empty()) break;
    for (const auto& key : fresh) won[key] = true;
  }

  for (const auto& m : multisets) {
    if (static_cast<int>(m.size()) != rules.cops) continue;
    bool all = true;
    for (Vertex r = 0; r < n && all; ++r)
      if (!holds(m, r)) all = won.at({m, r, true});
    if (all) return true;
  }
  return false;
}

}  // namespace strikeback
