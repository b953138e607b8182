#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "strikeback/graph.hpp"

namespace strikeback {

enum class Variant { classic, attacking };

enum class Side { cops, robber };

inline const char* to_string(Variant v) { return v == Variant::classic ? "classic" : "attacking"; }

struct Ruleset {
  Variant variant = Variant::classic;
  int cops = 1;
};

/// A position: surviving cops as a sorted multiset, the robber, and whose
/// turn it is. Cops are interchangeable, so the sorted form is canonical.
struct GameState {
  std::vector<Vertex> cops;
  Vertex robber = 0;
  Side to_move = Side::cops;

  friend bool operator==(const GameState&, const GameState&) = default;
};

inline std::ostream& operator<<(std::ostream& out, const GameState& s) {
  out << "{cops:[";
  for (std::size_t i = 0; i < s.cops.size(); ++i) out << (i ? "," : "") << s.cops[i];
  return out << "] robber:" << s.robber << " to_move:" << (s.to_move == Side::cops ? "cops" : "robber") << '}';
}

/// A successor position; `capture` marks a cop-win terminal.
struct Successor {
  GameState state;
  bool capture = false;

  friend bool operator==(const Successor&, const Successor&) = default;
};

class MalformedState : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline int cops_on(const std::vector<Vertex>& cops, Vertex v) {
  return static_cast<int>(std::count(cops.begin(), cops.end(), v));
}

inline void validate_live(const Graph& g, const GameState& s) {
  if (s.robber < 0 || s.robber >= g.order()) throw MalformedState("robber off the graph");
  if (!std::is_sorted(s.cops.begin(), s.cops.end())) throw MalformedState("cop multiset not sorted");
  for (Vertex c : s.cops)
    if (c < 0 || c >= g.order()) throw MalformedState("cop off the graph");
  if (cops_on(s.cops, s.robber) > 0) throw MalformedState("robber shares a vertex with a cop in a live state");
}

/// Every distinct multiset reachable when each cop stays or steps to a
/// neighbour. Sorted ascending, no duplicates.
inline std::vector<std::vector<Vertex>> cop_moves(const Graph& g, const std::vector<Vertex>& cops) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> pick(cops.size());
  std::vector<std::vector<Vertex>> options;
  options.reserve(cops.size());
  for (Vertex c : cops) options.push_back(g.closed_neighbours(c));
  std::vector<std::size_t> choice(cops.size(), 0);

  // Cops on the same vertex pick non-decreasing option indices; that
  // already removes most duplicates before the final sort/unique.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == cops.size()) {
      std::vector<Vertex> m = pick;
      std::sort(m.begin(), m.end());
      out.push_back(std::move(m));
      return;
    }
    const std::size_t from = (i > 0 && cops[i] == cops[i - 1]) ? choice[i - 1] : 0;
    for (std::size_t o = from; o < options[i].size(); ++o) {
      choice[i] = o;
      pick[i] = options[i][o];
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Cop moves from a live cops-to-move state. A move landing a cop on the
/// robber is a capture terminal.
inline std::vector<Successor> cop_successors(const Graph& g, const GameState& s) {
  if (s.to_move != Side::cops) throw MalformedState("cop_successors: robber to move");
  validate_live(g, s);
  std::vector<Successor> out;
  for (auto& m : cop_moves(g, s.cops)) {
    const bool capture = cops_on(m, s.robber) > 0;
    out.push_back({GameState{std::move(m), s.robber, Side::robber}, capture});
  }
  return out;
}

/// Robber options: pass, then each neighbour in ascending order.
///
/// Classic: stepping onto any cop is a capture. Attacking: stepping onto a
/// lone cop removes her and play continues; onto two or more cops is a
/// capture (the survivor takes him).
inline std::vector<Successor> robber_successors(const Graph& g, const Ruleset& rules, const GameState& s) {
  if (s.to_move != Side::robber) throw MalformedState("robber_successors: cops to move");
  validate_live(g, s);
  std::vector<Successor> out;
  out.push_back({GameState{s.cops, s.robber, Side::cops}, false});
  for (Vertex u : g.neighbours(s.robber)) {
    const int here = cops_on(s.cops, u);
    if (here == 0) {
      out.push_back({GameState{s.cops, u, Side::cops}, false});
    } else if (rules.variant == Variant::attacking && here == 1) {
      std::vector<Vertex> rest = s.cops;
      rest.erase(std::find(rest.begin(), rest.end(), u));
      out.push_back({GameState{std::move(rest), u, Side::cops}, false});
    } else {
      out.push_back({GameState{s.cops, u, Side::cops}, true});
    }
  }
  return out;
}

/// True iff `to` is reachable from `from` with each cop moving at most one
/// step (perfect matching in the "within N[.]" bipartite graph).
inline bool is_cop_move(const Graph& g, const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
  if (from.size() != to.size()) return false;
  for (Vertex v : to)
    if (v < 0 || v >= g.order()) return false;
  const std::size_t k = from.size();
  std::vector<int> owner(k, -1);  // to-slot -> from-slot
  auto augment = [&](auto&& self, std::size_t i, std::vector<bool>& used) -> bool {
    for (std::size_t j = 0; j < k; ++j) {
      if (used[j] || !g.in_closed_nbhd(from[i], to[j])) continue;
      used[j] = true;
      if (owner[j] < 0 || self(self, static_cast<std::size_t>(owner[j]), used)) {
        owner[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<bool> used(k, false);
    if (!augment(augment, i, used)) return false;
  }
  return true;
}

}  // namespace strikeback
