#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strikeback/game.hpp"
#include "strikeback/solver.hpp"

namespace strikeback {

struct CopPolicy {
  std::function<std::vector<Vertex>()> place;
  std::function<std::vector<Vertex>(const GameState&)> move;
};

/// `place` sees the cop placement and returns the robber's start, or
/// nullopt when no cop-free vertex remains.
struct RobberPolicy {
  std::function<std::optional<Vertex>(const std::vector<Vertex>&)> place;
  std::function<Vertex(const GameState&)> move;
};

class IllegalMove : public std::runtime_error {
 public:
  IllegalMove(const std::string& what, GameState at) : std::runtime_error(what), state(std::move(at)) {}
  GameState state;
};

enum class EventKind { placement, cop_move, robber_move, robber_pass, attack, capture };

inline const char* to_string(EventKind k) {
  switch (k) {
    case EventKind::placement: return "placement";
    case EventKind::cop_move: return "cop_move";
    case EventKind::robber_move: return "robber_move";
    case EventKind::robber_pass: return "robber_pass";
    case EventKind::attack: return "attack";
    case EventKind::capture: return "capture";
  }
  return "?";
}

struct Event {
  EventKind kind;
  GameState state;  // position after the event
};

enum class Outcome { captured, robber_survived };

struct Transcript {
  std::vector<Event> events;
  Outcome outcome = Outcome::robber_survived;
  int rounds = 0;  // completed cop moves
  int plies = 0;   // cop moves plus robber moves until the end
};

/// Plays one game. A round is a cop move followed by a robber move; the
/// robber survives if max_rounds rounds pass without a capture.
inline Transcript simulate(const Graph& g, const Ruleset& rules, const CopPolicy& cops, const RobberPolicy& robber,
                           int max_rounds) {
  Transcript tr;
  auto placed = cops.place();
  std::sort(placed.begin(), placed.end());
  if (static_cast<int>(placed.size()) != rules.cops)
    throw IllegalMove("cop placement has the wrong number of cops", GameState{placed, 0, Side::cops});
  for (Vertex c : placed)
    if (c < 0 || c >= g.order()) throw IllegalMove("cop placed off the graph", GameState{placed, 0, Side::cops});

  const auto start = robber.place(placed);
  if (!start) {
    bool covered = true;
    for (Vertex v = 0; v < g.order(); ++v) covered = covered && cops_on(placed, v) > 0;
    if (!covered) throw IllegalMove("robber declined to place with a free vertex", GameState{placed, 0, Side::cops});
    tr.events.push_back({EventKind::capture, GameState{placed, 0, Side::cops}});
    tr.outcome = Outcome::captured;
    return tr;
  }
  GameState s{placed, *start, Side::cops};
  if (*start < 0 || *start >= g.order() || cops_on(placed, *start) > 0)
    throw IllegalMove("robber must start on a cop-free vertex", s);
  tr.events.push_back({EventKind::placement, s});

  for (int round = 0; round < max_rounds; ++round) {
    auto next = cops.move(s);
    std::sort(next.begin(), next.end());
    if (!is_cop_move(g, s.cops, next)) throw IllegalMove("cop policy returned an illegal move", s);
    s = GameState{std::move(next), s.robber, Side::robber};
    ++tr.rounds;
    ++tr.plies;
    if (cops_on(s.cops, s.robber) > 0) {
      tr.events.push_back({EventKind::capture, s});
      tr.outcome = Outcome::captured;
      return tr;
    }
    tr.events.push_back({EventKind::cop_move, s});

    const Vertex to = robber.move(s);
    if (to < 0 || to >= g.order() || !g.in_closed_nbhd(s.robber, to))
      throw IllegalMove("robber policy returned an illegal move", s);
    ++tr.plies;
    const int here = to == s.robber ? 0 : cops_on(s.cops, to);
    if (here > 0 && (rules.variant == Variant::classic || here >= 2)) {
      tr.events.push_back({EventKind::capture, GameState{s.cops, to, Side::cops}});
      tr.outcome = Outcome::captured;
      return tr;
    }
    const bool passed = to == s.robber;
    if (here == 1) s.cops.erase(std::find(s.cops.begin(), s.cops.end(), to));
    s = GameState{std::move(s.cops), to, Side::cops};
    tr.events.push_back({here == 1 ? EventKind::attack : passed ? EventKind::robber_pass : EventKind::robber_move, s});
  }
  tr.outcome = Outcome::robber_survived;
  return tr;
}

inline CopPolicy optimal_cops(const SolveResult& solved) {
  return {[solved] { return solved.initial().cops; },
          [solved](const GameState& s) { return solved.best_cop_move(s).state.cops; }};
}

inline RobberPolicy optimal_robber(const SolveResult& solved) {
  return {[solved](const std::vector<Vertex>& c) { return solved.best_robber_placement(c); },
          [solved](const GameState& s) { return solved.best_robber_move(s).state.robber; }};
}

inline CopPolicy stationary_cops(std::vector<Vertex> at) {
  return {[at] { return at; }, [](const GameState& s) { return s.cops; }};
}

/// Places on the first cop-free vertex and never moves.
inline RobberPolicy passing_robber(const Graph& g) {
  return {[n = g.order()](const std::vector<Vertex>& c) -> std::optional<Vertex> {
            for (Vertex v = 0; v < n; ++v)
              if (cops_on(c, v) == 0) return v;
            return std::nullopt;
          },
          [](const GameState& s) { return s.robber; }};
}

}  // namespace strikeback
