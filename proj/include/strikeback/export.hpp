#pragma once

#include <json.hpp>

#include "strikeback/graph6.hpp"
#include "strikeback/solver.hpp"

namespace strikeback {

inline nlohmann::json to_json(const SolveMetrics& m, bool with_timing) {
  nlohmann::json j{{"states", m.states}, {"live_states", m.live_states}, {"transitions", m.transitions}};
  if (with_timing) j["elapsed_ms"] = m.elapsed_ms;
  return j;
}

inline nlohmann::json to_json(const InitialPlacement& p) {
  return {{"cops", p.cops},
          {"robber", p.robber ? nlohmann::json(*p.robber) : nlohmann::json(nullptr)},
          {"rank", p.rank ? nlohmann::json(*p.rank) : nlohmann::json(nullptr)}};
}

/// Strategy table: one entry per live state, in state-index order. Cop
/// entries give the cops' next multiset, robber entries the robber's next
/// vertex; "rank" is null in robber-win states.
inline nlohmann::json strategy_json(const SolveResult& solved) {
  nlohmann::json moves = nlohmann::json::array();
  solved.for_each_live_state([&](const GameState& s) {
    nlohmann::json e{{"cops", s.cops}, {"robber", s.robber}, {"to_move", s.to_move == Side::cops ? "cops" : "robber"}};
    const auto r = solved.rank(s);
    e["rank"] = r ? nlohmann::json(*r) : nlohmann::json(nullptr);
    if (s.to_move == Side::cops)
      e["move"] = solved.best_cop_move(s).state.cops;
    else
      e["move"] = solved.best_robber_move(s).state.robber;
    moves.push_back(std::move(e));
  });
  return {{"graph6", to_graph6(solved.graph())},
          {"variant", to_string(solved.rules().variant)},
          {"cops", solved.rules().cops},
          {"cops_win", solved.cops_win()},
          {"initial", to_json(solved.initial())},
          {"moves", moves}};
}

}  // namespace strikeback
