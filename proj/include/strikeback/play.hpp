#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "strikeback/game.hpp"
#include "strikeback/solver.hpp"

namespace strikeback {

enum class PlayEnd { captured, robber_survives, input_ended, illegal_script };

inline const char* to_string(PlayEnd e) {
  switch (e) {
    case PlayEnd::captured: return "captured";
    case PlayEnd::robber_survives: return "robber survives";
    case PlayEnd::input_ended: return "input ended";
    case PlayEnd::illegal_script: return "illegal move";
  }
  return "?";
}

struct PlayOptions {
  Side human = Side::robber;
  bool scripted = false;  // illegal input ends the session instead of re-prompting
};

namespace detail {

inline std::string show(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i]);
  return s + "}";
}

inline std::optional<Vertex> parse_vertex(const std::string& tok, int n) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 0 || v >= n) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline std::optional<std::vector<Vertex>> parse_vertices(const std::string& line, int n) {
  std::istringstream in(line);
  std::vector<Vertex> out;
  for (std::string tok; in >> tok;) {
    auto v = parse_vertex(tok, n);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Text session against the solved strategy. The human side types one move
/// per line: a vertex or "pass" for the robber, a list of vertices for the
/// cops. Play stops on capture, or when a robber-to-move position repeats
/// (the robber can then evade forever).
inline PlayEnd play_session(const SolveResult& solved, std::istream& in, std::ostream& out,
                            const PlayOptions& opt = {}) {
  const Graph& g = solved.graph();
  const Ruleset& rules = solved.rules();
  const int n = g.order();
  const bool human_robber = opt.human == Side::robber;

  // Returns the next non-empty input line, re-prompting on illegal input
  // unless scripted.
  auto ask = [&](const std::string& prompt) -> std::optional<std::string> {
    for (std::string line; out << prompt << "> " << std::flush, std::getline(in, line);) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto last = line.find_last_not_of(" \t\r");
      if (opt.scripted) out << line.substr(first, last - first + 1) << '\n';
      return line.substr(first, last - first + 1);
    }
    out << '\n';
    return std::nullopt;
  };
  auto illegal = [&](const std::string& why) {
    out << "illegal: " << why << '\n';
    return opt.scripted;
  };
  auto finish = [&](PlayEnd e) {
    out << to_string(e) << '\n';
    return e;
  };

  out << "game: " << to_string(rules.variant) << ", " << rules.cops << " cop(s), " << n << " vertices, cops "
      << (solved.cops_win() ? "win" : "lose") << " with optimal play\n";

  std::vector<Vertex> cops;
  if (human_robber) {
    cops = solved.initial().cops;
  } else {
    for (;;) {
      auto line = ask("cops");
      if (!line) return finish(PlayEnd::input_ended);
      auto vs = detail::parse_vertices(*line, n);
      if (vs && static_cast<int>(vs->size()) == rules.cops) {
        cops = *vs;
        break;
      }
      if (illegal("expected " + std::to_string(rules.cops) + " vertices")) return finish(PlayEnd::illegal_script);
    }
  }
  out << "cops place on " << detail::show(cops) << '\n';

  Vertex robber = 0;
  if (human_robber) {
    if (!solved.best_robber_placement(cops)) return finish(PlayEnd::captured);
    for (;;) {
      auto line = ask("robber");
      if (!line) return finish(PlayEnd::input_ended);
      auto v = detail::parse_vertex(*line, n);
      if (v && cops_on(cops, *v) == 0) {
        robber = *v;
        break;
      }
      if (illegal("start on a cop-free vertex")) return finish(PlayEnd::illegal_script);
    }
  } else {
    auto r = solved.best_robber_placement(cops);
    if (!r) return finish(PlayEnd::captured);
    robber = *r;
  }
  out << "robber places on " << robber << '\n';

  std::set<std::pair<std::vector<Vertex>, Vertex>> seen;
  for (;;) {
    // Cops' turn.
    GameState s{cops, robber, Side::cops};
    std::vector<Vertex> next;
    if (human_robber) {
      next = solved.best_cop_move(s).state.cops;
    } else {
      for (;;) {
        auto line = ask("cops");
        if (!line) return finish(PlayEnd::input_ended);
        auto vs = detail::parse_vertices(*line, n);
        if (vs && vs->size() == cops.size() && is_cop_move(g, cops, *vs)) {
          next = *vs;
          break;
        }
        if (illegal("each cop moves at most one step")) return finish(PlayEnd::illegal_script);
      }
    }
    cops = next;
    out << "cops move to " << detail::show(cops) << '\n';
    if (cops_on(cops, robber) > 0) return finish(PlayEnd::captured);
    if (!seen.insert({cops, robber}).second) return finish(PlayEnd::robber_survives);

    // Robber's turn.
    Vertex to = robber;
    if (human_robber) {
      for (;;) {
        auto line = ask("robber");
        if (!line) return finish(PlayEnd::input_ended);
        if (*line == "pass") break;
        auto v = detail::parse_vertex(*line, n);
        if (v && g.in_closed_nbhd(robber, *v)) {
          to = *v;
          break;
        }
        if (illegal("move to a neighbour of " + std::to_string(robber) + " or pass"))
          return finish(PlayEnd::illegal_script);
      }
    } else {
      to = solved.best_robber_move(GameState{cops, robber, Side::robber}).state.robber;
    }
    if (to == robber) {
      out << "robber passes\n";
      continue;
    }
    const int here = cops_on(cops, to);
    robber = to;
    out << "robber moves to " << to << '\n';
    if (here == 0) continue;
    if (rules.variant == Variant::classic || here >= 2) return finish(PlayEnd::captured);
    cops.erase(std::find(cops.begin(), cops.end(), to));
    out << "robber eliminates the cop on " << to << '\n';
  }
}

}  // namespace strikeback
