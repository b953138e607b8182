#include <gtest/gtest.h>

#include "strikeback/generators.hpp"
#include "strikeback/graph6.hpp"
#include "strikeback/simulate.hpp"

using namespace strikeback;

TEST(Simulate, OptimalPlayTakesExactlyTheRank) {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = connected_gnp(7, 0.35, rng);
    for (Variant v : {Variant::classic, Variant::attacking}) {
      const auto solved = cop_number(g, v).result;
      const auto tr = simulate(g, solved.rules(), optimal_cops(solved), optimal_robber(solved), 1000);
      EXPECT_EQ(tr.outcome, Outcome::captured);
      if (solved.initial().robber) EXPECT_EQ(tr.plies, *solved.initial().rank) << to_graph6(g);
    }
  }
}

TEST(Simulate, RobberSurvivesWhenCopsLose) {
  const auto solved = solve_k(cycle_graph(7), {Variant::attacking, 2});
  const auto tr = simulate(solved.graph(), solved.rules(), optimal_cops(solved), optimal_robber(solved), 200);
  EXPECT_EQ(tr.outcome, Outcome::robber_survived);
  EXPECT_EQ(tr.rounds, 200);
}

TEST(Simulate, AttackRemovesLoneCop) {
  const auto g = path_graph(3);
  const Ruleset rules{Variant::attacking, 1};
  RobberPolicy attacker{[](const std::vector<Vertex>&) { return std::optional<Vertex>(2); },
                        [](const GameState& s) { return s.cops.empty() ? s.robber : s.cops.front(); }};
  const auto tr = simulate(g, rules, stationary_cops({1}), attacker, 3);
  ASSERT_GE(tr.events.size(), 3u);
  EXPECT_EQ(tr.events[0].kind, EventKind::placement);
  EXPECT_EQ(tr.events[1].kind, EventKind::cop_move);
  EXPECT_EQ(tr.events[2].kind, EventKind::attack);
  EXPECT_TRUE(tr.events[2].state.cops.empty());
  EXPECT_EQ(tr.outcome, Outcome::robber_survived);

  const auto classic = simulate(g, {Variant::classic, 1}, stationary_cops({1}), attacker, 3);
  EXPECT_EQ(classic.outcome, Outcome::captured);
  EXPECT_EQ(classic.events.back().kind, EventKind::capture);
}

TEST(Simulate, IllegalPolicies) {
  const auto g = path_graph(4);
  CopPolicy jumper{[] { return std::vector<Vertex>{0}; }, [](const GameState&) { return std::vector<Vertex>{3}; }};
  EXPECT_THROW(simulate(g, {Variant::classic, 1}, jumper, passing_robber(g), 3), IllegalMove);
  RobberPolicy onto_cop{[](const std::vector<Vertex>&) { return std::optional<Vertex>(0); },
                        [](const GameState& s) { return s.robber; }};
  EXPECT_THROW(simulate(g, {Variant::classic, 1}, stationary_cops({0}), onto_cop, 3), IllegalMove);
  EXPECT_THROW(simulate(g, {Variant::classic, 2}, stationary_cops({0}), passing_robber(g), 3), IllegalMove);
}

TEST(Simulate, CoveringPlacementCapturesAtOnce) {
  const auto g = path_graph(2);
  const auto tr = simulate(g, {Variant::attacking, 2}, stationary_cops({0, 1}), passing_robber(g), 5);
  EXPECT_EQ(tr.outcome, Outcome::captured);
  EXPECT_EQ(tr.plies, 0);
}
