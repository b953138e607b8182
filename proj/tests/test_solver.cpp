#include <gtest/gtest.h>

#include <climits>
#include <cstdlib>

#include "strikeback/export.hpp"
#include "strikeback/family.hpp"
#include "strikeback/generators.hpp"
#include "strikeback/graph6.hpp"
#include "strikeback/oracle.hpp"
#include "strikeback/solver.hpp"

using namespace strikeback;

namespace {

// Local consistency of win labels and ranks, recomputed from the move
// generators rather than the solver's tables.
void expect_sound(const SolveResult& r) {
  const Graph& g = r.graph();
  r.for_each_live_state([&](const GameState& s) {
    const auto rank = r.rank(s);
    if (s.to_move == Side::cops) {
      int best = INT_MAX;
      for (const auto& m : cop_successors(g, s)) {
        if (m.capture) best = std::min(best, 0);
        else if (auto x = r.rank(m.state)) best = std::min(best, *x);
      }
      if (best == INT_MAX) {
        EXPECT_FALSE(rank) << s;
      } else {
        ASSERT_TRUE(rank) << s;
        EXPECT_EQ(*rank, best + 1) << s;
      }
    } else {
      int worst = 0;
      bool escape = false;
      for (const auto& m : robber_successors(g, r.rules(), s)) {
        if (m.capture) continue;
        if (auto x = r.rank(m.state)) worst = std::max(worst, *x);
        else escape = true;
      }
      if (escape) {
        EXPECT_FALSE(rank) << s;
      } else {
        ASSERT_TRUE(rank) << s;
        EXPECT_EQ(*rank, worst + 1) << s;
      }
    }
  });
}

}  // namespace

TEST(Solver, CycleValues) {
  const int cc[] = {1, 2, 2, 2, 3, 3, 3, 3, 3, 3};
  for (int n = 3; n <= 12; ++n) {
    EXPECT_EQ(cop_number(cycle_graph(n), Variant::attacking).value, cc[n - 3]) << n;
    EXPECT_EQ(cop_number(cycle_graph(n), Variant::classic).value, n == 3 ? 1 : 2) << n;
  }
}

TEST(Solver, NamedGraphs) {
  EXPECT_EQ(cop_number(petersen_graph(), Variant::classic).value, 3);
  EXPECT_EQ(cop_number(petersen_graph(), Variant::attacking).value, 3);
  EXPECT_EQ(cop_number(path_graph(4), Variant::attacking).value, 2);
  EXPECT_EQ(cop_number(path_graph(4), Variant::classic).value, 1);
  EXPECT_EQ(cop_number(complete_graph(5), Variant::attacking).value, 1);
  EXPECT_EQ(cop_number(star_graph(4), Variant::attacking).value, 1);
  const auto lp = generate({"petersen-line"});
  EXPECT_EQ(cop_number(lp, Variant::classic).value, 2);
  EXPECT_EQ(cop_number(lp, Variant::attacking).value, 3);
}

TEST(Solver, StateCounts) {
  const auto c4 = cycle_graph(4);
  const auto r1 = solve_k(c4, {Variant::attacking, 1});
  EXPECT_EQ(r1.metrics().states, 40u);       // (1 + 4) multisets * 4 * 2
  EXPECT_EQ(r1.metrics().live_states, 32u);  // 4*2 + 4*3*2
  const auto r2 = solve_k(c4, {Variant::attacking, 2});
  EXPECT_EQ(r2.metrics().states, 120u);      // (1 + 4 + 10) * 4 * 2
  const auto star = solve_k(parse_graph6("D?{"), {Variant::attacking, 1});
  EXPECT_EQ(star.metrics().states, 60u);
  EXPECT_EQ(star.metrics().live_states, 50u);
  EXPECT_TRUE(star.cops_win());
  EXPECT_EQ(star.initial().cops, (std::vector<Vertex>{4}));
  EXPECT_EQ(star.initial().rank, 1);
}

TEST(Solver, RanksAreLocallyConsistent) {
  Rng rng(9);
  for (int trial = 0; trial < 12; ++trial) {
    const auto g = connected_gnp(6, 0.4, rng);
    for (Variant v : {Variant::classic, Variant::attacking})
      for (int k = 1; k <= 2; ++k) expect_sound(solve_k(g, {v, k}));
  }
  expect_sound(solve_k(cycle_graph(7), {Variant::attacking, 3}));
}

TEST(Solver, AgreesWithMinimaxOracle) {
  for (const auto& g : enumerate_connected_up_to(5))
    for (Variant v : {Variant::classic, Variant::attacking})
      for (int k = 1; k <= 2; ++k)
        EXPECT_EQ(solve_k(g, {v, k}).cops_win(), minimax_oracle(g, {v, k})) << to_graph6(g) << ' ' << k;
}

TEST(Solver, MonotoneInCops) {
  for (const auto& g : enumerate_connected(5))
    for (Variant v : {Variant::classic, Variant::attacking}) {
      bool won = false;
      for (int k = 1; k <= 3; ++k) {
        const bool w = solve_k(g, {v, k}).cops_win();
        EXPECT_TRUE(!won || w) << to_graph6(g);
        won = won || w;
      }
    }
}

TEST(Solver, AttackingNeverHelpsTheCops) {
  for (const auto& g : enumerate_connected(6))
    for (int k = 1; k <= 2; ++k)
      if (solve_k(g, {Variant::attacking, k}).cops_win()) EXPECT_TRUE(solve_k(g, {Variant::classic, k}).cops_win());
}

TEST(Solver, RejectsNoCops) { EXPECT_THROW(solve_k(cycle_graph(4), {Variant::classic, 0}), std::invalid_argument); }

TEST(Solver, BudgetExceeded) {
  try {
    solve_k(petersen_graph(), {Variant::attacking, 3}, {1000});
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_GT(e.transitions, 1000u);
  }
}

TEST(Solver, BudgetFromEnvironment) {
  ::setenv("STRIKEBACK_BUDGET", "12345", 1);
  EXPECT_EQ(budget_from_env(), 12345u);
  ::unsetenv("STRIKEBACK_BUDGET");
  EXPECT_EQ(budget_from_env(), kDefaultTransitionBudget);
}

TEST(Solver, BestMovesFollowRanks) {
  const auto r = solve_k(cycle_graph(7), {Variant::attacking, 3});
  ASSERT_TRUE(r.cops_win());
  r.for_each_live_state([&](const GameState& s) {
    if (s.to_move != Side::cops || !r.is_cop_win(s)) return;
    const auto rank = r.rank(s);
    const auto m = r.best_cop_move(s);
    if (m.capture)
      EXPECT_EQ(*rank, 1);
    else
      EXPECT_EQ(r.rank(m.state), *rank - 1);
  });
}

TEST(Solver, RobberEscapesWhenHeCan) {
  const auto r = solve_k(cycle_graph(7), {Variant::attacking, 2});
  ASSERT_FALSE(r.cops_win());
  EXPECT_FALSE(r.initial().rank);
  r.for_each_live_state([&](const GameState& s) {
    if (s.to_move != Side::robber || r.is_cop_win(s)) return;
    const auto m = r.best_robber_move(s);
    EXPECT_FALSE(m.capture);
    EXPECT_FALSE(r.is_cop_win(m.state));
  });
}

TEST(Solver, StrategyExport) {
  const auto r = solve_k(cycle_graph(5), {Variant::attacking, 2});
  const auto j = strategy_json(r);
  EXPECT_EQ(j["moves"].size(), r.metrics().live_states);
  EXPECT_EQ(j["cops_win"], true);
  EXPECT_EQ(j["graph6"], "Dhc");
  for (const auto& e : j["moves"]) {
    const GameState s{e["cops"].get<std::vector<Vertex>>(), e["robber"].get<Vertex>(),
                      e["to_move"] == "cops" ? Side::cops : Side::robber};
    if (s.to_move == Side::cops)
      EXPECT_TRUE(is_cop_move(r.graph(), s.cops, e["move"].get<std::vector<Vertex>>()));
    else
      EXPECT_TRUE(r.graph().in_closed_nbhd(s.robber, e["move"].get<Vertex>()));
  }
  EXPECT_EQ(strategy_json(r).dump(), j.dump());
}
