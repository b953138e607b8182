#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "strikeback/family.hpp"
#include "strikeback/generators.hpp"
#include "strikeback/graph6.hpp"
#include "strikeback/invariants.hpp"

using namespace strikeback;

TEST(Generators, FixedFamilies) {
  EXPECT_EQ(cycle_graph(6).size(), 6);
  EXPECT_EQ(path_graph(6).size(), 5);
  EXPECT_EQ(complete_graph(6).size(), 15);
  EXPECT_EQ(complete_bipartite_graph(2, 3).size(), 6);
  EXPECT_EQ(star_graph(4).degree(0), 4);
  const auto fan = fan_graph(8);
  EXPECT_EQ(fan.size(), 6 + 7);
  EXPECT_EQ(fan.degree(7), 7);
  const auto p = petersen_graph();
  EXPECT_EQ(p.order(), 10);
  EXPECT_EQ(p.size(), 15);
  EXPECT_THROW(cycle_graph(2), GeneratorError);
}

TEST(Generators, SeededDeterminism) {
  for (const auto* name : {"gnp", "connected-gnp", "bipartite", "maximal-outerplanar"}) {
    const FamilySpec f{name, 9, 3, 4, 0.4};
    EXPECT_EQ(generate(f, 5), generate(f, 5)) << name;
  }
  EXPECT_NE(instance_seed(1, 0), instance_seed(1, 1));
  EXPECT_NE(instance_seed(1, 0), instance_seed(2, 0));
}

TEST(Generators, GeneratedMaximalOuterplanarExample) {
  // Frozen output of the seeded generator.
  EXPECT_EQ(to_graph6(generate({"maximal-outerplanar", 8}, 1)), "Gh{GK[");
}

TEST(Generators, RandomFamiliesSatisfyTheirContracts) {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto g = connected_gnp(8, 0.3, rng);
    EXPECT_TRUE(is_connected(g));
    const auto b = random_connected_bipartite(3, 4, 0.4, rng);
    EXPECT_TRUE(is_connected(b));
    ASSERT_TRUE(bipartition(b));
    for (const auto& [u, v] : b.edges()) EXPECT_NE(u < 3, v < 3);
    const int n = 3 + i % 12;
    const auto op = maximal_outerplanar(n, rng);
    EXPECT_EQ(op.size(), 2 * n - 3);
    EXPECT_TRUE(is_connected(op));
    // The boundary cycle 0..n-1 is Hamiltonian.
    for (Vertex v = 0; v < n; ++v) EXPECT_TRUE(op.adjacent(v, (v + 1) % n));
  }
}

TEST(Generators, ExtremeProbabilities) {
  Rng rng(0);
  EXPECT_EQ(gnp(7, 0.0, rng).size(), 0);
  EXPECT_EQ(gnp(7, 1.0, rng).size(), 21);
  EXPECT_THROW(connected_gnp(6, 0.0, rng, 5), GeneratorError);
}

TEST(Enumeration, CountsMatchKnownSequence) {
  // Connected graphs up to isomorphism, n = 1..7.
  const int expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(static_cast<int>(enumerate_connected(n).size()), expected[n - 1]) << n;
}

TEST(Enumeration, PairwiseNonIsomorphicAndConnected) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<bool>> forms;
    for (const auto& g : enumerate_connected(n)) {
      EXPECT_TRUE(is_connected(g));
      EXPECT_TRUE(forms.insert(oracle::canonical(g)).second) << to_graph6(g);
    }
  }
  EXPECT_THROW(enumerate_connected(kEnumerateMaxOrder + 1), GeneratorError);
}
