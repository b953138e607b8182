#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "strikeback/graph.hpp"
#include "strikeback/invariants.hpp"

namespace strikeback {

/// Invalid family parameters or an exhausted rejection budget.
class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Rng = std::mt19937_64;

inline constexpr int kDefaultRejectionBudget = 1000;

/// Uniform in [0,1) from the top 53 bits; identical on every platform,
/// unlike std::uniform_real_distribution.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) { return rng() % bound; }

/// splitmix64 finaliser; derives independent per-instance seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t instance_seed(std::uint64_t base, std::uint64_t index) { return mix_seed(base ^ mix_seed(index)); }

namespace detail {
inline void require(bool ok, const std::string& what) {
  if (!ok) throw GeneratorError(what);
}
}  // namespace detail

inline Graph cycle_graph(int n) {
  detail::require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, es);
}

/// Path on n vertices 0-1-...-(n-1).
inline Graph path_graph(int n) {
  detail::require(n >= 1, "path needs n >= 1");
  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::from_edges(n, es);
}

inline Graph complete_graph(int n) {
  detail::require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph::from_edges(n, es);
}

/// K_{a,b}: side 0 is 0..a-1, side 1 is a..a+b-1.
inline Graph complete_bipartite_graph(int a, int b) {
  detail::require(a >= 1 && b >= 1, "complete bipartite needs a, b >= 1");
  std::vector<Edge> es;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) es.emplace_back(i, a + j);
  return Graph::from_edges(a + b, es);
}

/// K_{1,m} with centre 0.
inline Graph star_graph(int m) {
  detail::require(m >= 1, "star needs m >= 1");
  return complete_bipartite_graph(1, m);
}

/// Path 0..n-2 plus apex n-1 joined to every path vertex.
inline Graph fan_graph(int n) {
  detail::require(n >= 2, "fan needs n >= 2");
  std::vector<Edge> es;
  for (Vertex i = 0; i + 2 < n; ++i) es.emplace_back(i, i + 1);
  for (Vertex i = 0; i + 1 < n; ++i) es.emplace_back(i, n - 1);
  return Graph::from_edges(n, es);
}

/// Outer 5-cycle 0-4, inner pentagram 5-9 (i+5 ~ (i+2)%5+5), spokes i ~ i+5.
inline Graph petersen_graph() {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
    es.emplace_back(i, i + 5);
  }
  return Graph::from_edges(10, es);
}

inline Graph gnp(int n, double p, Rng& rng) {
  detail::require(n >= 1, "gnp needs n >= 1");
  detail::require(p >= 0.0 && p <= 1.0, "gnp needs p in [0,1]");
  std::vector<Edge> es;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (uniform01(rng) < p) es.emplace_back(i, j);
  return Graph::from_edges(n, es);
}

/// G(n,p) conditioned on connectivity, by rejection.
inline Graph connected_gnp(int n, double p, Rng& rng, int budget = kDefaultRejectionBudget) {
  for (int attempt = 0; attempt < budget; ++attempt) {
    Graph g = gnp(n, p, rng);
    if (is_connected(g)) return g;
  }
  throw GeneratorError("connected_gnp: rejection budget of " + std::to_string(budget) + " exhausted");
}

/// Random bipartite graph with sides 0..a-1 / a..a+b-1, each cross pair
/// present with probability p, conditioned on connectivity by rejection.
inline Graph random_connected_bipartite(int a, int b, double p, Rng& rng, int budget = kDefaultRejectionBudget) {
  detail::require(a >= 1 && b >= 1, "bipartite needs a, b >= 1");
  detail::require(p >= 0.0 && p <= 1.0, "bipartite needs p in [0,1]");
  for (int attempt = 0; attempt < budget; ++attempt) {
    std::vector<Edge> es;
    for (Vertex i = 0; i < a; ++i)
      for (Vertex j = 0; j < b; ++j)
        if (uniform01(rng) < p) es.emplace_back(i, a + j);
    Graph g = Graph::from_edges(a + b, es);
    if (is_connected(g)) return g;
  }
  throw GeneratorError("random_connected_bipartite: rejection budget of " + std::to_string(budget) + " exhausted");
}

inline constexpr int kOuterplanarMaxOrder = 36;

/// Uniformly random triangulation of the convex polygon 0..n-1, returned
/// as a maximal outerplanar graph with 2n-3 edges.
inline Graph maximal_outerplanar(int n, Rng& rng) {
  detail::require(n >= 3, "maximal outerplanar needs n >= 3");
  detail::require(n <= kOuterplanarMaxOrder, "maximal outerplanar supports n <= " + std::to_string(kOuterplanarMaxOrder));
  // span[d]: triangulations of a polygon chord spanning d steps (Catalan(d-1)).
  std::vector<std::uint64_t> span(static_cast<std::size_t>(n), 0);
  span[1] = 1;
  for (int d = 2; d < n; ++d)
    for (int s = 1; s < d; ++s) span[d] += span[s] * span[d - s];

  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  es.emplace_back(0, n - 1);
  std::vector<std::pair<Vertex, Vertex>> todo{{0, n - 1}};
  while (!todo.empty()) {
    auto [i, j] = todo.back();
    todo.pop_back();
    if (j - i < 2) continue;
    std::uint64_t pick = uniform_below(rng, span[j - i]);
    Vertex apex = i + 1;
    for (;; ++apex) {
      const std::uint64_t w = span[apex - i] * span[j - apex];
      if (pick < w) break;
      pick -= w;
    }
    if (apex - i >= 2) es.emplace_back(i, apex);
    if (j - apex >= 2) es.emplace_back(apex, j);
    todo.emplace_back(i, apex);
    todo.emplace_back(apex, j);
  }
  return Graph::from_edges(n, es);
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of small graphs

inline constexpr int kEnumerateMaxOrder = 7;

/// One representative (the least graph6 bit mask) per isomorphism class of
/// connected graphs on n vertices, ordered by that mask.
inline std::vector<Graph> enumerate_connected(int n) {
  detail::require(n >= 1 && n <= kEnumerateMaxOrder,
                  "enumerate_connected supports 1 <= n <= " + std::to_string(kEnumerateMaxOrder));
  std::vector<Edge> pairs;
  std::vector<std::vector<int>> pair_index(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      pair_index[i][j] = pair_index[j][i] = static_cast<int>(pairs.size());
      pairs.emplace_back(i, j);
    }
  const int bits = static_cast<int>(pairs.size());

  std::vector<std::vector<int>> images;  // per permutation: pair -> pair
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> img(pairs.size());
    for (std::size_t b = 0; b < pairs.size(); ++b) img[b] = pair_index[perm[pairs[b].first]][perm[pairs[b].second]];
    images.push_back(std::move(img));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Graph> out;
  std::vector<bool> seen(std::size_t{1} << bits, false);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    if (seen[mask]) continue;
    for (const auto& img : images) {
      std::uint64_t image = 0;
      for (int b = 0; b < bits; ++b)
        if (mask >> b & 1) image |= std::uint64_t{1} << img[b];
      seen[image] = true;
    }
    std::vector<Edge> es;
    for (int b = 0; b < bits; ++b)
      if (mask >> b & 1) es.push_back(pairs[b]);
    Graph g = Graph::from_edges(n, es);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

/// All connected graphs with 1 <= order <= max_n, up to isomorphism.
inline std::vector<Graph> enumerate_connected_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto part = enumerate_connected(n);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace strikeback
