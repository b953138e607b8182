#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "strikeback/graph.hpp"

namespace strikeback {

/// Stand-in for an infinite girth or diameter.
inline constexpr int kInfinite = std::numeric_limits<int>::max();

/// side[v] in {0,1}; every edge joins the two sides.
struct Bipartition {
  std::vector<int> side;
};

struct BasicInvariants {
  int min_degree = 0;
  int max_degree = 0;
  int diameter = kInfinite;  // kInfinite when disconnected
  bool is_connected = false;
  std::optional<Bipartition> bipartition;
};

/// Breadth-first distances from `source`; -1 marks unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbours(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

inline std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex u = 0; u < g.order(); ++u) d.push_back(bfs_distances(g, u));
  return d;
}

inline bool is_connected(const Graph& g) {
  const auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

/// Two-colouring by breadth-first search; nullopt if an odd cycle exists.
inline std::optional<Bipartition> bipartition(const Graph& g) {
  Bipartition b{std::vector<int>(static_cast<std::size_t>(g.order()), -1)};
  for (Vertex s = 0; s < g.order(); ++s) {
    if (b.side[s] >= 0) continue;
    b.side[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbours(u)) {
        if (b.side[w] < 0) {
          b.side[w] = 1 - b.side[u];
          q.push(w);
        } else if (b.side[w] == b.side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return b;
}

/// Shortest cycle length, or kInfinite for forests.
///
/// Runs a BFS from every vertex; a non-tree edge (u,w) closes a walk of
/// length dist[u] + dist[w] + 1 through the root, and the minimum over all
/// roots is exactly the girth.
inline int girth(const Graph& g) {
  int best = kInfinite;
  const int n = g.order();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<Vertex> q;
    dist[root] = 0;
    parent[root] = -1;
    q.push(root);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbours(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

inline BasicInvariants invariants_basic(const Graph& g) {
  BasicInvariants out;
  out.min_degree = kInfinite;
  for (Vertex v = 0; v < g.order(); ++v) {
    out.min_degree = std::min(out.min_degree, g.degree(v));
    out.max_degree = std::max(out.max_degree, g.degree(v));
  }
  out.is_connected = is_connected(g);
  if (out.is_connected) {
    int diam = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
      const auto d = bfs_distances(g, u);
      diam = std::max(diam, *std::max_element(d.begin(), d.end()));
    }
    out.diameter = diam;
  }
  out.bipartition = bipartition(g);
  return out;
}

inline bool has_universal_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Domination number

inline constexpr int kDominationMaxOrder = 32;

class DominationLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct DominationResult {
  int number = 0;
  std::vector<Vertex> witness;  // ascending
};

inline bool is_dominating_set(const Graph& g, const std::vector<Vertex>& set) {
  std::vector<bool> covered(static_cast<std::size_t>(g.order()), false);
  for (Vertex s : set)
    for (Vertex v : g.closed_neighbours(s)) covered[v] = true;
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

namespace detail {

struct DominationSearch {
  std::vector<std::uint64_t> closed;  // closed-neighbourhood masks
  std::uint64_t all = 0;
  int max_cover = 1;
  std::vector<Vertex> chosen;

  bool search(std::uint64_t covered, int budget) {
    if (covered == all) return true;
    if (budget == 0) return false;
    const int missing = std::popcount(all & ~covered);
    if (missing > budget * max_cover) return false;
    // The lowest undominated vertex must be covered by one of N[u].
    const Vertex u = std::countr_zero(all & ~covered);
    std::uint64_t options = closed[u];
    while (options) {
      const Vertex v = std::countr_zero(options);
      options &= options - 1;
      chosen.push_back(v);
      if (search(covered | closed[v], budget - 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace detail

/// Exact domination number with a witness set, for n <= 32.
///
/// Tries k = lower bound, lower bound + 1, ... below the greedy size,
/// branching on which vertex covers the lowest undominated vertex.
inline DominationResult domination_number(const Graph& g) {
  const int n = g.order();
  if (n > kDominationMaxOrder)
    throw DominationLimitError("domination_number: n=" + std::to_string(n) + " exceeds the exhaustive limit of " +
                               std::to_string(kDominationMaxOrder));
  detail::DominationSearch s;
  s.closed.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.closed_neighbours(v)) s.closed[v] |= std::uint64_t{1} << w;
    s.max_cover = std::max(s.max_cover, g.degree(v) + 1);
  }
  s.all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  // Greedy upper bound.
  std::vector<Vertex> greedy;
  std::uint64_t covered = 0;
  while (covered != s.all) {
    Vertex best = 0;
    int gain = -1;
    for (Vertex v = 0; v < n; ++v) {
      const int c = std::popcount(s.closed[v] & ~covered);
      if (c > gain) {
        gain = c;
        best = v;
      }
    }
    greedy.push_back(best);
    covered |= s.closed[best];
  }

  const int lower = (n + s.max_cover - 1) / s.max_cover;
  for (int k = lower; k < static_cast<int>(greedy.size()); ++k) {
    s.chosen.clear();
    if (s.search(0, k)) {
      std::sort(s.chosen.begin(), s.chosen.end());
      return {k, s.chosen};
    }
  }
  std::sort(greedy.begin(), greedy.end());
  return {static_cast<int>(greedy.size()), greedy};
}

// ---------------------------------------------------------------------------
// K_{1,m}-freeness

namespace detail {

inline int max_independent(const Graph& g, std::vector<Vertex> candidates) {
  if (candidates.empty()) return 0;
  const Vertex v = candidates.back();
  candidates.pop_back();
  const int without = max_independent(g, candidates);
  std::vector<Vertex> rest;
  for (Vertex w : candidates)
    if (!g.adjacent(v, w)) rest.push_back(w);
  if (static_cast<int>(rest.size()) + 1 <= without) return without;
  return std::max(without, 1 + max_independent(g, rest));
}

}  // namespace detail

/// Largest independent set inside N(v), maximised over v: the largest t
/// for which G contains an induced K_{1,t}.
inline int max_induced_star(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, detail::max_independent(g, g.neighbours(v)));
  return best;
}

/// True iff no vertex has m pairwise non-adjacent neighbours.
inline bool is_k1m_free(const Graph& g, int m) {
  if (m < 2) throw std::invalid_argument("is_k1m_free: m must be at least 2");
  for (Vertex v = 0; v < g.order(); ++v)
    if (detail::max_independent(g, g.neighbours(v)) >= m) return false;
  return true;
}

/// Least m >= 3 for which g is K_{1,m}-free.
inline int least_free_star(const Graph& g) { return std::max(3, max_induced_star(g) + 1); }

// ---------------------------------------------------------------------------
// Isometric paths

/// A shortest u-v path; at each step the smallest-index vertex one step
/// closer to v is taken. Every shortest path is isometric.
inline std::vector<Vertex> isometric_shortest_path(const Graph& g, Vertex u, Vertex v) {
  const auto to_v = bfs_distances(g, v);
  if (to_v[u] < 0)
    throw GraphError("no path between " + std::to_string(u) + " and " + std::to_string(v));
  std::vector<Vertex> path{u};
  Vertex at = u;
  while (at != v) {
    for (Vertex w : g.neighbours(at))
      if (to_v[w] == to_v[at] - 1) {
        at = w;
        break;
      }
    path.push_back(at);
  }
  return path;
}

/// True iff `path` is a path in g whose internal distances match g's.
inline bool is_isometric(const Graph& g, const std::vector<Vertex>& path) {
  if (path.empty()) return false;
  for (Vertex v : path)
    if (v < 0 || v >= g.order()) return false;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto d = bfs_distances(g, path[i]);
    for (std::size_t j = 0; j < path.size(); ++j) {
      const auto along = static_cast<int>(i > j ? i - j : j - i);
      if (d[path[j]] != along) return false;
    }
  }
  return true;
}

}  // namespace strikeback
