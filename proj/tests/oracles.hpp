#pragma once

// Brute-force reference implementations. Deliberately naive and sharing
// no code with the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "strikeback/graph.hpp"
#include "strikeback/hypergraph.hpp"

namespace oracle {

using strikeback::Graph;
using strikeback::Vertex;

// graph6 for n < 63: one size byte, then the upper triangle column by
// column, six bits per byte, high bit first.
inline std::pair<int, std::set<std::pair<int, int>>> decode_graph6(const std::string& s) {
  const int n = s[0] - 63;
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i)
    for (int b = 5; b >= 0; --b) bits.push_back(((s[i] - 63) >> b) & 1);
  std::set<std::pair<int, int>> edges;
  std::size_t at = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits.at(at++)) edges.insert({i, j});
  return {n, edges};
}

inline std::set<std::pair<int, int>> edge_set(const Graph& g) {
  std::set<std::pair<int, int>> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) out.insert({u, v});
  return out;
}

// Smallest dominating set size by trying every subset.
inline int domination(const Graph& g) {
  const int n = g.order();
  int best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      bool covered = false;
      for (Vertex u = 0; u < n && !covered; ++u) covered = ((mask >> u) & 1) && (u == v || g.adjacent(u, v));
      ok = covered;
    }
    if (ok) best = size;
  }
  return best;
}

// Length of the shortest simple cycle, by growing simple paths from each
// start vertex; 0 if acyclic.
inline int girth(const Graph& g) {
  const int n = g.order();
  int best = 0;
  std::vector<int> path;
  std::vector<bool> used(n, false);
  std::function<void(Vertex)> grow = [&](Vertex v) {
    for (Vertex w = 0; w < n; ++w) {
      if (!g.adjacent(v, w)) continue;
      if (w == path.front() && path.size() >= 3) {
        const int len = static_cast<int>(path.size());
        if (best == 0 || len < best) best = len;
      }
      if (used[w] || w < path.front()) continue;
      if (best != 0 && static_cast<int>(path.size()) + 1 >= best) continue;
      used[w] = true;
      path.push_back(w);
      grow(w);
      path.pop_back();
      used[w] = false;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    used.assign(n, false);
    used[s] = true;
    grow(s);
  }
  return best;
}

inline int eccentricity_max(const Graph& g) {
  // Floyd-Warshall diameter; -1 if disconnected.
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i == j) d[i][j] = 0;
      else if (g.adjacent(i, j)) d[i][j] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  int diam = 0;
  for (auto& row : d)
    for (int x : row) diam = std::max(diam, x);
  return diam >= inf ? -1 : diam;
}

// Induced K_{1,m}: a centre with m pairwise non-adjacent neighbours.
inline bool has_induced_star(const Graph& g, int m) {
  const int n = g.order();
  for (Vertex c = 0; c < n; ++c) {
    std::vector<Vertex> nb;
    for (Vertex v = 0; v < n; ++v)
      if (g.adjacent(c, v)) nb.push_back(v);
    const int d = static_cast<int>(nb.size());
    if (d < m) continue;
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
      if (__builtin_popcount(mask) != m) continue;
      bool independent = true;
      for (int i = 0; i < d && independent; ++i)
        for (int j = i + 1; j < d && independent; ++j)
          if (((mask >> i) & 1) && ((mask >> j) & 1) && g.adjacent(nb[i], nb[j])) independent = false;
      if (independent) return true;
    }
  }
  return false;
}

// Berge cycle: distinct vertices v_1..v_L and distinct edges e_1..e_L with
// v_i, v_{i+1} in e_i (indices mod L), L >= 2. Returns 0 if none.
inline int berge_girth(const strikeback::Hypergraph& h) {
  const auto& edges = h.edges();
  const int m = static_cast<int>(edges.size());
  auto has = [&](int e, Vertex v) { return std::find(edges[e].begin(), edges[e].end(), v) != edges[e].end(); };
  int best = 0;
  std::vector<Vertex> vs;
  std::vector<int> es;
  std::function<void()> grow = [&] {
    const Vertex last = vs.back();
    for (int e = 0; e < m; ++e) {
      if (!has(e, last) || std::find(es.begin(), es.end(), e) != es.end()) continue;
      // close the cycle through e
      if (vs.size() >= 2 && has(e, vs.front())) {
        const int len = static_cast<int>(vs.size());
        if (best == 0 || len < best) best = len;
      }
      if (best != 0 && static_cast<int>(vs.size()) + 1 >= best) continue;
      for (Vertex w : edges[e]) {
        if (std::find(vs.begin(), vs.end(), w) != vs.end()) continue;
        vs.push_back(w);
        es.push_back(e);
        grow();
        vs.pop_back();
        es.pop_back();
      }
    }
  };
  for (Vertex s = 0; s < h.order(); ++s) {
    vs = {s};
    es.clear();
    grow();
  }
  return best;
}

// Vertices are hyperedges, adjacent when they share a vertex.
inline std::set<std::pair<int, int>> line_graph_edges(const strikeback::Hypergraph& h) {
  std::set<std::pair<int, int>> out;
  const auto& e = h.edges();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      for (Vertex v : e[i])
        if (std::find(e[j].begin(), e[j].end(), v) != e[j].end()) out.insert({static_cast<int>(i), static_cast<int>(j)});
  return out;
}

// Canonical form by trying all vertex permutations (n <= 7).
inline std::vector<bool> canonical(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) code.push_back(g.adjacent(perm[i], perm[j]));
    if (best.empty() || code > best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace oracle
