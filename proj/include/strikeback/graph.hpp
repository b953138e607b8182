#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace strikeback {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed graph input (bad vertex ids, loops, bad text).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Keeps sorted neighbour lists for iteration and a dense n*n adjacency
/// matrix for constant-time membership. Immutable once built.
class Graph {
 public:
  Graph() : Graph(1) {}

  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)), matrix_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 1) throw GraphError("graph needs at least one vertex");
  }

  static Graph from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                         std::to_string(n));
      if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
      if (g.matrix_[g.cell(u, v)]) continue;
      g.matrix_[g.cell(u, v)] = 1;
      g.matrix_[g.cell(v, u)] = 1;
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
      ++g.edge_count_;
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    return g;
  }

  int order() const { return n_; }
  int size() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return matrix_[cell(u, v)] != 0; }

  /// N[u] membership.
  bool in_closed_nbhd(Vertex u, Vertex v) const { return u == v || adjacent(u, v); }

  const std::vector<Vertex>& neighbours(Vertex u) const { return adj_[u]; }
  int degree(Vertex u) const { return static_cast<int>(adj_[u].size()); }

  /// N[u] in ascending order.
  std::vector<Vertex> closed_neighbours(Vertex u) const {
    std::vector<Vertex> out = adj_[u];
    out.insert(std::lower_bound(out.begin(), out.end(), u), u);
    return out;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  Graph induced(const std::vector<Vertex>& vertices) const {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t j = i + 1; j < vertices.size(); ++j)
        if (adjacent(vertices[i], vertices[j])) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return from_edges(static_cast<int>(vertices.size()), es);
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.matrix_ == b.matrix_; }

 private:
  std::size_t cell(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }

  int n_;
  int edge_count_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> matrix_;
};

inline Graph from_edge_list(int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }

/// Edge-list text: "n m" on the first line, then m lines "u v".
inline Graph read_edge_list(std::istream& in) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m)) throw GraphError("edge list: expected header \"n m\"");
  if (n < 1 || m < 0) throw GraphError("edge list: invalid header");
  std::vector<Edge> es;
  es.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) throw GraphError("edge list: truncated after " + std::to_string(i) + " edges");
    es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edges(static_cast<int>(n), es);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace strikeback
