#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "strikeback/graph.hpp"
#include "strikeback/invariants.hpp"

namespace strikeback {

/// Vertex set 0..n-1 plus a list of hyperedges (each sorted, size >= 2,
/// no duplicates).
class Hypergraph {
 public:
  Hypergraph(int n, std::vector<std::vector<Vertex>> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 1) throw GraphError("hypergraph needs at least one vertex");
    std::set<std::vector<Vertex>> distinct;
    for (auto& e : edges_) {
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw GraphError("hyperedge repeats a vertex");
      if (e.size() < 2) throw GraphError("hyperedge needs at least two vertices");
      for (Vertex v : e)
        if (v < 0 || v >= n) throw GraphError("hyperedge vertex " + std::to_string(v) + " out of range");
      if (!distinct.insert(e).second) throw GraphError("duplicate hyperedge");
    }
  }

  int order() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::vector<Vertex>>& edges() const { return edges_; }

  /// Incidence graph: vertices 0..n-1, then one vertex per hyperedge.
  Graph incidence_graph() const {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < edges_.size(); ++i)
      for (Vertex v : edges_[i]) es.emplace_back(v, n_ + static_cast<Vertex>(i));
    return Graph::from_edges(n_ + edge_count(), es);
  }

 private:
  int n_;
  std::vector<std::vector<Vertex>> edges_;
};

struct HyperProperties {
  std::optional<int> uniform_k;
  bool is_linear = true;
  int min_vertex_degree = 0;
  int berge_girth = kInfinite;
};

/// Each graph edge becomes a 2-element hyperedge.
inline Hypergraph hypergraph_from_graph(const Graph& g) {
  std::vector<std::vector<Vertex>> es;
  for (auto [u, v] : g.edges()) es.push_back({u, v});
  return Hypergraph(g.order(), std::move(es));
}

/// Berge girth is half the girth of the incidence graph: a Berge cycle
/// v1 e1 v2 e2 ... vt et v1 is exactly a 2t-cycle there.
inline HyperProperties hyper_properties(const Hypergraph& h) {
  HyperProperties out;
  const auto& es = h.edges();
  if (!es.empty()) {
    const auto k = es.front().size();
    if (std::all_of(es.begin(), es.end(), [k](const auto& e) { return e.size() == k; }))
      out.uniform_k = static_cast<int>(k);
  }
  for (std::size_t i = 0; i < es.size() && out.is_linear; ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      std::vector<Vertex> common;
      std::set_intersection(es[i].begin(), es[i].end(), es[j].begin(), es[j].end(), std::back_inserter(common));
      if (common.size() > 1) {
        out.is_linear = false;
        break;
      }
    }
  std::vector<int> deg(static_cast<std::size_t>(h.order()), 0);
  for (const auto& e : es)
    for (Vertex v : e) ++deg[v];
  out.min_vertex_degree = *std::min_element(deg.begin(), deg.end());
  const int g = girth(h.incidence_graph());
  out.berge_girth = g == kInfinite ? kInfinite : g / 2;
  return out;
}

/// One vertex per hyperedge; adjacent iff the hyperedges intersect.
inline Graph line_graph(const Hypergraph& h) {
  const auto& es = h.edges();
  std::vector<Edge> out;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      std::vector<Vertex> common;
      std::set_intersection(es[i].begin(), es[i].end(), es[j].begin(), es[j].end(), std::back_inserter(common));
      if (!common.empty()) out.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  if (es.empty()) throw GraphError("line graph of an edgeless hypergraph has no vertices");
  return Graph::from_edges(static_cast<int>(es.size()), out);
}

/// Text format: "n m", then one line per hyperedge listing its vertices.
inline Hypergraph read_hypergraph(std::istream& in) {
  long long n = 0;
  long long m = 0;
  std::string line;
  if (!std::getline(in, line)) throw GraphError("hypergraph: missing header");
  std::istringstream header(line);
  if (!(header >> n >> m) || n < 1 || m < 0) throw GraphError("hypergraph: expected header \"n m\"");
  std::vector<std::vector<Vertex>> es;
  while (static_cast<long long>(es.size()) < m && std::getline(in, line)) {
    std::istringstream row(line);
    std::vector<Vertex> e;
    long long v = 0;
    while (row >> v) e.push_back(static_cast<Vertex>(v));
    if (e.empty()) continue;
    es.push_back(std::move(e));
  }
  if (static_cast<long long>(es.size()) < m) throw GraphError("hypergraph: truncated hyperedge list");
  return Hypergraph(static_cast<int>(n), std::move(es));
}

inline Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return read_hypergraph(in);
}

inline std::string to_hypergraph_text(const Hypergraph& h) {
  std::ostringstream out;
  out << h.order() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace strikeback
