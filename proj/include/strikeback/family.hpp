#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "strikeback/generators.hpp"
#include "strikeback/hypergraph.hpp"

namespace strikeback {

/// A named graph family plus its size parameters. Unused fields are ignored
/// by families that do not take them.
struct FamilySpec {
  std::string name;
  int n = 0;
  int a = 0;
  int b = 0;
  double p = 0.5;
};

inline const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{
      "cycle", "path",          "complete",       "complete-bipartite", "star",  "fan", "petersen", "petersen-line",
      "gnp",   "connected-gnp", "bipartite", "maximal-outerplanar"};
  return names;
}

inline bool family_is_random(const std::string& name) {
  return name == "gnp" || name == "connected-gnp" || name == "bipartite" || name == "maximal-outerplanar";
}

/// Builds a family member; random families are a pure function of `seed`.
inline Graph generate(const FamilySpec& f, std::uint64_t seed = 0) {
  Rng rng(seed);
  const auto& name = f.name;
  if (name == "cycle") return cycle_graph(f.n);
  if (name == "path") return path_graph(f.n);
  if (name == "complete") return complete_graph(f.n);
  if (name == "complete-bipartite") return complete_bipartite_graph(f.a, f.b);
  if (name == "star") return star_graph(f.n);
  if (name == "fan") return fan_graph(f.n);
  if (name == "petersen") return petersen_graph();
  if (name == "petersen-line") return line_graph(hypergraph_from_graph(petersen_graph()));
  if (name == "gnp") return gnp(f.n, f.p, rng);
  if (name == "connected-gnp") return connected_gnp(f.n, f.p, rng);
  if (name == "bipartite") return random_connected_bipartite(f.a, f.b, f.p, rng);
  if (name == "maximal-outerplanar") return maximal_outerplanar(f.n, rng);
  throw GeneratorError("unknown family '" + name + "'");
}

/// Parameters that matter for the family, for reports.
inline nlohmann::json family_params(const FamilySpec& f) {
  nlohmann::json j = nlohmann::json::object();
  const auto& name = f.name;
  if (name == "complete-bipartite" || name == "bipartite") {
    j["a"] = f.a;
    j["b"] = f.b;
  } else if (name != "petersen" && name != "petersen-line") {
    j["n"] = f.n;
  }
  if (name == "gnp" || name == "connected-gnp" || name == "bipartite") j["p"] = f.p;
  return j;
}

}  // namespace strikeback
