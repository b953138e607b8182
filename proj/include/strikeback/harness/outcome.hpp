#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "strikeback/family.hpp"
#include "strikeback/graph6.hpp"

namespace strikeback::harness {

enum class Verdict { pass, violation, skipped };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::violation: return "VIOLATION";
    case Verdict::skipped: return "SKIPPED";
  }
  return "?";
}

/// Enough to rebuild the graph: family + params + seed, and its graph6.
struct Instance {
  std::string family;
  nlohmann::json params = nlohmann::json::object();
  std::optional<std::uint64_t> seed;
  std::string graph6;

  static Instance of(const FamilySpec& f, const Graph& g, std::optional<std::uint64_t> seed = std::nullopt) {
    return {f.name, family_params(f), family_is_random(f.name) ? seed : std::nullopt, to_graph6(g)};
  }

  static Instance literal(const Graph& g, std::string family = "graph6", nlohmann::json params = nlohmann::json::object()) {
    return {std::move(family), std::move(params), std::nullopt, to_graph6(g)};
  }
};

inline void to_json(nlohmann::json& j, const Instance& in) {
  j = nlohmann::json{{"family", in.family}, {"params", in.params}, {"graph6", in.graph6}};
  j["seed"] = in.seed ? nlohmann::json(*in.seed) : nlohmann::json(nullptr);
}

struct CheckOutcome {
  std::string check;
  Instance instance;
  nlohmann::json quantities = nlohmann::json::object();
  Verdict verdict = Verdict::skipped;
  std::string note;
};

inline void to_json(nlohmann::json& j, const CheckOutcome& o) {
  j = nlohmann::json{{"check", o.check},
                     {"instance", o.instance},
                     {"quantities", o.quantities},
                     {"verdict", to_string(o.verdict)},
                     {"note", o.note}};
}

/// Checks whose violations are collected as discrepancies rather than
/// counted as failures.
inline bool is_report_only(const std::string& check) { return check == "girth_bound"; }

}  // namespace strikeback::harness
