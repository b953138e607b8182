#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "strikeback/family.hpp"
#include "strikeback/harness/checks.hpp"
#include "strikeback/harness/shadow.hpp"

namespace strikeback::harness {

inline int default_jobs() { return std::max(1, static_cast<int>(std::thread::hardware_concurrency())); }

/// Runs fn(i) for i in [0, count) on up to `jobs` threads.
inline void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  const auto workers = static_cast<std::size_t>(std::clamp(jobs, 1, 256));
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < std::min(workers, count); ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  pool.clear();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// A generated graph with its reproducible descriptor.
struct CorpusInstance {
  Instance instance;
  Graph graph;
};

struct CorpusSpec {
  FamilySpec family;
  int count = 0;
  std::uint64_t seed = 0;
};

inline nlohmann::json corpus_spec_json(const CorpusSpec& s) {
  return {{"family", s.family.name}, {"params", family_params(s.family)}, {"count", s.count}, {"seed", s.seed}};
}

/// Instance i uses instance_seed(seed, i), so any member can be rebuilt
/// from its own descriptor.
inline std::vector<CorpusInstance> generate_corpus(const CorpusSpec& spec) {
  std::vector<CorpusInstance> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  for (int i = 0; i < spec.count; ++i) {
    const auto seed = instance_seed(spec.seed, static_cast<std::uint64_t>(i));
    Graph g = generate(spec.family, seed);
    out.push_back({Instance::of(spec.family, g, seed), std::move(g)});
  }
  return out;
}

using Check = std::function<CheckOutcome(GraphFacts&, const Instance&)>;

/// Named checks usable on arbitrary corpus members.
inline const std::map<std::string, Check>& check_registry() {
  static const std::map<std::string, Check> registry{
      {"sandwich", check_sandwich},
      {"cc1_cc2", check_cc1_and_cc2},
      {"girth_bound", check_girth_bound},
      {"bipartite_bound", check_bipartite_bound},
      {"k1m_diam2", [](GraphFacts& f, const Instance& in) { return check_k1m_diam2(f, in); }},
      {"outerplanar_bound", check_outerplanar_bound},
      {"shadow_strategy", [](GraphFacts& f, const Instance& in) { return shadow_strategy_exhaustive(f, in).outcome; }},
      {"guard_paths", [](GraphFacts& f, const Instance& in) { return check_guard_paths(f, in); }},
      {"guard_paths_classic",
       [](GraphFacts& f, const Instance& in) { return check_guard_paths(f, in, 1, Variant::classic); }},
      {"oracle_equivalence", check_oracle_equivalence},
  };
  return registry;
}

inline const Check& find_check(const std::string& name) {
  const auto& reg = check_registry();
  const auto it = reg.find(name);
  if (it == reg.end()) throw std::invalid_argument("unknown check '" + name + "'");
  return it->second;
}

/// Runs each check on each instance; outcomes ordered by (instance, check).
/// Errors inside a check (budget, size limits) become SKIPPED outcomes.
inline std::vector<CheckOutcome> run_checks(const std::vector<CorpusInstance>& instances,
                                            const std::vector<std::string>& checks, const SolveOptions& options,
                                            int jobs) {
  std::vector<const Check*> fns;
  for (const auto& name : checks) fns.push_back(&find_check(name));
  std::vector<std::vector<CheckOutcome>> slots(instances.size());
  parallel_for(instances.size(), jobs, [&](std::size_t i) {
    GraphFacts facts(instances[i].graph, options);
    for (std::size_t c = 0; c < fns.size(); ++c) {
      try {
        slots[i].push_back((*fns[c])(facts, instances[i].instance));
      } catch (const std::exception& e) {
        auto o = make_outcome(checks[c], instances[i].instance);
        o.verdict = Verdict::skipped;
        o.note = std::string("error: ") + e.what();
        slots[i].push_back(std::move(o));
      }
    }
  });
  std::vector<CheckOutcome> out;
  for (auto& s : slots)
    for (auto& o : s) out.push_back(std::move(o));
  return out;
}

struct Tally {
  int pass = 0;
  int violation = 0;
  int skipped = 0;
  int discrepancies = 0;  // violations of report-only checks

  void add(const CheckOutcome& o) {
    switch (o.verdict) {
      case Verdict::pass: ++pass; break;
      case Verdict::skipped: ++skipped; break;
      case Verdict::violation:
        if (is_report_only(o.check))
          ++discrepancies;
        else
          ++violation;
        break;
    }
  }
};

/// cc/c ratios bucketed to two decimals, over outcomes that computed both.
inline std::map<std::string, int> ratio_histogram(const std::vector<CheckOutcome>& outcomes) {
  std::map<std::string, int> hist;
  for (const auto& o : outcomes) {
    const auto& q = o.quantities;
    if (!q.contains("c") || !q.contains("cc")) continue;
    const double ratio = q["cc"].get<double>() / q["c"].get<double>();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", std::round(ratio * 100.0) / 100.0);
    ++hist[buf];
  }
  return hist;
}

struct AggregateReport {
  nlohmann::json spec;
  std::vector<CheckOutcome> outcomes;
  Tally tally;
  std::map<std::string, int> ratios;
  double elapsed_ms = 0.0;
};

inline AggregateReport run_corpus(const CorpusSpec& spec, const std::vector<std::string>& checks,
                                  const SolveOptions& options = {}, int jobs = 1) {
  const auto start = std::chrono::steady_clock::now();
  AggregateReport r;
  r.spec = corpus_spec_json(spec);
  r.spec["checks"] = checks;
  r.outcomes = run_checks(generate_corpus(spec), checks, options, jobs);
  for (const auto& o : r.outcomes) r.tally.add(o);
  r.ratios = ratio_histogram(r.outcomes);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// `with_timing` adds elapsed_ms; without it the JSON is byte-deterministic.
inline nlohmann::json to_json(const AggregateReport& r, bool with_timing) {
  nlohmann::json j{{"spec", r.spec},
                   {"outcomes", r.outcomes},
                   {"pass", r.tally.pass},
                   {"violation", r.tally.violation},
                   {"skipped", r.tally.skipped},
                   {"discrepancies", r.tally.discrepancies},
                   {"ratio_histogram", r.ratios}};
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace strikeback::harness
