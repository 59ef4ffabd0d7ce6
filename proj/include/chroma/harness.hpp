// Exhaustive small-graph verification: every structural claim the library
// rests on is re-checked over all labelled graphs up to a configured order,
// with counterexamples reported as standalone DIMACS fixtures.
//
// Labelled (not isomorphism-reduced) enumeration keeps the sweep simple and
// reproducible; n <= 6 is ~34k graphs. Runs are deterministic for a fixed
// config, except that a time budget may cut a sweep short, which is always
// reported through the `complete` flag and never as a silent pass.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/verdict.hpp"
#include "json.hpp"

namespace chroma {

inline constexpr int kHarnessMaxN = 8;  // hard cap on exhaustive sweeps

enum class KPolicy {
  kChromaticOnly,  // theorems run at k = chi(G) (their stated habitat)
  kRange,          // k-independent theorems additionally run at k = 1..4
};

struct SuiteConfig {
  int max_n = 6;
  KPolicy k_policy = KPolicy::kChromaticOnly;
  std::vector<std::string> theorems;  // empty = the full registry
  std::optional<double> time_budget_seconds;
};

struct TheoremInfo {
  std::string id;
  std::string anchor;  // one-line statement of the property checked
};

// The fixed registry, in execution order. Unknown ids are refused.
const std::vector<TheoremInfo>& theorem_registry();

std::uint64_t labelled_graph_count(int n);

// All 2^(n(n-1)/2) labelled simple graphs on vertices 0..n-1, exactly once,
// in increasing edge-mask order over the lexicographic pair list. Refuses
// n > kHarnessMaxN. The visitor returns false to stop.
template <typename Visitor>
void for_each_labelled_graph(int n, Visitor&& visit) {
  if (n < 0 || n > kHarnessMaxN)
    throw RefusalError("labelled-graph enumeration supports 0 <= n <= " +
                       std::to_string(kHarnessMaxN) + ", got " +
                       std::to_string(n));
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) g.insert_edge(slots[i].first, slots[i].second);
    if (!visit(static_cast<const Graph&>(g))) return;
  }
}

// One verdict per selected theorem, in registry order.
std::vector<TheoremVerdict> run_theorem_suite(const SuiteConfig& cfg);

// True when every verdict is confirmed or not-applicable AND complete.
bool suite_passed(const std::vector<TheoremVerdict>& verdicts);

nlohmann::json counterexample_json(const Counterexample& ce);
nlohmann::json verdict_json(const TheoremVerdict& v);
nlohmann::json suite_report_json(const std::vector<TheoremVerdict>& verdicts);

}  // namespace chroma
