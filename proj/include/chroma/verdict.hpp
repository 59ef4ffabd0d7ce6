// Shared result type for exhaustive theorem checks: how many instances were
// examined, any counterexamples found (each reproducible as a standalone
// DIMACS fixture), and the verdict.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

enum class VerdictStatus { kConfirmed, kRefuted, kNotApplicable };

const char* to_string(VerdictStatus s);

struct Counterexample {
  Graph graph;
  std::map<std::string, std::string> params;  // e.g. {"k","3"},{"pair","(2,5)"}
};

struct TheoremVerdict {
  std::string theorem_id;
  std::uint64_t instances_checked = 0;
  std::vector<Counterexample> counterexamples;
  VerdictStatus status = VerdictStatus::kNotApplicable;
  bool complete = true;  // false when a time budget cut the sweep short
};

}  // namespace chroma
