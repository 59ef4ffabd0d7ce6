// Criticality analysis: critical vertices and edges (deleting them lowers the
// chromatic number), k-critical and double-critical recognition, the known
// structural properties of k-critical graphs, the absence of implicit
// relations in critical graphs, and the structure of a critical graph with
// one critical edge removed.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chroma/coloring.hpp"
#include "chroma/graph.hpp"
#include "chroma/verdict.hpp"
#include "json.hpp"

namespace chroma {

struct CriticalityReport {
  int chi = 0;
  VertexSet critical_vertices = 0;
  std::vector<std::pair<Vertex, Vertex>> critical_edges;
  bool is_k_critical = false;
  // Connected and every edge's endpoint pair leaves a (k-2)-colorable rest.
  // Connectivity is part of the definition; without it graphs with isolated
  // vertices would qualify vacuously without being k-critical.
  bool is_double_critical = false;
  // Violated structural properties, only populated for k-critical graphs.
  std::vector<std::string> property_violations;
};

// Requires a nonempty graph.
CriticalityReport criticality_report(const Graph& g);

// For a k-critical graph at k = chi: deleting any edge must permit a
// same-colored k-coloring of its endpoints, and every non-adjacent pair must
// admit both same-colored and distinct-colored k-colorings. Requires
// criticality_report(g).is_k_critical.
TheoremVerdict no_implicit_relations_check(const Graph& g);

struct GMinusReport {
  int chi_minus = 0;            // k-1 by construction
  bool endpoints_identity = false;
  std::uint64_t colorings_checked = 0;
  int min_identity_chain_count = 0;
  bool chain_bound_holds = false;  // identity-chain-count >= k-2 throughout
};

// Remove the critical edge (x,y) of a k-chromatic graph and analyze the
// (k-1)-chromatic remainder: the endpoints must form an implicit identity and
// stay joined by at least k-2 chains in every (k-1)-coloring. Errors when the
// edge is missing or not critical (naming the actual chi of g-xy).
GMinusReport g_minus_analysis(const Graph& g, Vertex x, Vertex y);

// For every critical vertex z at k = chi: every implicit edge must have an
// endpoint adjacent to z and every implicit identity must have both endpoints
// adjacent to z. Not-applicable when no vertex is critical.
TheoremVerdict critical_vertex_adjacency_check(const Graph& g);

// Mirrors the report fields; 1-based vertex labels.
nlohmann::json criticality_json(const CriticalityReport& r);

}  // namespace chroma
