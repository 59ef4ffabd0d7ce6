#include "chroma/critical.hpp"

#include <algorithm>

#include "chroma/implicit.hpp"
#include "chroma/kempe.hpp"

namespace chroma {

CriticalityReport criticality_report(const Graph& g) {
  if (g.order() == 0)
    throw PreconditionError("criticality is undefined for the empty graph");
  CriticalityReport r;
  r.chi = chromatic_number(g);

  bool all_vertices_critical = true;
  for (Vertex x : g.vertices()) {
    if (chromatic_number(delete_vertex(g, x)) < r.chi)
      r.critical_vertices |= vbit(x);
    else
      all_vertices_critical = false;
  }
  bool all_edges_critical = true;
  for (auto [u, v] : g.edges()) {
    if (chromatic_number(delete_edge(g, u, v)) < r.chi)
      r.critical_edges.emplace_back(u, v);
    else
      all_edges_critical = false;
  }
  r.is_k_critical = all_vertices_critical && all_edges_critical;

  r.is_double_critical = g.is_connected();
  for (auto [u, v] : g.edges()) {
    if (!r.is_double_critical) break;
    Graph h = delete_vertices(g, vbit(u) | vbit(v));
    if (chromatic_number(h) > r.chi - 2) r.is_double_critical = false;
  }

  if (r.is_k_critical) {
    int k = r.chi;
    int n = g.order();
    int m = g.edge_count();
    if (!g.is_connected())
      r.property_violations.push_back("not connected");
    for (Vertex v : g.vertices())
      if (g.degree(v) < k - 1) {
        r.property_violations.push_back(
            "vertex " + std::to_string(v + 1) + " has degree " +
            std::to_string(g.degree(v)) + " < k-1");
        break;
      }
    if (2 * m < (k - 1) * n + k - 3)
      r.property_violations.push_back("2|E| >= (k-1)|V| + k - 3 fails");
    if (n == k + 1)
      r.property_violations.push_back("|V| = k+1");
  }
  return r;
}

TheoremVerdict no_implicit_relations_check(const Graph& g) {
  CriticalityReport cr = criticality_report(g);
  if (!cr.is_k_critical)
    throw PreconditionError(
        "the no-implicit-relations property is stated for k-critical graphs");
  int k = cr.chi;

  TheoremVerdict verdict;
  verdict.theorem_id = "critical-no-implicit-relations";
  verdict.status = VerdictStatus::kConfirmed;
  auto record = [&](Vertex u, Vertex v, const char* what) {
    verdict.status = VerdictStatus::kRefuted;
    if (verdict.counterexamples.size() < 5)
      verdict.counterexamples.push_back(Counterexample{
          g,
          {{"k", std::to_string(k)},
           {"pair",
            "(" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")"},
           {"violation", what}}});
  };

  const std::vector<Vertex> vs = g.vertices();
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      Vertex u = vs[a], v = vs[b];
      ++verdict.instances_checked;
      if (is_implicit_edge(g, k, u, v))
        record(u, v, g.has_edge(u, v) ? "drawn implicit edge"
                                      : "non-drawn implicit edge");
      if (!g.has_edge(u, v) && is_implicit_identity(g, k, u, v))
        record(u, v, "implicit identity");
    }
  return verdict;
}

GMinusReport g_minus_analysis(const Graph& g, Vertex x, Vertex y) {
  if (!g.has_edge(x, y))
    throw PreconditionError("(" + std::to_string(x) + "," + std::to_string(y) +
                            ") is not an edge");
  int k = chromatic_number(g);
  Graph minus = delete_edge(g, x, y);
  int chi_minus = chromatic_number(minus);
  if (chi_minus != k - 1)
    throw PreconditionError(
        "the edge is not critical: deleting it leaves chromatic number " +
        std::to_string(chi_minus) + ", not " + std::to_string(k - 1));

  GMinusReport report;
  report.chi_minus = chi_minus;
  report.endpoints_identity = is_implicit_identity(minus, k - 1, x, y);
  report.min_identity_chain_count = k;  // above any possible count
  report.chain_bound_holds = true;
  for_each_k_coloring(minus, k - 1, [&](const Coloring& c) {
    ++report.colorings_checked;
    ChainConnectivity cc = connecting_chain_report(minus, c, x, y);
    report.min_identity_chain_count =
        std::min(report.min_identity_chain_count, cc.identity_chain_count);
    if (cc.identity_chain_count < k - 2) report.chain_bound_holds = false;
    return true;
  });
  if (report.colorings_checked == 0) report.min_identity_chain_count = 0;
  return report;
}

TheoremVerdict critical_vertex_adjacency_check(const Graph& g) {
  TheoremVerdict verdict;
  verdict.theorem_id = "critical-vertex-adjacency";
  if (g.order() == 0) {
    verdict.status = VerdictStatus::kNotApplicable;
    return verdict;
  }
  int k = chromatic_number(g);
  VertexSet critical = 0;
  for (Vertex x : g.vertices())
    if (chromatic_number(delete_vertex(g, x)) < k) critical |= vbit(x);
  if (critical == 0) {
    verdict.status = VerdictStatus::kNotApplicable;
    return verdict;
  }
  verdict.status = VerdictStatus::kConfirmed;

  const std::vector<Vertex> vs = g.vertices();
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      Vertex u = vs[a], v = vs[b];
      bool edge_rel = is_implicit_edge(g, k, u, v);
      bool identity_rel =
          !g.has_edge(u, v) && is_implicit_identity(g, k, u, v);
      if (!edge_rel && !identity_rel) continue;
      for (VertexSet rest = critical; rest; rest &= rest - 1) {
        Vertex z = std::countr_zero(rest);
        ++verdict.instances_checked;
        bool ok = edge_rel ? (g.has_edge(z, u) || g.has_edge(z, v))
                           : (g.has_edge(z, u) && g.has_edge(z, v));
        if (!ok) {
          verdict.status = VerdictStatus::kRefuted;
          if (verdict.counterexamples.size() < 5)
            verdict.counterexamples.push_back(Counterexample{
                g,
                {{"k", std::to_string(k)},
                 {"pair", "(" + std::to_string(u + 1) + "," +
                              std::to_string(v + 1) + ")"},
                 {"criticalVertex", std::to_string(z + 1)},
                 {"relation", edge_rel ? "implicit edge" : "implicit identity"}}});
        }
      }
    }
  return verdict;
}

nlohmann::json criticality_json(const CriticalityReport& r) {
  nlohmann::json cv = nlohmann::json::array();
  for (Vertex v : to_vertex_list(r.critical_vertices)) cv.push_back(v + 1);
  nlohmann::json ce = nlohmann::json::array();
  for (auto [u, v] : r.critical_edges) ce.push_back({u + 1, v + 1});
  return nlohmann::json{{"chi", r.chi},
                        {"criticalVertices", cv},
                        {"criticalEdges", ce},
                        {"isKCritical", r.is_k_critical},
                        {"isDoubleCritical", r.is_double_critical},
                        {"propertyViolations", r.property_violations}};
}

}  // namespace chroma
