#include "chroma/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "chroma/coloring.hpp"
#include "chroma/critical.hpp"
#include "chroma/implicit.hpp"
#include "chroma/io.hpp"
#include "chroma/kempe.hpp"
#include "chroma/polynomial.hpp"

namespace chroma {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  std::optional<Clock::time_point> end;
  bool expired() const { return end && Clock::now() >= *end; }
};

std::string pair_str(Vertex u, Vertex v) {
  return "(" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")";
}

std::string set_str(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : to_vertex_list(s)) {
    if (!first) out += ",";
    out += std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

void record(TheoremVerdict& v, const Graph& g,
            std::map<std::string, std::string> params) {
  v.status = VerdictStatus::kRefuted;
  if (v.counterexamples.size() < 5)
    v.counterexamples.push_back(Counterexample{g, std::move(params)});
}

void finalize(TheoremVerdict& v) {
  if (v.status == VerdictStatus::kRefuted) return;
  v.status = v.instances_checked == 0 ? VerdictStatus::kNotApplicable
                                      : VerdictStatus::kConfirmed;
}

// Run per_graph over every labelled graph with min_n..max_n vertices,
// honoring the deadline.
template <typename PerGraph>
void sweep(const SuiteConfig& cfg, const Deadline& dl, TheoremVerdict& v,
           int min_n, PerGraph&& per_graph) {
  for (int n = min_n; n <= cfg.max_n && v.complete; ++n) {
    for_each_labelled_graph(n, [&](const Graph& g) {
      if (dl.expired()) {
        v.complete = false;
        return false;
      }
      per_graph(g);
      return true;
    });
  }
}

// Which color counts a k-independent theorem is exercised at.
std::vector<int> ks_for(const SuiteConfig& cfg, int chi) {
  if (cfg.k_policy == KPolicy::kChromaticOnly) return {chi};
  std::vector<int> ks{1, 2, 3, 4};
  if (chi >= 1 && std::find(ks.begin(), ks.end(), chi) == ks.end())
    ks.push_back(chi);
  return ks;
}

// chi(G - D) for every vertex subset D; graphs from the sweep have labels
// 0..n-1, so the subset mask doubles as the table index.
std::vector<int> chi_minus_table(const Graph& g) {
  std::vector<int> table(std::size_t{1} << g.order());
  for (std::uint64_t d = 0; d < table.size(); ++d)
    table[d] = chromatic_number(delete_vertices(g, d));
  return table;
}

struct PairInfo {
  Vertex u = -1, v = -1;
  bool drawn = false;
  bool implicit_edge = false;
  bool implicit_identity = false;
};

std::vector<PairInfo> pair_relations(const Graph& g, int k) {
  std::vector<PairInfo> out;
  const std::vector<Vertex> vs = g.vertices();
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      PairInfo p;
      p.u = vs[a];
      p.v = vs[b];
      p.drawn = g.has_edge(p.u, p.v);
      p.implicit_edge = is_implicit_edge(g, k, p.u, p.v);
      p.implicit_identity =
          !p.drawn && is_implicit_identity(g, k, p.u, p.v);
      out.push_back(p);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Theorem checkers
// ---------------------------------------------------------------------------

TheoremVerdict check_independent_set_superset(const SuiteConfig& cfg,
                                              const Deadline& dl) {
  TheoremVerdict v;
  v.theorem_id = "independent-set-superset";
  sweep(cfg, dl, v, 1, [&](const Graph& g) {
    std::uint64_t family_g = 0;
    for_each_independent_set(g, [&](IndependentSet) { ++family_g; });

    auto check_embed = [&](const Graph& h, const std::string& op,
                           const std::string& arg) {
      ++v.instances_checked;
      std::uint64_t family_h = 0;
      bool contained = true;
      for_each_independent_set(h, [&](IndependentSet s) {
        ++family_h;
        if (!is_independent_set(g, s.members)) contained = false;
      });
      if (!contained)
        record(v, g, {{"op", op}, {"arg", arg},
                      {"violation", "result set not independent in input"}});
      if (family_h >= family_g)
        record(v, g, {{"op", op}, {"arg", arg},
                      {"violation", "independent-set family did not shrink"}});
    };

    const std::vector<Vertex> vs = g.vertices();
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b)
        if (!g.has_edge(vs[a], vs[b]))
          check_embed(add_edge(g, vs[a], vs[b]).graph, "add-edge",
                      pair_str(vs[a], vs[b]));
    for (Vertex x : vs)
      check_embed(delete_vertex(g, x), "delete-vertex", std::to_string(x + 1));
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b)
        check_embed(identify_vertices(g, vs[a], vs[b]).graph, "identify",
                    pair_str(vs[a], vs[b]));
    for (auto [x, y] : g.edges())
      check_embed(contract_edge(g, x, y).graph, "contract", pair_str(x, y));
  });
  finalize(v);
  return v;
}

TheoremVerdict check_ie_independent_sets(const SuiteConfig& cfg,
                                         const Deadline& dl) {
  TheoremVerdict v;
  v.theorem_id = "implicit-edge-independent-sets";
  sweep(cfg, dl, v, 2, [&](const Graph& g) {
    int chi = chromatic_number(g);
    std::vector<int> table = chi_minus_table(g);
    for (int k : ks_for(cfg, chi)) {
      const std::vector<Vertex> vs = g.vertices();
      for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
          Vertex i = vs[a], j = vs[b];
          ++v.instances_checked;
          bool lhs = is_implicit_edge(g, k, i, j);
          Graph gm = g.has_edge(i, j) ? delete_edge(g, i, j) : g;
          bool lowering_set = false;
          VertexSet others = g.vertex_set() & ~(vbit(i) | vbit(j));
          for (VertexSet sub = others;; sub = (sub - 1) & others) {
            VertexSet d = sub | vbit(i) | vbit(j);
            if (is_independent_set(gm, d) && table[d] < k) {
              lowering_set = true;
              break;
            }
            if (sub == 0) break;
          }
          if (lhs == lowering_set)
            record(v, g,
                   {{"k", std::to_string(k)}, {"pair", pair_str(i, j)},
                    {"violation", lhs ? "implicit edge yet a lowering set "
                                        "contains both endpoints"
                                      : "no lowering set yet not an implicit "
                                        "edge"}});
        }
    }
  });
  finalize(v);
  return v;
}

TheoremVerdict check_ie_invariant(const SuiteConfig& cfg, const Deadline& dl) {
  TheoremVerdict v;
  v.theorem_id = "implicit-edge-invariant";
  sweep(cfg, dl, v, 2, [&](const Graph& g) {
    int k = chromatic_number(g);
    if (k < 2) return;
    std::vector<PairInfo> pairs = pair_relations(g, k);
    std::vector<PairInfo> implicit;
    for (const PairInfo& p : pairs)
      if (p.implicit_edge) implicit.push_back(p);
    if (implicit.empty()) return;
    std::vector<int> table = chi_minus_table(g);
    for_each_independent_set(g, [&](IndependentSet s) {
      if (s.members == 0 || table[s.members] != k - 1) return;
      Graph h = delete_vertices(g, s.members);
      for (const PairInfo& p : implicit) {
        if (s.members & (vbit(p.u) | vbit(p.v))) continue;
        ++v.instances_checked;
        if (!is_implicit_edge(h, k - 1, p.u, p.v))
          record(v, g,
                 {{"k", std::to_string(k)},
                  {"pair", pair_str(p.u, p.v)},
                  {"criticalSet", set_str(s.members)},
                  {"violation", "implicit edge lost after removing a "
                                "critical independent set"}});
      }
    });
  });
  finalize(v);
  return v;
}

// Shared by the edge and identity parity characterizations. A drawn pair is
// handled inside G-ij throughout, mirroring the definitions.
TheoremVerdict check_bipartite(const SuiteConfig& cfg, const Deadline& dl,
                               bool edge_theorem) {
  TheoremVerdict v;
  v.theorem_id = edge_theorem ? "implicit-edge-bipartite"
                              : "implicit-identity-bipartite";
  sweep(cfg, dl, v, 2, [&](const Graph& g) {
    int k = chromatic_number(g);
    if (k < 2) return;
    std::vector<PairInfo> pairs = pair_relations(g, k);

    // Colorings of g, shared by every non-drawn pair.
    std::vector<std::vector<VertexSet>> base_classes;
    for_each_k_coloring(g, k, [&](const Coloring& c) {
      base_classes.push_back(c.classes());
      return true;
    });

    for (const PairInfo& p : pairs) {
      if (!edge_theorem && p.drawn) continue;
      ++v.instances_checked;

      const Graph base = p.drawn ? delete_edge(g, p.u, p.v) : g;
      const std::vector<std::vector<VertexSet>>* classes = &base_classes;
      std::vector<std::vector<VertexSet>> own;
      if (p.drawn) {
        for_each_k_coloring(base, k, [&](const Coloring& c) {
          own.push_back(c.classes());
          return true;
        });
        classes = &own;
      }

      bool relation = edge_theorem ? p.implicit_edge : p.implicit_identity;
      BipartiteRelation forced = edge_theorem
                                     ? BipartiteRelation::kOppositeSide
                                     : BipartiteRelation::kSameSide;
      bool always_forced = true;
      for (const std::vector<VertexSet>& cls : *classes) {
        for (VertexSet del : class_deletion_choices(cls, p.u, p.v, k)) {
          if (bipartite_relation(delete_vertices(base, del), p.u, p.v) !=
              forced) {
            always_forced = false;
            break;
          }
        }
        if (!always_forced) break;  // violation or witness, either is final
      }
      if (relation && !always_forced)
        record(v, g,
               {{"k", std::to_string(k)}, {"pair", pair_str(p.u, p.v)},
                {"violation", edge_theorem
                                  ? "implicit edge not forced to odd parity"
                                  : "implicit identity not forced to even "
                                    "parity"}});
      if (!relation && always_forced)
        record(v, g,
               {{"k", std::to_string(k)}, {"pair", pair_str(p.u, p.v)},
                {"violation", edge_theorem
                                  ? "non-implicit pair always forced to odd "
                                    "parity"
                                  : "non-identity pair always forced to even "
                                    "parity"}});
    }
  });
  finalize(v);
  return v;
}

TheoremVerdict check_ii_independent_sets(const SuiteConfig& cfg,
                                         const Deadline& dl) {
  TheoremVerdict v;
  v.theorem_id = "implicit-identity-independent-sets";
  sweep(cfg, dl, v, 2, [&](const Graph& g) {
    int chi = chromatic_number(g);
    std::vector<int> table = chi_minus_table(g);
    for (int k : ks_for(cfg, chi)) {
      const std::vector<Vertex> vs = g.vertices();
      for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
          Vertex i = vs[a], j = vs[b];
          if (g.has_edge(i, j)) continue;
          ++v.instances_checked;
          bool lhs = is_implicit_identity(g, k, i, j);
          bool lowering_set = false;
          VertexSet others = g.vertex_set() & ~(vbit(i) | vbit(j));
          for (VertexSet sub = others;; sub = (sub - 1) & others) {
            for (VertexSet one : {vbit(i), vbit(j)}) {
              VertexSet d = sub | one;
              if (is_independent_set(g, d) && table[d] < k) {
                lowering_set = true;
                break;
              }
            }
            if (lowering_set || sub == 0) break;
          }
          if (lhs == lowering_set)
            record(v, g,
                   {{"k", std::to_string(k)}, {"pair", pair_str(i, j)},
                    {"violation",
                     lhs ? "implicit identity yet a lowering set splits the "
                           "pair"
                         : "no splitting lowering set yet not an implicit "
                           "identity"}});
        }
    }
  });
  finalize(v);
  return v;
}

TheoremVerdict check_ii_invariant(const SuiteConfig& cfg, const Deadline& dl) {
  TheoremVerdict v;
  v.theorem_id = "implicit-identity-invariant";
  sweep(cfg, dl, v, 2, [&](const Graph& g) {
    int k = chromatic_number(g);
    if (k < 2) return;
    std::vector<PairInfo> pairs = pair_relations(g, k);
    std::vector<PairInfo> identities;
    for (const PairInfo& p : pairs)
      if (p.implicit_identity) identities.push_back(p);
    if (identities.empty()) return;
    std::vector<int> table = chi_minus_table(g);
    for_each_independent_set(g, [&](IndependentSet s) {
      if (s.members == 0 || table[s.members] != k - 1) return;
      Graph h = delete_vertices(g, s.members);
      for (const PairInfo& p : identities) {
        if (s.members & (vbit(p.u) | vbit(p.v))) continue;
        ++v.instances_checked;
        if (!is_implicit_identity(h, k - 1, p.u, p.v))
          record(v, g,
                 {{"k", std::to_string(k)},
                  {"pair", pair_str(p.u, p.v)},
                  {"criticalSet", set_str(s.members)},
                  {"violation", "implicit identity lost after removing a "
                                "critical independent set"}});
      }
    });
  });
  finalize(v);
  return v;
}

TheoremVerdict check_frt_deletion_contraction(const SuiteConfig& cfg,
                                              const Deadline& dl) {
  TheoremVerdict v;
  v.theorem_id = "frt-deletion-contraction";
  sweep(cfg, dl, v, 2, [&](const Graph& g) {
    if (g.edge_count() == 0) return;
    ChromaticPolynomial p = chromatic_polynomial(g);
    for (auto [x, y] : g.edges()) {
      ++v.instances_checked;
      ChromaticPolynomial rhs = chromatic_polynomial(delete_edge(g, x, y)) -
                                chromatic_polynomial(contract_edge(g, x, y).graph);
      if (p != rhs)
        record(v, g, {{"edge", pair_str(x, y)},
                      {"violation", "deletion-contraction identity fails"}});
    }
  });
  finalize(v);
  return v;
}

TheoremVerdict check_frt_addition_contraction(const SuiteConfig& cfg,
                                              const Deadline& dl) {
  TheoremVerdict v;
  v.theorem_id = "frt-addition-contraction";
  sweep(cfg, dl, v, 2, [&](const Graph& g) {
    const std::vector<Vertex> vs = g.vertices();
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        if (g.has_edge(vs[a], vs[b])) continue;
        ++v.instances_checked;
        if (!check_addition_contraction(g, vs[a], vs[b]))
          record(v, g, {{"pair", pair_str(vs[a], vs[b])},
                        {"violation", "addition-contraction identity fails"}});
      }
  });
  finalize(v);
  return v;
}

TheoremVerdict check_frt_implicit_edge(const SuiteConfig& cfg,
                                       const Deadline& dl) {
  TheoremVerdict v;
  v.theorem_id = "frt-implicit-edge";
  sweep(cfg, dl, v, 2, [&](const Graph& g) {
    int chi = chromatic_number(g);
    for (int k : ks_for(cfg, chi))
      for (const PairInfo& p : pair_relations(g, k)) {
        if (!p.implicit_edge) continue;
        ++v.instances_checked;
        Graph gm = p.drawn ? delete_edge(g, p.u, p.v) : g;
        Graph contracted = identify_vertices(gm, p.u, p.v).graph;
        if (evaluate(chromatic_polynomial(contracted), k) != 0)
          record(v, g,
                 {{"k", std::to_string(k)}, {"pair", pair_str(p.u, p.v)},
                  {"violation", "P(G/e,k) != 0 for an implicit edge"}});
      }
  });
  finalize(v);
  return v;
}

TheoremVerdict check_frt_implicit_edge_corollary(const SuiteConfig& cfg,
                                                 const Deadline& dl) {
  TheoremVerdict v;
  v.theorem_id = "frt-implicit-edge-corollary";
  sweep(cfg, dl, v, 2, [&](const Graph& g) {
    int k = chromatic_number(g);  // stated for k-chromatic graphs only
    for (const PairInfo& p : pair_relations(g, k)) {
      if (!p.implicit_edge) continue;
      ++v.instances_checked;
      Graph gm = p.drawn ? delete_edge(g, p.u, p.v) : g;
      Graph contracted = identify_vertices(gm, p.u, p.v).graph;
      if (chromatic_number(contracted) != k + 1)
        record(v, g,
               {{"k", std::to_string(k)}, {"pair", pair_str(p.u, p.v)},
                {"violation",
                 "contracting an implicit edge did not give a (k+1)-chromatic "
                 "graph"}});
    }
  });
  finalize(v);
  return v;
}

TheoremVerdict check_frt_implicit_identity(const SuiteConfig& cfg,
                                           const Deadline& dl) {
  TheoremVerdict v;
  v.theorem_id = "frt-implicit-identity";
  sweep(cfg, dl, v, 2, [&](const Graph& g) {
    int chi = chromatic_number(g);
    for (int k : ks_for(cfg, chi)) {
      ChromaticPolynomial pg = chromatic_polynomial(g);
      for (const PairInfo& p : pair_relations(g, k)) {
        if (!p.implicit_identity) continue;
        ++v.instances_checked;
        Graph merged = identify_vertices(g, p.u, p.v).graph;
        if (evaluate(pg, k) != evaluate(chromatic_polynomial(merged), k))
          record(v, g,
                 {{"k", std::to_string(k)}, {"pair", pair_str(p.u, p.v)},
                  {"violation",
                   "P(G,k) != P(G/e,k) for an implicit identity"}});
      }
    }
  });
  finalize(v);
  return v;
}

TheoremVerdict check_kempe_implicit_edge(const SuiteConfig& cfg,
                                         const Deadline& dl) {
  TheoremVerdict v;
  v.theorem_id = "kempe-implicit-edge";
  sweep(cfg, dl, v, 2, [&](const Graph& g) {
    int chi = chromatic_number(g);
    for (int k : ks_for(cfg, chi)) {
      std::vector<PairInfo> pairs = pair_relations(g, k);
      bool any_edge = false, any_witness_pair = false;
      for (const PairInfo& p : pairs) {
        any_edge |= p.implicit_edge;
        any_witness_pair |= !p.implicit_edge && !p.drawn;
      }
      if (!any_edge && !any_witness_pair) continue;
      std::vector<Coloring> colorings;
      for_each_k_coloring(g, k, [&](const Coloring& c) {
        colorings.push_back(c);
        return true;
      });
      for (const PairInfo& p : pairs) {
        if (p.implicit_edge) {
          ++v.instances_checked;
          for (const Coloring& c : colorings) {
            if (!connecting_chain_report(g, c, p.u, p.v).edge_chain) {
              record(v, g,
                     {{"k", std::to_string(k)}, {"pair", pair_str(p.u, p.v)},
                      {"violation",
                       "coloring without a chain joining an implicit edge"}});
              break;
            }
          }
        } else if (!p.drawn && !colorings.empty()) {
          // Contrapositive witness: some coloring either colors the pair
          // alike outright, or a chain flip produces one that does.
          ++v.instances_checked;
          bool witness = false;
          bool flip_failed = false;
          for (const Coloring& c : colorings) {
            if (c.color_of(p.u) == c.color_of(p.v)) {
              witness = true;
              break;
            }
            if (!connecting_chain_report(g, c, p.u, p.v).edge_chain) {
              KempeChain chain = kempe_chain(g, c, p.v, c.color_of(p.u),
                                             c.color_of(p.v));
              Coloring flipped = flip_chain(c, chain);
              if (is_proper(g, flipped) &&
                  flipped.color_of(p.u) == flipped.color_of(p.v)) {
                witness = true;
              } else {
                flip_failed = true;
                record(v, g,
                       {{"k", std::to_string(k)}, {"pair", pair_str(p.u, p.v)},
                        {"violation", "flipping a separating chain failed to "
                                      "equalize a non-implicit pair"}});
              }
              break;
            }
          }
          if (!witness && !flip_failed)
            record(v, g,
                   {{"k", std::to_string(k)}, {"pair", pair_str(p.u, p.v)},
                    {"violation", "no same-colored coloring reachable for a "
                                  "non-implicit pair"}});
        }
      }
    }
  });
  finalize(v);
  return v;
}

TheoremVerdict check_kempe_implicit_identity(const SuiteConfig& cfg,
                                             const Deadline& dl) {
  TheoremVerdict v;
  v.theorem_id = "kempe-implicit-identity";
  sweep(cfg, dl, v, 2, [&](const Graph& g) {
    int chi = chromatic_number(g);
    for (int k : ks_for(cfg, chi)) {
      std::vector<PairInfo> pairs = pair_relations(g, k);
      std::vector<PairInfo> identities;
      for (const PairInfo& p : pairs)
        if (p.implicit_identity) identities.push_back(p);
      if (identities.empty()) continue;
      std::vector<Coloring> colorings;
      for_each_k_coloring(g, k, [&](const Coloring& c) {
        colorings.push_back(c);
        return true;
      });
      for (const PairInfo& p : identities) {
        ++v.instances_checked;
        for (const Coloring& c : colorings) {
          ChainConnectivity cc = connecting_chain_report(g, c, p.u, p.v);
          if (cc.identity_chain_count < k - 1) {
            record(v, g,
                   {{"k", std::to_string(k)}, {"pair", pair_str(p.u, p.v)},
                    {"chains", std::to_string(cc.identity_chain_count)},
                    {"violation",
                     "fewer than k-1 chains join an implicit identity"}});
            break;
          }
        }
      }
    }
  });
  finalize(v);
  return v;
}

TheoremVerdict check_critical_no_implicit(const SuiteConfig& cfg,
                                          const Deadline& dl) {
  TheoremVerdict v;
  v.theorem_id = "critical-no-implicit-relations";
  sweep(cfg, dl, v, 1, [&](const Graph& g) {
    int chi = chromatic_number(g);
    // Cheap pre-filters: k-critical graphs are connected with min degree
    // >= k-1 (K1 is the lone chi=1 critical graph).
    if (g.order() > 1 && !g.is_connected()) return;
    for (Vertex x : g.vertices())
      if (g.degree(x) < chi - 1) return;
    CriticalityReport cr = criticality_report(g);
    if (!cr.is_k_critical) return;
    TheoremVerdict sub = no_implicit_relations_check(g);
    v.instances_checked += sub.instances_checked;
    if (sub.status == VerdictStatus::kRefuted) {
      v.status = VerdictStatus::kRefuted;
      for (Counterexample& ce : sub.counterexamples)
        if (v.counterexamples.size() < 5)
          v.counterexamples.push_back(std::move(ce));
    }
    // A nonempty critical graph is itself one instance even when it has no
    // vertex pairs (K1).
    if (sub.instances_checked == 0) ++v.instances_checked;
  });
  finalize(v);
  return v;
}

TheoremVerdict check_closure_completeness(const SuiteConfig& cfg,
                                          const Deadline& dl) {
  TheoremVerdict v;
  v.theorem_id = "closure-completeness";
  sweep(cfg, dl, v, 4, [&](const Graph& g) {
    ++v.instances_checked;
    bool three_colorable = is_k_colorable(g, 3);
    ThreeColorVerdict verdict = closure_completeness_test(g);
    bool claims_colorable = verdict == ThreeColorVerdict::kThreeColorable;
    if (claims_colorable != three_colorable)
      record(v, g,
             {{"chi", std::to_string(chromatic_number(g))},
              {"violation", claims_colorable
                                ? "closure not complete yet not 3-colorable"
                                : "closure complete yet 3-colorable"}});
  });
  finalize(v);
  return v;
}

TheoremVerdict check_contradiction_test(const SuiteConfig& cfg,
                                        const Deadline& dl) {
  TheoremVerdict v;
  v.theorem_id = "contradiction-test";
  sweep(cfg, dl, v, 2, [&](const Graph& g) {
    const std::vector<Vertex> vs = g.vertices();
    for (int k = 1; k <= 4; ++k) {
      bool colorable = is_k_colorable(g, k);
      for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
          if (g.has_edge(vs[a], vs[b])) continue;
          ++v.instances_checked;
          if (contradiction_test(g, k, vs[a], vs[b]) != !colorable)
            record(v, g,
                   {{"k", std::to_string(k)}, {"pair", pair_str(vs[a], vs[b])},
                    {"violation",
                     "contradiction test disagrees with k-colorability"}});
        }
    }
  });
  finalize(v);
  return v;
}

TheoremVerdict check_critical_vertex_adjacency(const SuiteConfig& cfg,
                                               const Deadline& dl) {
  TheoremVerdict v;
  v.theorem_id = "critical-vertex-adjacency";
  sweep(cfg, dl, v, 2, [&](const Graph& g) {
    TheoremVerdict sub = critical_vertex_adjacency_check(g);
    if (sub.status == VerdictStatus::kNotApplicable) return;
    v.instances_checked += sub.instances_checked;
    if (sub.status == VerdictStatus::kRefuted) {
      v.status = VerdictStatus::kRefuted;
      for (Counterexample& ce : sub.counterexamples)
        if (v.counterexamples.size() < 5)
          v.counterexamples.push_back(std::move(ce));
    }
  });
  finalize(v);
  return v;
}

struct RegistryEntry {
  TheoremInfo info;
  std::function<TheoremVerdict(const SuiteConfig&, const Deadline&)> run;
};

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = {
      {{"independent-set-superset",
        "no edit among edge insertion, vertex deletion, identification and "
        "contraction creates a new independent set; genuine edits strictly "
        "shrink the family"},
       check_independent_set_superset},
      {{"implicit-edge-independent-sets",
        "a pair is an implicit edge iff no independent set containing both "
        "endpoints lowers the chromatic number when removed"},
       check_ie_independent_sets},
      {{"implicit-edge-invariant",
        "removing any critical independent set keeps every surviving "
        "implicit edge implicit at k-1"},
       check_ie_invariant},
      {{"implicit-edge-bipartite",
        "a pair is an implicit edge iff every deletion of k-2 color classes "
        "leaves its endpoints joined by odd-length paths only"},
       [](const SuiteConfig& c, const Deadline& d) {
         return check_bipartite(c, d, true);
       }},
      {{"implicit-identity-independent-sets",
        "a non-adjacent pair is an implicit identity iff no independent set "
        "containing exactly one endpoint lowers the chromatic number when "
        "removed"},
       check_ii_independent_sets},
      {{"implicit-identity-invariant",
        "removing any critical independent set avoiding both endpoints keeps "
        "an implicit identity implicit at k-1"},
       check_ii_invariant},
      {{"implicit-identity-bipartite",
        "a non-adjacent pair is an implicit identity iff every deletion of "
        "k-2 color classes avoiding it leaves its endpoints joined by "
        "even-length paths"},
       [](const SuiteConfig& c, const Deadline& d) {
         return check_bipartite(c, d, false);
       }},
      {{"frt-deletion-contraction",
        "P(G) = P(G-e) - P(G/e) as polynomials for every edge e"},
       check_frt_deletion_contraction},
      {{"frt-addition-contraction",
        "P(G) = P(G+e) + P(G/e) as polynomials for every non-edge e"},
       check_frt_addition_contraction},
      {{"frt-implicit-edge",
        "contracting an implicit edge of a k-chromatic graph yields "
        "P(G/e,k) = 0"},
       check_frt_implicit_edge},
      {{"frt-implicit-edge-corollary",
        "contracting an implicit edge of a k-chromatic graph yields a "
        "(k+1)-chromatic graph"},
       check_frt_implicit_edge_corollary},
      {{"frt-implicit-identity",
        "an implicit identity satisfies P(G,k) = P(G/e,k) at its defining k"},
       check_frt_implicit_identity},
      {{"kempe-implicit-edge",
        "an implicit edge's endpoints share a two-colored chain in every "
        "proper k-coloring; otherwise a chain flip equalizes the pair"},
       check_kempe_implicit_edge},
      {{"kempe-implicit-identity",
        "an implicit identity's endpoints share a chain for at least k-1 "
        "partner colors in every proper k-coloring"},
       check_kempe_implicit_identity},
      {{"critical-no-implicit-relations",
        "k-critical graphs carry no implicit edges and no implicit "
        "identities"},
       check_critical_no_implicit},
      {{"closure-completeness",
        "a graph on at least 4 vertices is 3-colorable iff its k=3 explicit "
        "closure is not complete"},
       check_closure_completeness},
      {{"contradiction-test",
        "a non-adjacent pair that is both an implicit edge and an implicit "
        "identity certifies that no k-coloring exists"},
       check_contradiction_test},
      {{"critical-vertex-adjacency",
        "a critical vertex is adjacent to an endpoint of every implicit edge "
        "and to both endpoints of every implicit identity"},
       check_critical_vertex_adjacency},
  };
  return entries;
}

}  // namespace

const std::vector<TheoremInfo>& theorem_registry() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> out;
    for (const RegistryEntry& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

std::uint64_t labelled_graph_count(int n) {
  if (n < 0 || n > kHarnessMaxN)
    throw RefusalError("labelled-graph enumeration supports 0 <= n <= " +
                       std::to_string(kHarnessMaxN));
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

std::vector<TheoremVerdict> run_theorem_suite(const SuiteConfig& cfg) {
  if (cfg.max_n < 1 || cfg.max_n > kHarnessMaxN)
    throw RefusalError("max_n must lie in 1.." + std::to_string(kHarnessMaxN) +
                       ", got " + std::to_string(cfg.max_n));
  std::vector<const RegistryEntry*> selected;
  if (cfg.theorems.empty()) {
    for (const RegistryEntry& e : registry()) selected.push_back(&e);
  } else {
    for (const std::string& id : cfg.theorems) {
      const RegistryEntry* found = nullptr;
      for (const RegistryEntry& e : registry())
        if (e.info.id == id) found = &e;
      if (!found)
        throw RefusalError("unknown theorem id '" + id +
                           "'; only anchored theorems can run");
      selected.push_back(found);
    }
  }
  Deadline dl;
  if (cfg.time_budget_seconds)
    dl.end = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(
                                    *cfg.time_budget_seconds));
  std::vector<TheoremVerdict> verdicts;
  for (const RegistryEntry* e : selected) verdicts.push_back(e->run(cfg, dl));
  return verdicts;
}

bool suite_passed(const std::vector<TheoremVerdict>& verdicts) {
  for (const TheoremVerdict& v : verdicts)
    if (v.status == VerdictStatus::kRefuted || !v.complete) return false;
  return true;
}

nlohmann::json counterexample_json(const Counterexample& ce) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [key, value] : ce.params) params[key] = value;
  return nlohmann::json{{"dimacs", emit_dimacs(ce.graph)},
                        {"graph", graph_echo_json(ce.graph)},
                        {"params", params}};
}

nlohmann::json verdict_json(const TheoremVerdict& v) {
  nlohmann::json ces = nlohmann::json::array();
  for (const Counterexample& ce : v.counterexamples)
    ces.push_back(counterexample_json(ce));
  const TheoremInfo* info = nullptr;
  for (const TheoremInfo& i : theorem_registry())
    if (i.id == v.theorem_id) info = &i;
  return nlohmann::json{{"theorem", v.theorem_id},
                        {"anchor", info ? info->anchor : ""},
                        {"checked", v.instances_checked},
                        {"status", to_string(v.status)},
                        {"complete", v.complete},
                        {"counterexamples", ces}};
}

nlohmann::json suite_report_json(const std::vector<TheoremVerdict>& verdicts) {
  nlohmann::json out = nlohmann::json::array();
  for (const TheoremVerdict& v : verdicts) out.push_back(verdict_json(v));
  return out;
}

}  // namespace chroma
