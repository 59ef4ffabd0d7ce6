// Implicit relations for a fixed color count k: pairs forced apart in every
// k-coloring (implicit edges) and non-adjacent pairs forced together in every
// k-coloring (implicit identities), pair classification, explicit
// neighborhoods, the explicit-graph closure, and the decision reductions that
// rest on them.
//
// Vacuous semantics: when the graph has no k-coloring at all, universally
// quantified coloring statements hold trivially. The pairwise predicates stay
// strictly definitional (an implicit edge is judged in G-ij, so a drawn pair
// of an uncolorable graph need not be one), while classify_pair reports every
// pair of an uncolorable graph as an implicit edge with vacuous=true -- the
// closure and contradiction reductions depend on exactly that reading.

#pragma once

#include <vector>

#include "chroma/coloring.hpp"
#include "chroma/graph.hpp"
#include "chroma/verdict.hpp"
#include "json.hpp"

namespace chroma {

enum class PairStatus {
  kPlainEdge,            // drawn, deletable without forcing distinct colors
  kDrawnImplicitEdge,    // drawn, and forced apart even with the edge removed
  kNonDrawnImplicitEdge, // not drawn, forced apart in every k-coloring
  kImplicitIdentity,     // not drawn, forced together in every k-coloring
  kFree,                 // not drawn, colorings both ways exist
};

const char* to_string(PairStatus s);

struct PairClassification {
  Vertex u = -1, v = -1;
  PairStatus status = PairStatus::kFree;
  bool vacuous = false;  // true exactly when the graph has no k-coloring
};

struct RelationReport {
  int k = 0;
  bool vacuous = false;
  std::vector<PairClassification> pairs;  // all unordered pairs, lex order
  Graph explicit_graph;                   // input plus every implicit edge
  std::vector<std::pair<Vertex, Vertex>> added_edges;
};

// No k-coloring of G-ij (the graph with a possible {i,j} edge removed) gives
// i and j the same color; decided by identifying i with j in G-ij and testing
// k-colorability.
bool is_implicit_edge(const Graph& g, int k, Vertex i, Vertex j);

// Every k-coloring of g gives i and j the same color; defined for non-edges
// only, decided by testing k-colorability of g+ij. Vacuously true when g has
// no k-coloring.
bool is_implicit_identity(const Graph& g, int k, Vertex i, Vertex j);

PairClassification classify_pair(const Graph& g, int k, Vertex i, Vertex j);

// N(v) together with every vertex implicitly joined to v.
VertexSet explicit_neighborhood(const Graph& g, int k, Vertex v);

// Classifies every pair and adds all implicit edges. One pass suffices: the
// added edges only reject colorings that never existed, so no new implicit
// edges arise (the closure is a fixpoint).
RelationReport explicit_graph(const Graph& g, int k);

// True iff (i,j) is both an implicit edge and an implicit identity, which can
// only happen vacuously; equivalent to "g has no k-coloring". Requires a
// non-adjacent pair.
bool contradiction_test(const Graph& g, int k, Vertex i, Vertex j);

enum class ThreeColorVerdict { kThreeColorable, kNotThreeColorable };

const char* to_string(ThreeColorVerdict v);

// Not-3-colorable iff the k=3 explicit closure is a complete graph. Refuses
// graphs on fewer than 4 vertices: the closure of K3 is complete although K3
// is 3-colorable.
ThreeColorVerdict closure_completeness_test(const Graph& g);

// Checks the parity characterization of the pair's relation at k = chi(g):
// for every proper k-coloring, delete every admissible choice of k-2 color
// classes avoiding i and j; implicit edges must always leave i,j joined by
// odd-length paths only (judged with a drawn {i,j} edge removed), implicit
// identities by even-length paths only, and a pair with neither relation must
// admit a complementary outcome for some coloring and choice. Requires
// k = chi(g) >= 2.
TheoremVerdict verify_bipartite_characterization(const Graph& g, int k,
                                                 Vertex i, Vertex j);

// The admissible deletions behind the parity characterization: every way to
// drop k-2 of the coloring's classes while keeping i and j. Exposed so the
// exhaustive harness applies exactly the same rule.
std::vector<VertexSet> class_deletion_choices(
    const std::vector<VertexSet>& classes, Vertex i, Vertex j, int k);

// {"k":..,"vacuous":..,"pairs":[{"u","v","status"}],"explicitEdgesAdded":[..]}
// with 1-based vertex labels.
nlohmann::json relation_report_json(const RelationReport& r);

nlohmann::json pair_classification_json(const PairClassification& c);

// DOT with the relation styling: plain edges solid, non-drawn implicit edges
// dashed, implicit identities dotted; non-drawn relations get constraint=false.
std::string to_dot(const RelationReport& r);

}  // namespace chroma
