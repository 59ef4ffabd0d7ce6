// Kempe chains: maximal connected two-colored vertex sets under a proper
// coloring, the flip operation, and the chain-connectivity facts that tie
// chains to implicit relations.

#pragma once

#include "chroma/coloring.hpp"
#include "chroma/graph.hpp"
#include "json.hpp"

namespace chroma {

// A chain is a value snapshot: it remembers the graph it was cut from, the
// color pair and the anchor vertex, so a flip can re-validate it.
struct KempeChain {
  Graph graph;
  VertexSet members = 0;
  int color_a = 0, color_b = 0;
  Vertex anchor = -1;
};

// The maximal connected set containing v whose vertices all wear c1 or c2.
// v must wear one of the two colors; the coloring must be proper.
KempeChain kempe_chain(const Graph& g, const Coloring& c, Vertex v, int c1,
                       int c2);

// Swap the chain's two colors on its members. Errors when the chain is stale,
// i.e. no longer a maximal two-colored component of this coloring. The result
// of flipping a valid chain is proper.
Coloring flip_chain(const Coloring& c, const KempeChain& chain);

struct ChainConnectivity {
  // c(x) != c(y) and x,y lie in the same (c(x),c(y))-chain.
  bool edge_chain = false;
  // Number of colors t != c(x) with x,y in the same (c(x),t)-chain;
  // meaningful when c(x) == c(y), zero otherwise.
  int identity_chain_count = 0;
};

ChainConnectivity connecting_chain_report(const Graph& g, const Coloring& c,
                                          Vertex x, Vertex y);

// {"colors":[c1,c2],"vertices":[...]} with 1-based vertex labels.
nlohmann::json chain_json(const KempeChain& chain);

}  // namespace chroma
