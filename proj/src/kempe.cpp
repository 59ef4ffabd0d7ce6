#include "chroma/kempe.hpp"

#include <algorithm>

namespace chroma {

namespace {

VertexSet two_colored_component(const Graph& g, const Coloring& c, Vertex v,
                                int c1, int c2) {
  VertexSet wearing = 0;
  for (VertexSet rest = g.vertex_set(); rest; rest &= rest - 1) {
    Vertex u = std::countr_zero(rest);
    int col = c.color_of(u);
    if (col == c1 || col == c2) wearing |= vbit(u);
  }
  VertexSet comp = vbit(v);
  VertexSet frontier = comp;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet rest = frontier; rest; rest &= rest - 1)
      next |= g.neighbors(std::countr_zero(rest));
    frontier = next & wearing & ~comp;
    comp |= frontier;
  }
  return comp;
}

}  // namespace

KempeChain kempe_chain(const Graph& g, const Coloring& c, Vertex v, int c1,
                       int c2) {
  g.require_vertex(v);
  if (c1 == c2) throw PreconditionError("a chain needs two distinct colors");
  if (c1 < 1 || c1 > c.k() || c2 < 1 || c2 > c.k())
    throw PreconditionError("chain colors must lie in 1..k");
  if (!is_proper(g, c))
    throw PreconditionError("kempe chains are defined for proper colorings");
  int cv = c.color_of(v);
  if (cv != c1 && cv != c2)
    throw PreconditionError("vertex " + std::to_string(v) +
                            " wears neither chain color");
  KempeChain chain;
  chain.graph = g;
  chain.color_a = std::min(c1, c2);
  chain.color_b = std::max(c1, c2);
  chain.anchor = v;
  chain.members = two_colored_component(g, c, v, c1, c2);
  return chain;
}

Coloring flip_chain(const Coloring& c, const KempeChain& chain) {
  // Re-derive the chain for this coloring; a mismatch means the chain was cut
  // under a different coloring (or tampered with) and flipping it could break
  // properness.
  KempeChain fresh = kempe_chain(chain.graph, c, chain.anchor, chain.color_a,
                                 chain.color_b);
  if (fresh.members != chain.members)
    throw PreconditionError(
        "stale kempe chain: membership is no longer maximal for this coloring");
  Coloring flipped = c;
  for (VertexSet rest = chain.members; rest; rest &= rest - 1) {
    Vertex u = std::countr_zero(rest);
    flipped.set_color(
        u, c.color_of(u) == chain.color_a ? chain.color_b : chain.color_a);
  }
  return flipped;
}

ChainConnectivity connecting_chain_report(const Graph& g, const Coloring& c,
                                          Vertex x, Vertex y) {
  g.require_vertex(x);
  g.require_vertex(y);
  if (!is_proper(g, c))
    throw PreconditionError("chain reports need a proper coloring");
  ChainConnectivity out;
  int cx = c.color_of(x), cy = c.color_of(y);
  if (cx != cy) {
    out.edge_chain =
        (two_colored_component(g, c, x, cx, cy) & vbit(y)) != 0;
    return out;
  }
  for (int t = 1; t <= c.k(); ++t) {
    if (t == cx) continue;
    if (two_colored_component(g, c, x, cx, t) & vbit(y))
      ++out.identity_chain_count;
  }
  return out;
}

nlohmann::json chain_json(const KempeChain& chain) {
  nlohmann::json vertices = nlohmann::json::array();
  for (Vertex v : to_vertex_list(chain.members)) vertices.push_back(v + 1);
  return nlohmann::json{{"colors", {chain.color_a, chain.color_b}},
                        {"vertices", vertices}};
}

}  // namespace chroma
