#include "chroma/graph.hpp"

#include <algorithm>

namespace chroma {

std::vector<Vertex> to_vertex_list(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(std::popcount(s));
  for (VertexSet rest = s; rest; rest &= rest - 1)
    out.push_back(std::countr_zero(rest));
  return out;
}

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices)
    throw RefusalError("graph order " + std::to_string(n) +
                       " outside supported range 0.." +
                       std::to_string(kMaxVertices));
  verts_ = n == 0 ? 0 : (n == kMaxVertices ? ~VertexSet{0} : vbit(n) - 1);
}

Graph Graph::from_edges(int n,
                        const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.require_vertex(u);
    g.require_vertex(v);
    if (u == v)
      throw PreconditionError("self-loop at vertex " + std::to_string(u));
    g.insert_edge(u, v);
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet rest = verts_; rest; rest &= rest - 1)
    twice += std::popcount(adj_[std::countr_zero(rest)]);
  return twice / 2;
}

VertexSet Graph::neighbors(Vertex v) const {
  require_vertex(v);
  return adj_[v];
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count());
  for (VertexSet rest = verts_; rest; rest &= rest - 1) {
    Vertex u = std::countr_zero(rest);
    for (VertexSet hi = adj_[u] & ~(vbit(u) | (vbit(u) - 1)); hi; hi &= hi - 1)
      out.emplace_back(u, std::countr_zero(hi));
  }
  return out;  // outer loop ascending in u, inner ascending in v: lex order
}

bool Graph::is_complete() const {
  for (VertexSet rest = verts_; rest; rest &= rest - 1) {
    Vertex v = std::countr_zero(rest);
    if (adj_[v] != (verts_ & ~vbit(v))) return false;
  }
  return true;
}

bool Graph::is_connected() const {
  if (verts_ == 0) return true;
  VertexSet seen = vbit(std::countr_zero(verts_));
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet rest = frontier; rest; rest &= rest - 1)
      next |= adj_[std::countr_zero(rest)];
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == verts_;
}

bool Graph::has_contiguous_labels() const {
  int n = order();
  return verts_ == (n == 0 ? 0 : (n == kMaxVertices ? ~VertexSet{0} : vbit(n) - 1));
}

void Graph::insert_vertex(Vertex v) {
  if (v < 0 || v >= kMaxVertices)
    throw RefusalError("vertex label " + std::to_string(v) +
                       " outside supported range");
  verts_ |= vbit(v);
}

void Graph::insert_edge(Vertex u, Vertex v) {
  adj_[u] |= vbit(v);
  adj_[v] |= vbit(u);
}

void Graph::erase_edge(Vertex u, Vertex v) {
  adj_[u] &= ~vbit(v);
  adj_[v] &= ~vbit(u);
}

void Graph::erase_vertex(Vertex v) {
  for (VertexSet rest = adj_[v]; rest; rest &= rest - 1)
    adj_[std::countr_zero(rest)] &= ~vbit(v);
  adj_[v] = 0;
  verts_ &= ~vbit(v);
}

void Graph::require_vertex(Vertex v) const {
  if (!has_vertex(v))
    throw PreconditionError("vertex " + std::to_string(v) +
                            " is not in the graph");
}

VertexMapping VertexMapping::identity(VertexSet domain) {
  VertexMapping m;
  m.domain_ = domain;
  for (VertexSet rest = domain; rest; rest &= rest - 1) {
    Vertex v = std::countr_zero(rest);
    m.to_[v] = static_cast<std::int8_t>(v);
  }
  return m;
}

std::optional<Vertex> VertexMapping::image(Vertex original) const {
  if (original < 0 || original >= kMaxVertices || !(domain_ & vbit(original)))
    throw PreconditionError("vertex " + std::to_string(original) +
                            " is not in the mapping domain");
  if (to_[original] < 0) return std::nullopt;
  return static_cast<Vertex>(to_[original]);
}

void VertexMapping::map_to(Vertex original, Vertex target) {
  domain_ |= vbit(original);
  to_[original] = static_cast<std::int8_t>(target);
}

void VertexMapping::mark_deleted(Vertex original) {
  domain_ |= vbit(original);
  to_[original] = -1;
}

AddEdgeResult add_edge(const Graph& g, Vertex u, Vertex v) {
  g.require_vertex(u);
  g.require_vertex(v);
  if (u == v)
    throw PreconditionError("cannot add a self-loop at vertex " +
                            std::to_string(u));
  AddEdgeResult res{g, g.has_edge(u, v)};
  res.graph.insert_edge(u, v);
  return res;
}

Graph delete_vertex(const Graph& g, Vertex x) {
  g.require_vertex(x);
  Graph h = g;
  h.erase_vertex(x);
  return h;
}

Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v))
    throw PreconditionError("(" + std::to_string(u) + "," + std::to_string(v) +
                            ") is not an edge");
  Graph h = g;
  h.erase_edge(u, v);
  return h;
}

IdentifyResult identify_vertices(const Graph& g, Vertex x, Vertex y) {
  g.require_vertex(x);
  g.require_vertex(y);
  if (x == y)
    throw PreconditionError("cannot identify vertex " + std::to_string(x) +
                            " with itself");
  Vertex keep = std::min(x, y);
  Vertex drop = std::max(x, y);
  Graph h = g;
  VertexSet merged_nbhd =
      (g.neighbors(x) | g.neighbors(y)) & ~(vbit(x) | vbit(y));
  h.erase_vertex(drop);
  for (VertexSet rest = h.neighbors(keep); rest; rest &= rest - 1)
    h.erase_edge(keep, std::countr_zero(rest));
  for (VertexSet rest = merged_nbhd; rest; rest &= rest - 1)
    h.insert_edge(keep, std::countr_zero(rest));

  VertexMapping m = VertexMapping::identity(g.vertex_set());
  m.map_to(x, keep);
  m.map_to(y, keep);
  return IdentifyResult{h, m, keep};
}

Graph delete_vertices(const Graph& g, VertexSet s) {
  Graph h = g;
  for (VertexSet rest = s; rest; rest &= rest - 1) {
    Vertex v = std::countr_zero(rest);
    h.require_vertex(v);
    h.erase_vertex(v);
  }
  return h;
}

IdentifyResult contract_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v))
    throw PreconditionError(
        "(" + std::to_string(u) + "," + std::to_string(v) +
        ") is not an edge; identify_vertices handles non-adjacent pairs");
  return identify_vertices(delete_edge(g, u, v), u, v);
}

bool is_independent_set(const Graph& g, VertexSet members) {
  for (VertexSet rest = members; rest; rest &= rest - 1)
    if (g.neighbors(std::countr_zero(rest)) & members) return false;
  return true;
}

std::vector<IndependentSet> enumerate_independent_sets(const Graph& g,
                                                       int cap) {
  if (g.order() > cap)
    throw RefusalError("independent-set enumeration refused: order " +
                       std::to_string(g.order()) + " exceeds the cap of " +
                       std::to_string(cap) + " vertices");
  std::vector<IndependentSet> out;
  for_each_independent_set(g, [&](IndependentSet s) { out.push_back(s); });
  return out;
}

const char* to_string(BipartiteRelation r) {
  switch (r) {
    case BipartiteRelation::kSameSide: return "same-side";
    case BipartiteRelation::kOppositeSide: return "opposite-side";
    case BipartiteRelation::kDisconnected: return "disconnected";
    case BipartiteRelation::kNotBipartite: return "not-bipartite";
  }
  return "?";
}

BipartiteRelation bipartite_relation(const Graph& g, Vertex i, Vertex j) {
  g.require_vertex(i);
  g.require_vertex(j);
  if (i == j)
    throw PreconditionError("bipartite relation needs two distinct vertices");

  // 2-color every component; side[v] in {0,1}, component id per vertex.
  std::array<std::int8_t, kMaxVertices> side{};
  std::array<std::int8_t, kMaxVertices> comp{};
  side.fill(-1);
  comp.fill(-1);
  std::int8_t ncomp = 0;
  VertexSet seen = 0;
  while (seen != g.vertex_set()) {
    Vertex root = std::countr_zero(g.vertex_set() & ~seen);
    std::vector<Vertex> queue{root};
    side[root] = 0;
    comp[root] = ncomp;
    seen |= vbit(root);
    while (!queue.empty()) {
      Vertex u = queue.back();
      queue.pop_back();
      for (VertexSet rest = g.neighbors(u); rest; rest &= rest - 1) {
        Vertex w = std::countr_zero(rest);
        if (side[w] < 0) {
          side[w] = static_cast<std::int8_t>(1 - side[u]);
          comp[w] = ncomp;
          seen |= vbit(w);
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return BipartiteRelation::kNotBipartite;
        }
      }
    }
    ++ncomp;
  }
  if (comp[i] != comp[j]) return BipartiteRelation::kDisconnected;
  return side[i] == side[j] ? BipartiteRelation::kSameSide
                            : BipartiteRelation::kOppositeSide;
}

}  // namespace chroma
