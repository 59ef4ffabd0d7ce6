// Simple undirected graphs on at most 64 integer-labelled vertices, the four
// edit operations (edge insertion, vertex deletion, vertex identification,
// edge contraction), independent-set enumeration and bipartite path parity.
//
// Graph values are immutable: every edit returns a new value, so they are safe
// to share across threads without coordination. Vertex labels are stable under
// edits; identification keeps the smaller label and reports the relabelling
// through a VertexMapping.

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chroma {

using Vertex = int;
using VertexSet = std::uint64_t;  // bit v set <=> vertex v in the set

inline constexpr int kMaxVertices = 64;
inline constexpr int kIndependentSetCap = 20;  // default enumeration cap

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text; carries the 1-based line number. CLI exit code 2.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A size/budget cap was exceeded; the operation refuses rather than truncate.
class RefusalError : public Error {
 public:
  using Error::Error;
};

// An operation contract was violated (missing vertex, self-loop, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

inline VertexSet vbit(Vertex v) { return VertexSet{1} << v; }

inline int set_size(VertexSet s) { return std::popcount(s); }

inline Vertex lowest_vertex(VertexSet s) { return std::countr_zero(s); }

std::vector<Vertex> to_vertex_list(VertexSet s);

class Graph {
 public:
  Graph() = default;

  // n isolated vertices labelled 0..n-1.
  explicit Graph(int n);

  static Graph from_edges(int n,
                          const std::vector<std::pair<Vertex, Vertex>>& edges);

  int order() const { return std::popcount(verts_); }
  int edge_count() const;
  VertexSet vertex_set() const { return verts_; }
  bool has_vertex(Vertex v) const {
    return v >= 0 && v < kMaxVertices && (verts_ & vbit(v));
  }
  bool has_edge(Vertex u, Vertex v) const {
    return has_vertex(u) && has_vertex(v) && (adj_[u] & vbit(v));
  }
  VertexSet neighbors(Vertex v) const;
  int degree(Vertex v) const { return std::popcount(neighbors(v)); }
  std::vector<Vertex> vertices() const { return to_vertex_list(verts_); }
  // Edges as (u,v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  // True when every pair of present vertices is adjacent.
  bool is_complete() const;
  bool is_connected() const;
  // True when the labels are exactly 0..order()-1 (fresh parses are; edited
  // graphs may have holes).
  bool has_contiguous_labels() const;

  bool operator==(const Graph&) const = default;

  // Low-level mutators; the public edit operations below wrap these with the
  // contract checks. Rows of absent vertices stay zero so that operator==
  // is structural equality.
  void insert_vertex(Vertex v);
  void insert_edge(Vertex u, Vertex v);
  void erase_edge(Vertex u, Vertex v);
  void erase_vertex(Vertex v);

  void require_vertex(Vertex v) const;

 private:
  VertexSet verts_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

// Records, for every vertex of the input graph, its label in the result graph
// (identification maps both endpoints to the surviving label) or deletion.
class VertexMapping {
 public:
  VertexMapping() = default;
  static VertexMapping identity(VertexSet domain);

  VertexSet domain() const { return domain_; }
  // Image of an original vertex; nullopt when it was deleted.
  std::optional<Vertex> image(Vertex original) const;
  void map_to(Vertex original, Vertex target);
  void mark_deleted(Vertex original);

 private:
  VertexSet domain_ = 0;
  std::array<std::int8_t, kMaxVertices> to_{};
};

struct AddEdgeResult {
  Graph graph;
  bool already_present = false;  // edge insertion is idempotent, flagged
};

struct IdentifyResult {
  Graph graph;
  VertexMapping mapping;
  Vertex merged = -1;  // surviving label, min(x,y)
};

// G + uv. Errors: u == v, or a missing endpoint.
AddEdgeResult add_edge(const Graph& g, Vertex u, Vertex v);

// G - x together with all incident edges.
Graph delete_vertex(const Graph& g, Vertex x);

// G - uv. Errors when (u,v) is not an edge.
Graph delete_edge(const Graph& g, Vertex u, Vertex v);

// Identify x and y (adjacent or not): the survivor min(x,y) inherits
// N(x) u N(y) - {x,y}; parallel edges collapse (results stay simple).
IdentifyResult identify_vertices(const Graph& g, Vertex x, Vertex y);

// Contract the edge (u,v); identification of non-adjacent pairs must go
// through identify_vertices instead.
IdentifyResult contract_edge(const Graph& g, Vertex u, Vertex v);

// G - S for a whole vertex set at once.
Graph delete_vertices(const Graph& g, VertexSet s);

struct IndependentSet {
  VertexSet members = 0;
  bool operator==(const IndependentSet&) const = default;
};

bool is_independent_set(const Graph& g, VertexSet members);

// All independent sets (the empty set included) in lexicographic order of the
// ascending member list. Refuses graphs larger than `cap` vertices.
std::vector<IndependentSet> enumerate_independent_sets(
    const Graph& g, int cap = kIndependentSetCap);

// Visitor form, no cap; visitation order is the same lexicographic order.
template <typename Visitor>
void for_each_independent_set(const Graph& g, Visitor&& visit) {
  std::vector<Vertex> vs = g.vertices();
  // DFS that extends the current set by ever-larger labels; any superset of a
  // dependent set is dependent, so pruning at the first conflict is complete.
  auto rec = [&](auto&& self, VertexSet current, std::size_t next) -> void {
    visit(IndependentSet{current});
    for (std::size_t i = next; i < vs.size(); ++i) {
      Vertex v = vs[i];
      if (g.neighbors(v) & current) continue;
      self(self, current | vbit(v), i + 1);
    }
  };
  rec(rec, 0, 0);
}

enum class BipartiteRelation {
  kSameSide,      // every i-j path has even edge count
  kOppositeSide,  // every i-j path has odd edge count
  kDisconnected,  // no i-j path
  kNotBipartite,  // the graph has an odd cycle
};

const char* to_string(BipartiteRelation r);

// Parity relation of i and j under 2-colorings, per the whole graph: any odd
// cycle anywhere makes the answer kNotBipartite.
BipartiteRelation bipartite_relation(const Graph& g, Vertex i, Vertex j);

}  // namespace chroma
