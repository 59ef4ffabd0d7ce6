#include "chroma/fixtures.hpp"

#include "chroma/coloring.hpp"
#include "chroma/implicit.hpp"

namespace chroma {

const std::vector<Fixture>& builtin_fixtures() {
  static const std::vector<Fixture> fixtures = [] {
    std::vector<Fixture> out;
    // Two triangles sharing an edge, plus a pendant off one shared-edge
    // vertex; the degree-2 vertex and the pendant are forced apart at k=3.
    out.push_back({"ie3-a",
                   "5 vertices, 6 edges, 3-chromatic; implicit pair (2,5)",
                   Graph::from_edges(
                       5, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {2, 4}}),
                   3, 1, 4});
    // A ladder-like 8-vertex graph; the top and bottom middle vertices are
    // forced apart at k=3.
    out.push_back({"ie3-b",
                   "8 vertices, 11 edges, 3-chromatic; implicit pair (2,7)",
                   Graph::from_edges(8, {{0, 1},
                                         {1, 2},
                                         {0, 3},
                                         {0, 5},
                                         {2, 7},
                                         {2, 4},
                                         {3, 4},
                                         {3, 5},
                                         {4, 7},
                                         {5, 6},
                                         {6, 7}}),
                   3, 1, 6});
    // A 5-cycle whose vertices are split between the neighborhoods of two
    // extra vertices; coloring those two alike would 2-color the 5-cycle.
    out.push_back({"ie3-c",
                   "7 vertices, 10 edges, 3-chromatic; implicit pair (6,7)",
                   Graph::from_edges(7, {{0, 1},
                                         {1, 2},
                                         {2, 3},
                                         {3, 4},
                                         {0, 4},
                                         {1, 5},
                                         {2, 5},
                                         {4, 5},
                                         {0, 6},
                                         {3, 6}}),
                   3, 5, 6});
    // K4 plus a vertex seeing three of it, plus a pendant: the pendant's
    // neighbor is forced onto the fourth K4 color, so the pendant can never
    // share it.
    out.push_back({"ie4-a",
                   "6 vertices, 10 edges, 4-chromatic; implicit pair (1,6)",
                   Graph::from_edges(6, {{0, 1},
                                         {1, 2},
                                         {2, 3},
                                         {0, 3},
                                         {0, 2},
                                         {1, 3},
                                         {1, 4},
                                         {2, 4},
                                         {3, 4},
                                         {4, 5}}),
                   4, 0, 5});
    // A 9-vertex planar-style graph, 4-chromatic, with the apex pair forced
    // apart at k=4. Verified at load; see fixture_verified.
    out.push_back({"ie4-b",
                   "9 vertices, 18 edges, 4-chromatic; implicit pair (1,8)",
                   Graph::from_edges(9, {{0, 1},
                                         {0, 3},
                                         {1, 2},
                                         {2, 3},
                                         {1, 4},
                                         {4, 6},
                                         {3, 5},
                                         {5, 8},
                                         {2, 4},
                                         {2, 5},
                                         {2, 7},
                                         {4, 7},
                                         {5, 7},
                                         {6, 7},
                                         {7, 8},
                                         {1, 6},
                                         {3, 8},
                                         {6, 8}}),
                   4, 0, 7});
    return out;
  }();
  return fixtures;
}

const Fixture& fixture_by_name(const std::string& name) {
  for (const Fixture& f : builtin_fixtures())
    if (f.name == name) return f;
  throw PreconditionError("unknown fixture '" + name + "'");
}

bool fixture_verified(const Fixture& f) {
  return chromatic_number(f.graph) == f.k &&
         is_implicit_edge(f.graph, f.k, f.u, f.v);
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.insert_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.insert_edge(0, n - 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.insert_edge(i, j);
  return g;
}

}  // namespace chroma
