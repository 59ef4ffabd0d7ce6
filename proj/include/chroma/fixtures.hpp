// Compiled-in example graphs with a known implicit pair, plus the elementary
// graph family builders the tests and the CLI share.

#pragma once

#include <string>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

struct Fixture {
  std::string name;
  std::string description;
  Graph graph;
  int k = 0;          // color count at which the pair below is implicit
  Vertex u = -1, v = -1;  // known implicit pair, 0-based
};

// The five built-in graphs: three 3-chromatic and two 4-chromatic examples,
// each with one known non-drawn implicit edge.
const std::vector<Fixture>& builtin_fixtures();

// Lookup by name; PreconditionError on unknown names.
const Fixture& fixture_by_name(const std::string& name);

// Recomputes the fixture's claims: the graph is k-chromatic and (u,v) is an
// implicit edge at k. A fixture failing this must be reported as unverified,
// never silently adjusted.
bool fixture_verified(const Fixture& f);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

}  // namespace chroma
