// Text formats: DIMACS .col parsing/emission, DOT emission and the 0-based
// JSON graph echo. Vertex ids in DIMACS and DOT are the 1-based external
// labels; the JSON echo is 0-based with edges sorted lexicographically.

#pragma once

#include <iosfwd>
#include <string>

#include "chroma/graph.hpp"
#include "json.hpp"

namespace chroma {

// DIMACS .col conventions: `c ...` comments, one `p edge <n> <m>` header,
// `e <u> <v>` lines with 1-based endpoints. Duplicate edges are deduplicated;
// the declared edge count is not enforced. Malformed lines, endpoints out of
// range and self-loops raise ParseError with the offending line number.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs(const std::string& text);

// Canonicalized emission: labels are compacted to 1..n by rank, edges sorted.
std::string emit_dimacs(const Graph& g, const std::string& comment = "");

// Labels compacted to 0..n-1 by rank; relabelling of edits folded away.
Graph compacted(const Graph& g);

// {"n": int, "edges": [[u,v], ...]} with 0-based compacted ids.
nlohmann::json graph_echo_json(const Graph& g);

// Styling hook shared by the plain emitter and the relation-report emitter.
struct DotEdge {
  Vertex u = 0;
  Vertex v = 0;
  std::string attributes;  // empty for a plain solid edge
};

std::string to_dot(const Graph& g);
std::string to_dot(VertexSet vertices, const std::vector<DotEdge>& edges);

}  // namespace chroma
