#include "chroma/io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace chroma {

namespace {

// Strict non-negative integer token; DIMACS files occasionally carry CRs.
bool parse_int(const std::string& tok, long& out) {
  if (tok.empty()) return false;
  long val = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
    val = val * 10 + (c - '0');
    if (val > 1'000'000'000L) return false;
  }
  out = val;
  return true;
}

}  // namespace

Graph parse_dimacs(std::istream& in) {
  Graph g;
  bool have_header = false;
  long n = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_header) throw ParseError(lineno, "duplicate problem line");
      std::string fmt, ntok, mtok, extra;
      long m = 0;
      if (!(ls >> fmt >> ntok >> mtok) || (ls >> extra) || fmt != "edge" ||
          !parse_int(ntok, n) || !parse_int(mtok, m))
        throw ParseError(lineno, "malformed problem line, expected 'p edge <n> <m>'");
      if (n > kMaxVertices)
        throw ParseError(lineno, "graph order " + std::to_string(n) +
                                     " exceeds the supported maximum of " +
                                     std::to_string(kMaxVertices));
      g = Graph(static_cast<int>(n));
      have_header = true;
      continue;
    }
    if (tag == "e") {
      if (!have_header)
        throw ParseError(lineno, "edge line before the problem line");
      std::string utok, vtok, extra;
      long u = 0, v = 0;
      if (!(ls >> utok >> vtok) || (ls >> extra) || !parse_int(utok, u) ||
          !parse_int(vtok, v))
        throw ParseError(lineno, "malformed edge line, expected 'e <u> <v>'");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(lineno, "edge endpoint out of range 1.." +
                                     std::to_string(n));
      if (u == v) throw ParseError(lineno, "self-loop at vertex " + utok);
      g.insert_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      continue;
    }
    throw ParseError(lineno, "unrecognized line type '" + tag + "'");
  }
  if (!have_header) throw ParseError(lineno, "missing 'p edge' problem line");
  return g;
}

Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

Graph compacted(const Graph& g) {
  std::array<Vertex, kMaxVertices> rank{};
  int next = 0;
  for (Vertex v : g.vertices()) rank[v] = next++;
  Graph h(next);
  for (auto [u, v] : g.edges()) h.insert_edge(rank[u], rank[v]);
  return h;
}

std::string emit_dimacs(const Graph& g, const std::string& comment) {
  Graph c = compacted(g);
  std::ostringstream out;
  if (!comment.empty()) out << "c " << comment << "\n";
  out << "p edge " << c.order() << " " << c.edge_count() << "\n";
  for (auto [u, v] : c.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

nlohmann::json graph_echo_json(const Graph& g) {
  Graph c = compacted(g);
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : c.edges()) edges.push_back({u, v});
  return nlohmann::json{{"n", c.order()}, {"edges", edges}};
}

std::string to_dot(VertexSet vertices, const std::vector<DotEdge>& edges) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v : to_vertex_list(vertices)) out << "  " << v + 1 << ";\n";
  for (const DotEdge& e : edges) {
    out << "  " << e.u + 1 << " -- " << e.v + 1;
    if (!e.attributes.empty()) out << " [" << e.attributes << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Graph& g) {
  std::vector<DotEdge> edges;
  for (auto [u, v] : g.edges()) edges.push_back({u, v, ""});
  return to_dot(g.vertex_set(), edges);
}

}  // namespace chroma
