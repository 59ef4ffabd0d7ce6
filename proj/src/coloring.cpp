#include "chroma/coloring.hpp"

#include <algorithm>
#include <cmath>

namespace chroma {

namespace {

// Vertices by descending degree, labels breaking ties: the decision solver's
// fixed search order.
std::vector<Vertex> degree_order(const Graph& g) {
  std::vector<Vertex> vs = g.vertices();
  std::stable_sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) > g.degree(b);
  });
  return vs;
}

// Greedy coloring along the given order; returns the number of colors used.
// Upper bound only, never a source of truth.
int greedy_color_count(const Graph& g, const std::vector<Vertex>& order) {
  std::array<int, kMaxVertices> color{};
  int used = 0;
  for (Vertex v : order) {
    std::uint64_t taken = 0;
    for (VertexSet rest = g.neighbors(v); rest; rest &= rest - 1) {
      Vertex w = std::countr_zero(rest);
      if (color[w]) taken |= std::uint64_t{1} << (color[w] - 1);
    }
    int c = std::countr_one(taken) + 1;
    color[v] = c;
    used = std::max(used, c);
  }
  return used;
}

// Greedy maximal clique along the order; a cheap chromatic lower bound.
int greedy_clique_size(const Graph& g, const std::vector<Vertex>& order) {
  VertexSet clique = 0;
  for (Vertex v : order)
    if ((g.neighbors(v) & clique) == clique) clique |= vbit(v);
  return std::popcount(clique);
}

template <typename Counter>
Counter count_colorings_impl(const Graph& g, int k) {
  const std::vector<Vertex> vs = degree_order(g);
  std::array<VertexSet, kMaxVertices> adj{};
  for (Vertex v : vs) adj[v] = g.neighbors(v);
  std::vector<VertexSet> class_mask(static_cast<std::size_t>(k) + 1, 0);
  Counter total = 0;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == vs.size()) {
      ++total;
      return;
    }
    Vertex v = vs[idx];
    for (int col = 1; col <= k; ++col) {
      if (class_mask[static_cast<std::size_t>(col)] & adj[v]) continue;
      class_mask[static_cast<std::size_t>(col)] |= vbit(v);
      self(self, idx + 1);
      class_mask[static_cast<std::size_t>(col)] &= ~vbit(v);
    }
  };
  rec(rec, 0);
  return total;
}

}  // namespace

bool is_proper(const Graph& g, const Coloring& c) {
  if (c.domain() != g.vertex_set()) return false;
  for (auto [u, v] : g.edges())
    if (c.color_of(u) == c.color_of(v)) return false;
  for (Vertex v : g.vertices())
    if (c.color_of(v) < 1 || c.color_of(v) > c.k()) return false;
  return true;
}

std::optional<Coloring> find_k_coloring(const Graph& g, int k) {
  if (k < 0) throw PreconditionError("color count must be non-negative");
  const std::vector<Vertex> vs = degree_order(g);
  Coloring coloring(k, g.vertex_set());
  if (vs.empty()) return coloring;
  if (k == 0) return std::nullopt;

  std::array<VertexSet, kMaxVertices> adj{};
  for (Vertex v : vs) adj[v] = g.neighbors(v);
  std::vector<VertexSet> class_mask(static_cast<std::size_t>(k) + 1, 0);

  // Color symmetry is broken by allowing at most one fresh color per branch;
  // sound for the decision problem only.
  auto rec = [&](auto&& self, std::size_t idx, int used) -> bool {
    if (idx == vs.size()) return true;
    Vertex v = vs[idx];
    int limit = std::min(k, used + 1);
    for (int col = 1; col <= limit; ++col) {
      if (class_mask[static_cast<std::size_t>(col)] & adj[v]) continue;
      class_mask[static_cast<std::size_t>(col)] |= vbit(v);
      coloring.set_color(v, col);
      if (self(self, idx + 1, std::max(used, col))) return true;
      class_mask[static_cast<std::size_t>(col)] &= ~vbit(v);
    }
    return false;
  };
  if (!rec(rec, 0, 0)) return std::nullopt;
  return coloring;
}

bool is_k_colorable(const Graph& g, int k) {
  return find_k_coloring(g, k).has_value();
}

int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  if (g.edge_count() == 0) return 1;
  const std::vector<Vertex> order = degree_order(g);
  int lo = std::max(2, greedy_clique_size(g, order));
  int hi = greedy_color_count(g, order);
  for (int k = lo; k < hi; ++k)
    if (is_k_colorable(g, k)) return k;
  return hi;
}

BigInt count_k_colorings(const Graph& g, int k) {
  if (k < 0) throw PreconditionError("color count must be non-negative");
  if (g.order() == 0) return 1;  // the empty assignment
  if (k == 0) return 0;
  // k^n fits comfortably in 64 bits for every n this library enumerates; fall
  // back to big-integer accumulation beyond that.
  double bits = g.order() * std::log2(static_cast<double>(k));
  if (bits < 62.0) return count_colorings_impl<std::uint64_t>(g, k);
  return count_colorings_impl<BigInt>(g, k);
}

std::vector<Coloring> enumerate_k_colorings(const Graph& g, int k,
                                            std::uint64_t budget) {
  if (k < 0) throw PreconditionError("color count must be non-negative");
  if (k >= 2 &&
      boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(g.order())) >
          BigInt(budget))
    throw RefusalError("coloring enumeration refused: " + std::to_string(k) +
                       "^" + std::to_string(g.order()) +
                       " raw assignments exceed the budget of " +
                       std::to_string(budget));
  std::vector<Coloring> out;
  for_each_k_coloring(g, k, [&](const Coloring& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::vector<IndependentSet> critical_independent_sets(const Graph& g, int k) {
  int chi = chromatic_number(g);
  if (chi != k)
    throw PreconditionError(
        "critical independent sets are defined for k-chromatic graphs; "
        "requested k=" + std::to_string(k) + " but the chromatic number is " +
        std::to_string(chi));
  std::vector<IndependentSet> out;
  for_each_independent_set(g, [&](IndependentSet s) {
    if (s.members == 0) return;
    if (chromatic_number(delete_vertices(g, s.members)) == k - 1)
      out.push_back(s);
  });
  return out;
}

nlohmann::json coloring_json(const Coloring& c) {
  nlohmann::json colors = nlohmann::json::object();
  for (Vertex v : to_vertex_list(c.domain()))
    colors[std::to_string(v + 1)] = c.color_of(v);
  return nlohmann::json{{"k", c.k()}, {"colors", colors}};
}

}  // namespace chroma
