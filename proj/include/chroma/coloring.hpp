// Exact k-coloring: decision, counting, enumeration, chromatic number and
// critical independent sets. Everything here is exponential-time by design;
// these are the small-instance oracles the rest of the library reduces to.
//
// The decision solver may break color symmetry (a fresh color is only tried
// once per branch). Counting and enumeration never do: P(G,k) counts labelled
// colorings, so every proper assignment V -> {1..k} is visited.

#pragma once

#include <array>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chroma/graph.hpp"
#include "json.hpp"

namespace chroma {

using BigInt = boost::multiprecision::cpp_int;

// Default enumeration budget: refuse when k^|V| exceeds this many raw
// assignments rather than truncate silently.
inline constexpr std::uint64_t kEnumerationBudget = 10'000'000;

// A total assignment of the owning graph's vertices to colors 1..k.
class Coloring {
 public:
  Coloring() = default;
  Coloring(int k, VertexSet domain) : k_(k), domain_(domain) {}

  int k() const { return k_; }
  VertexSet domain() const { return domain_; }
  int color_of(Vertex v) const {
    if (v < 0 || v >= kMaxVertices || !(domain_ & vbit(v)))
      throw PreconditionError("vertex " + std::to_string(v) +
                              " is not colored");
    return color_[v];
  }
  void set_color(Vertex v, int c) { color_[v] = static_cast<std::uint8_t>(c); }

  // classes()[c-1] is the set of vertices wearing color c (may be empty).
  std::vector<VertexSet> classes() const {
    std::vector<VertexSet> out(static_cast<std::size_t>(k_), 0);
    for (VertexSet rest = domain_; rest; rest &= rest - 1) {
      Vertex v = std::countr_zero(rest);
      out[static_cast<std::size_t>(color_[v]) - 1] |= vbit(v);
    }
    return out;
  }

  bool operator==(const Coloring& other) const {
    if (k_ != other.k_ || domain_ != other.domain_) return false;
    for (VertexSet rest = domain_; rest; rest &= rest - 1) {
      Vertex v = std::countr_zero(rest);
      if (color_[v] != other.color_[v]) return false;
    }
    return true;
  }

 private:
  int k_ = 0;
  VertexSet domain_ = 0;
  std::array<std::uint8_t, kMaxVertices> color_{};
};

bool is_proper(const Graph& g, const Coloring& c);

// Proper k-coloring if one exists; deterministic search order (descending
// degree, labels break ties).
std::optional<Coloring> find_k_coloring(const Graph& g, int k);

bool is_k_colorable(const Graph& g, int k);

// Smallest k admitting a proper k-coloring: 0 for the empty graph, 1 for
// edgeless nonempty graphs.
int chromatic_number(const Graph& g);

// Exact number of labelled proper colorings V -> {1..k}.
BigInt count_k_colorings(const Graph& g, int k);

// Every proper k-coloring exactly once, in lexicographic order of the
// assignment read along ascending vertex labels. The visitor returns false to
// stop early; the function returns false iff it was stopped.
template <typename Visitor>
bool for_each_k_coloring(const Graph& g, int k, Visitor&& visit) {
  if (k < 0) throw PreconditionError("color count must be non-negative");
  const std::vector<Vertex> vs = g.vertices();
  Coloring coloring(k, g.vertex_set());
  if (vs.empty()) return visit(static_cast<const Coloring&>(coloring));
  if (k == 0) return true;

  std::array<VertexSet, kMaxVertices> adj{};
  for (Vertex v : vs) adj[v] = g.neighbors(v);
  std::vector<VertexSet> class_mask(static_cast<std::size_t>(k) + 1, 0);

  bool keep_going = true;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == vs.size()) {
      keep_going = visit(static_cast<const Coloring&>(coloring));
      return;
    }
    Vertex v = vs[idx];
    for (int col = 1; col <= k && keep_going; ++col) {
      if (class_mask[static_cast<std::size_t>(col)] & adj[v]) continue;
      class_mask[static_cast<std::size_t>(col)] |= vbit(v);
      coloring.set_color(v, col);
      self(self, idx + 1);
      class_mask[static_cast<std::size_t>(col)] &= ~vbit(v);
    }
  };
  rec(rec, 0);
  return keep_going;
}

// Materialized enumeration; refuses when k^|V| exceeds the budget.
std::vector<Coloring> enumerate_k_colorings(
    const Graph& g, int k, std::uint64_t budget = kEnumerationBudget);

// Independent sets S with chi(G-S) = k-1, i.e. the color classes appearing in
// some k-coloring. Requires k = chi(g); errors otherwise, naming the actual
// chromatic number.
std::vector<IndependentSet> critical_independent_sets(const Graph& g, int k);

// {"k": int, "colors": {"<vertex>": color}}; 1-based vertex labels and colors.
nlohmann::json coloring_json(const Coloring& c);

}  // namespace chroma
