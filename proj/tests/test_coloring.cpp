#include <set>

#include "chroma/coloring.hpp"
#include "chroma/fixtures.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chroma;

namespace {

template <typename Fn>
void exhaustive(int max_n, Fn&& fn) {
  for (int n = 0; n <= max_n; ++n) {
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size());
         ++mask) {
      Graph g(n);
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (mask >> i & 1) g.insert_edge(slots[i].first, slots[i].second);
      fn(g);
    }
  }
}

}  // namespace

TEST_CASE("find_k_coloring") {
  auto c = find_k_coloring(complete_graph(3), 3);
  REQUIRE(c.has_value());
  CHECK(is_proper(complete_graph(3), *c));
  std::set<int> used{c->color_of(0), c->color_of(1), c->color_of(2)};
  CHECK(used.size() == 3);

  CHECK_FALSE(find_k_coloring(complete_graph(3), 2).has_value());

  const Graph fig = fixture_by_name("ie3-a").graph;
  auto fc = find_k_coloring(fig, 3);
  REQUIRE(fc.has_value());
  CHECK(is_proper(fig, *fc));

  SUBCASE("degenerate color counts") {
    CHECK(find_k_coloring(Graph(0), 0).has_value());
    CHECK_FALSE(find_k_coloring(Graph(1), 0).has_value());
    CHECK(find_k_coloring(Graph(3), 1).has_value());
    CHECK_THROWS_AS(find_k_coloring(Graph(1), -1), PreconditionError);
  }
  SUBCASE("deterministic") {
    auto a = find_k_coloring(cycle_graph(5), 3);
    auto b = find_k_coloring(cycle_graph(5), 3);
    CHECK(*a == *b);
  }
}

TEST_CASE("chromatic_number") {
  CHECK(chromatic_number(complete_graph(4)) == 4);
  CHECK(chromatic_number(cycle_graph(5)) == 3);
  CHECK(chromatic_number(Graph(0)) == 0);
  CHECK(chromatic_number(Graph(5)) == 1);
  CHECK(chromatic_number(fixture_by_name("ie4-a").graph) == 4);
  // agrees with brute force on every graph up to 4 vertices
  exhaustive(4, [](const Graph& g) {
    CHECK(chromatic_number(g) == oracle::chromatic_number(g));
  });
}

TEST_CASE("count_k_colorings") {
  CHECK(count_k_colorings(complete_graph(3), 3) == 6);
  CHECK(count_k_colorings(path_graph(4), 2) == 2);
  CHECK(count_k_colorings(cycle_graph(4), 3) ==
        oracle::colorings(cycle_graph(4), 3).size());
  CHECK(oracle::colorings(cycle_graph(4), 3).size() == 18);
  CHECK(count_k_colorings(Graph(0), 0) == 1);
  CHECK(count_k_colorings(Graph(2), 0) == 0);
  // labelled counts, no symmetry folding: exhaustive n <= 4, k <= 3
  exhaustive(4, [](const Graph& g) {
    for (int k = 0; k <= 3; ++k)
      CHECK(count_k_colorings(g, k) == oracle::colorings(g, k).size());
  });
}

TEST_CASE("enumerate_k_colorings") {
  SUBCASE("triangle") {
    auto all = enumerate_k_colorings(complete_graph(3), 3);
    CHECK(all.size() == 6);
    for (const Coloring& c : all) CHECK(is_proper(complete_graph(3), c));
  }
  SUBCASE("single vertex, two colors") {
    CHECK(enumerate_k_colorings(Graph(1), 2).size() == 2);
  }
  SUBCASE("four-path, two colors: both separate the endpoints' partner pair") {
    auto all = enumerate_k_colorings(path_graph(4), 2);
    REQUIRE(all.size() == 2);
    for (const Coloring& c : all) CHECK(c.color_of(0) != c.color_of(3));
  }
  SUBCASE("exactly once, deterministic order") {
    auto a = enumerate_k_colorings(cycle_graph(5), 3);
    auto b = enumerate_k_colorings(cycle_graph(5), 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    std::set<std::vector<int>> distinct;
    for (const Coloring& c : a) {
      std::vector<int> key;
      for (Vertex v : cycle_graph(5).vertices()) key.push_back(c.color_of(v));
      distinct.insert(key);
    }
    CHECK(distinct.size() == a.size());
  }
  SUBCASE("budget refusal") {
    CHECK_THROWS_WITH_AS(enumerate_k_colorings(Graph(30), 4),
                         doctest::Contains("budget"), RefusalError);
    // explicit tighter budget
    CHECK_THROWS_AS(enumerate_k_colorings(Graph(4), 4, 100), RefusalError);
  }
}

TEST_CASE("count equals enumeration length") {
  exhaustive(4, [](const Graph& g) {
    for (int k = 0; k <= 4; ++k)
      CHECK(count_k_colorings(g, k) == enumerate_k_colorings(g, k).size());
  });
}

TEST_CASE("critical_independent_sets") {
  SUBCASE("triangle: each singleton leaves an edge") {
    auto sets = critical_independent_sets(complete_graph(3), 3);
    REQUIRE(sets.size() == 3);
    for (const IndependentSet& s : sets) CHECK(set_size(s.members) == 1);
  }
  SUBCASE("five-cycle: computed against brute force") {
    Graph c5 = cycle_graph(5);
    auto sets = critical_independent_sets(c5, 3);
    std::vector<VertexSet> expected;
    for (VertexSet s : oracle::independent_sets(c5)) {
      if (s == 0) continue;
      if (oracle::chromatic_number(delete_vertices(c5, s)) == 2)
        expected.push_back(s);
    }
    CHECK(sets.size() == expected.size());
    CHECK(sets.size() == 10);  // 5 singletons + 5 independent pairs
  }
  SUBCASE("four-path at k=2: exactly the color classes of its 2-colorings") {
    Graph p4 = path_graph(4);
    std::set<VertexSet> classes;
    for (const auto& assign : oracle::colorings(p4, 2)) {
      VertexSet c1 = 0, c2 = 0;
      for (std::size_t i = 0; i < assign.size(); ++i)
        (assign[i] == 1 ? c1 : c2) |= vbit(static_cast<Vertex>(i));
      classes.insert(c1);
      classes.insert(c2);
    }
    auto sets = critical_independent_sets(p4, 2);
    CHECK(sets.size() == classes.size());
    for (const IndependentSet& s : sets) CHECK(classes.count(s.members) == 1);
  }
  SUBCASE("wrong k names the actual chromatic number") {
    CHECK_THROWS_WITH_AS(critical_independent_sets(complete_graph(3), 2),
                         doctest::Contains("3"), PreconditionError);
  }
  SUBCASE("removal of a yielded set drops chi by exactly one") {
    for (const Graph& g : {cycle_graph(5), complete_graph(4), path_graph(4)}) {
      int k = chromatic_number(g);
      for (const IndependentSet& s : critical_independent_sets(g, k))
        CHECK(chromatic_number(delete_vertices(g, s.members)) == k - 1);
    }
  }
}

TEST_CASE("chromatic number monotonicity") {
  exhaustive(4, [](const Graph& g) {
    int chi = chromatic_number(g);
    for (Vertex x : g.vertices())
      CHECK(chromatic_number(delete_vertex(g, x)) <= chi);
    for (auto [u, v] : g.edges())
      CHECK(chromatic_number(delete_edge(g, u, v)) <= chi);
    const std::vector<Vertex> vs = g.vertices();
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        int merged =
            chromatic_number(identify_vertices(g, vs[a], vs[b]).graph);
        CHECK(merged <= chi + 1);
        CHECK(merged >= chi - 1);
      }
  });
}

TEST_CASE("coloring json uses 1-based labels and colors") {
  Coloring c(2, vbit(0) | vbit(1));
  c.set_color(0, 1);
  c.set_color(1, 2);
  nlohmann::json j = coloring_json(c);
  CHECK(j["k"] == 2);
  CHECK(j["colors"]["1"] == 1);
  CHECK(j["colors"]["2"] == 2);
}
