#include <algorithm>

#include "chroma/fixtures.hpp"
#include "chroma/implicit.hpp"
#include "chroma/io.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chroma;

namespace {

template <typename Fn>
void exhaustive(int max_n, Fn&& fn) {
  for (int n = 2; n <= max_n; ++n) {
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

PairStatus status_of(const RelationReport& r, Vertex u, Vertex v) {
  for (const PairClassification& c : r.pairs)
    if (c.u == std::min(u, v) && c.v == std::max(u, v)) return c.status;
  FAIL("pair not covered by the report");
  return PairStatus::kFree;
}

}  // namespace

TEST_CASE("is_implicit_edge") {
  CHECK(is_implicit_edge(path_graph(4), 2, 0, 3));
  CHECK(is_implicit_edge(fixture_by_name("ie3-a").graph, 3, 1, 4));
  CHECK_FALSE(is_implicit_edge(complete_graph(3), 3, 0, 1));
  CHECK_THROWS_AS(is_implicit_edge(path_graph(3), 2, 1, 1),
                  PreconditionError);
  CHECK_THROWS_AS(is_implicit_edge(path_graph(3), 0, 0, 2),
                  PreconditionError);
}

TEST_CASE("is_implicit_identity") {
  CHECK(is_implicit_identity(path_graph(3), 2, 0, 2));

  // K4 minus an edge: all 3-colorings force the missing pair together
  Graph k4e = delete_edge(complete_graph(4), 0, 1);
  CHECK(oracle::implicit_identity(k4e, 3, 0, 1));
  CHECK(is_implicit_identity(k4e, 3, 0, 1));

  // C5 separates every non-adjacent pair in some 3-coloring
  Graph c5 = cycle_graph(5);
  CHECK_FALSE(oracle::implicit_identity(c5, 3, 0, 2));
  CHECK_FALSE(is_implicit_identity(c5, 3, 0, 2));

  CHECK_THROWS_AS(is_implicit_identity(path_graph(3), 2, 0, 1),
                  PreconditionError);
}

TEST_CASE("reduction agrees with definition-level enumeration") {
  exhaustive(4, [](const Graph& g) {
    const std::vector<Vertex> vs = g.vertices();
    for (int k = 1; k <= 3; ++k)
      for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
          CHECK(is_implicit_edge(g, k, vs[a], vs[b]) ==
                oracle::implicit_edge(g, k, vs[a], vs[b]));
          if (!g.has_edge(vs[a], vs[b]))
            CHECK(is_implicit_identity(g, k, vs[a], vs[b]) ==
                  oracle::implicit_identity(g, k, vs[a], vs[b]));
        }
  });
}

TEST_CASE("classify_pair") {
  const Graph fig = fixture_by_name("ie3-a").graph;
  PairClassification c = classify_pair(fig, 3, 1, 4);
  CHECK(c.status == PairStatus::kNonDrawnImplicitEdge);
  CHECK_FALSE(c.vacuous);

  // every edge of the square is a drawn implicit edge at k=2
  Graph square = cycle_graph(4);
  for (auto [u, v] : square.edges()) {
    PairClassification e = classify_pair(square, 2, u, v);
    CHECK(e.status == PairStatus::kDrawnImplicitEdge);
  }

  // K4 has no 3-coloring: everything is implicit, flagged vacuous
  for (auto [u, v] : complete_graph(4).edges()) {
    PairClassification e = classify_pair(complete_graph(4), 3, u, v);
    CHECK(e.status == PairStatus::kDrawnImplicitEdge);
    CHECK(e.vacuous);
  }
  // a vacuous non-adjacent pair classifies as a non-drawn implicit edge and
  // also satisfies the identity predicate (both hold over zero colorings)
  Graph c5 = cycle_graph(5);
  PairClassification v = classify_pair(c5, 2, 0, 2);
  CHECK(v.status == PairStatus::kNonDrawnImplicitEdge);
  CHECK(v.vacuous);
  CHECK(is_implicit_identity(c5, 2, 0, 2));

  PairClassification f = classify_pair(cycle_graph(5), 3, 0, 2);
  CHECK(f.status == PairStatus::kFree);
}

TEST_CASE("explicit_neighborhood") {
  const Graph fig = fixture_by_name("ie3-a").graph;
  CHECK(explicit_neighborhood(fig, 3, 1) == (vbit(0) | vbit(3) | vbit(4)));

  Graph k3 = complete_graph(3);
  CHECK(explicit_neighborhood(k3, 3, 0) == (vbit(1) | vbit(2)));

  CHECK(explicit_neighborhood(path_graph(4), 2, 0) == (vbit(1) | vbit(3)));
}

TEST_CASE("explicit_graph closure") {
  SUBCASE("four-path closes to the square") {
    RelationReport r = explicit_graph(path_graph(4), 2);
    CHECK(r.explicit_graph == cycle_graph(4));
    CHECK(r.added_edges ==
          std::vector<std::pair<Vertex, Vertex>>{{0, 3}});
    CHECK_FALSE(r.vacuous);
  }
  SUBCASE("triangle is already explicit") {
    RelationReport r = explicit_graph(complete_graph(3), 3);
    CHECK(r.explicit_graph == complete_graph(3));
    CHECK(r.added_edges.empty());
    for (const PairClassification& c : r.pairs)
      CHECK(c.status == PairStatus::kPlainEdge);
  }
  SUBCASE("K4 at k=3 stays complete with vacuous flags") {
    RelationReport r = explicit_graph(complete_graph(4), 3);
    CHECK(r.vacuous);
    CHECK(r.explicit_graph == complete_graph(4));
    for (const PairClassification& c : r.pairs) CHECK(c.vacuous);
  }
  SUBCASE("closure is a fixpoint in one pass") {
    exhaustive(4, [](const Graph& g) {
      for (int k = 2; k <= 3; ++k) {
        RelationReport first = explicit_graph(g, k);
        RelationReport second = explicit_graph(first.explicit_graph, k);
        CHECK(second.added_edges.empty());
      }
    });
    for (const Fixture& f : builtin_fixtures()) {
      RelationReport first = explicit_graph(f.graph, f.k);
      CHECK(explicit_graph(first.explicit_graph, f.k).added_edges.empty());
    }
  }
  SUBCASE("closure preserves the coloring set") {
    exhaustive(4, [](const Graph& g) {
      RelationReport r = explicit_graph(g, 2);
      CHECK(oracle::colorings(g, 2).size() ==
            oracle::colorings(r.explicit_graph, 2).size());
    });
  }
}

TEST_CASE("contradiction_test") {
  CHECK(contradiction_test(cycle_graph(5), 2, 0, 2));
  CHECK_FALSE(contradiction_test(path_graph(3), 2, 0, 2));
  CHECK_FALSE(
      contradiction_test(fixture_by_name("ie3-a").graph, 3, 1, 4));
  CHECK_THROWS_AS(contradiction_test(path_graph(3), 2, 0, 1),
                  PreconditionError);
  // independent of the chosen non-adjacent pair
  exhaustive(4, [](const Graph& g) {
    const std::vector<Vertex> vs = g.vertices();
    for (int k = 1; k <= 3; ++k) {
      std::vector<bool> answers;
      for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
          if (!g.has_edge(vs[a], vs[b]))
            answers.push_back(contradiction_test(g, k, vs[a], vs[b]));
      for (bool ans : answers) CHECK(ans == answers.front());
    }
  });
}

TEST_CASE("closure_completeness_test") {
  CHECK(closure_completeness_test(complete_graph(4)) ==
        ThreeColorVerdict::kNotThreeColorable);
  CHECK(closure_completeness_test(cycle_graph(5)) ==
        ThreeColorVerdict::kThreeColorable);
  CHECK(closure_completeness_test(fixture_by_name("ie3-b").graph) ==
        ThreeColorVerdict::kThreeColorable);
  CHECK_THROWS_AS(closure_completeness_test(complete_graph(3)), RefusalError);
  CHECK_THROWS_AS(closure_completeness_test(Graph(2)), RefusalError);
}

TEST_CASE("verify_bipartite_characterization") {
  const Graph fig = fixture_by_name("ie3-a").graph;
  TheoremVerdict v = verify_bipartite_characterization(fig, 3, 1, 4);
  CHECK(v.status == VerdictStatus::kConfirmed);
  CHECK(v.instances_checked > 0);

  TheoremVerdict p3 = verify_bipartite_characterization(path_graph(3), 2, 0, 2);
  CHECK(p3.status == VerdictStatus::kConfirmed);

  TheoremVerdict c5 = verify_bipartite_characterization(cycle_graph(5), 3, 0, 2);
  CHECK(c5.status == VerdictStatus::kConfirmed);

  CHECK_THROWS_AS(verify_bipartite_characterization(cycle_graph(5), 2, 0, 2),
                  PreconditionError);
}

TEST_CASE("relation report json and dot") {
  RelationReport r = explicit_graph(fixture_by_name("ie3-a").graph, 3);
  nlohmann::json j = relation_report_json(r);
  CHECK(j["k"] == 3);
  CHECK(j["vacuous"] == false);
  bool found = false;
  for (const auto& p : j["pairs"])
    if (p["u"] == 2 && p["v"] == 5) {
      CHECK(p["status"] == "non-drawn-implicit-edge");
      found = true;
    }
  CHECK(found);
  CHECK(j["explicitEdgesAdded"] == nlohmann::json::array({{2, 5}}));

  std::string dot = to_dot(r);
  CHECK(dot.find("2 -- 5 [style=dashed, constraint=false]") !=
        std::string::npos);

  RelationReport p4 = explicit_graph(path_graph(4), 2);
  std::string p4dot = to_dot(p4);
  CHECK(p4dot.find("style=dotted") != std::string::npos);  // identities
}
