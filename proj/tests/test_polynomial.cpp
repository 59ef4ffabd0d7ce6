#include "chroma/fixtures.hpp"
#include "chroma/polynomial.hpp"
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

// Coefficients of the product of (k - c) factors, built independently of the
// library's polynomial arithmetic.
std::vector<BigInt> expand_factors(const std::vector<long>& roots) {
  std::vector<BigInt> coeffs{1};
  for (long r : roots) {
    std::vector<BigInt> next(coeffs.size() + 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= coeffs[i] * r;
    }
    coeffs = next;
  }
  return coeffs;
}

}  // namespace

TEST_CASE("base cases and small polynomials") {
  SUBCASE("edgeless graphs give k^n") {
    ChromaticPolynomial p = chromatic_polynomial(Graph(3));
    CHECK(p.degree() == 3);
    CHECK(p.coefficient(3) == 1);
    CHECK(p.coefficient(2) == 0);
    CHECK(p.coefficient(1) == 0);
    CHECK(p.coefficient(0) == 0);
  }
  SUBCASE("triangle") {
    ChromaticPolynomial p = chromatic_polynomial(complete_graph(3));
    CHECK(p.coefficient(3) == 1);
    CHECK(p.coefficient(2) == -3);
    CHECK(p.coefficient(1) == 2);
    CHECK(p.coefficient(0) == 0);
    CHECK(p.to_string() == "k^3 - 3k^2 + 2k");
  }
  SUBCASE("square, checked against raw enumeration") {
    ChromaticPolynomial p = chromatic_polynomial(cycle_graph(4));
    CHECK(p.coefficient(4) == 1);
    CHECK(p.coefficient(3) == -4);
    CHECK(p.coefficient(2) == 6);
    CHECK(p.coefficient(1) == -3);
    CHECK(evaluate(p, 2) == oracle::colorings(cycle_graph(4), 2).size());
    CHECK(evaluate(p, 3) == oracle::colorings(cycle_graph(4), 3).size());
    CHECK(evaluate(p, 2) == 2);
    CHECK(evaluate(p, 3) == 18);
  }
}

TEST_CASE("evaluate") {
  ChromaticPolynomial k3 = chromatic_polynomial(complete_graph(3));
  CHECK(evaluate(k3, 2) == 0);
  CHECK(evaluate(k3, 3) == 6);
  CHECK_THROWS_AS(evaluate(k3, -1), PreconditionError);

  const Graph fig = fixture_by_name("ie3-a").graph;
  CHECK(evaluate(chromatic_polynomial(fig), 3) ==
        oracle::colorings(fig, 3).size());
}

TEST_CASE("polynomial evaluation matches raw counting exhaustively") {
  exhaustive(4, [](const Graph& g) {
    ChromaticPolynomial p = chromatic_polynomial(g);
    for (int k = 0; k <= 4; ++k)
      CHECK(evaluate(p, k) == oracle::colorings(g, k).size());
  });
}

TEST_CASE("structural invariants of the coefficients") {
  exhaustive(4, [](const Graph& g) {
    if (g.order() == 0) return;
    ChromaticPolynomial p = chromatic_polynomial(g);
    CHECK(p.degree() == g.order());
    CHECK(p.coefficient(p.degree()) == 1);
    CHECK(p.coefficient(0) == 0);
    // signs alternate from the top (zero coefficients allowed)
    for (int i = 0; i <= p.degree(); ++i) {
      BigInt c = p.coefficient(i);
      if ((p.degree() - i) % 2 == 0)
        CHECK(c >= 0);
      else
        CHECK(c <= 0);
    }
  });
}

TEST_CASE("deletion-contraction and addition-contraction identities") {
  exhaustive(4, [](const Graph& g) {
    ChromaticPolynomial p = chromatic_polynomial(g);
    for (auto [u, v] : g.edges())
      CHECK(p == chromatic_polynomial(delete_edge(g, u, v)) -
                     chromatic_polynomial(contract_edge(g, u, v).graph));
    const std::vector<Vertex> vs = g.vertices();
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b)
        if (!g.has_edge(vs[a], vs[b]))
          CHECK(check_addition_contraction(g, vs[a], vs[b]));
  });
  CHECK(check_addition_contraction(path_graph(3), 0, 2));
  CHECK(check_addition_contraction(path_graph(4), 0, 3));
  CHECK_THROWS_AS(check_addition_contraction(path_graph(3), 0, 1),
                  PreconditionError);
}

TEST_CASE("closed forms") {
  SUBCASE("complete graphs: falling factorial") {
    for (int n = 1; n <= 6; ++n) {
      std::vector<long> roots;
      for (long r = 0; r < n; ++r) roots.push_back(r);
      ChromaticPolynomial p = chromatic_polynomial(complete_graph(n));
      std::vector<BigInt> expected = expand_factors(roots);
      REQUIRE(p.coefficients().size() == expected.size());
      for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(p.coefficient(static_cast<int>(i)) == expected[i]);
    }
  }
  SUBCASE("paths: k(k-1)^(n-1)") {
    for (int n = 1; n <= 10; ++n) {
      std::vector<long> roots{0};
      for (int r = 1; r < n; ++r) roots.push_back(1);
      ChromaticPolynomial p = chromatic_polynomial(path_graph(n));
      std::vector<BigInt> expected = expand_factors(roots);
      REQUIRE(p.coefficients().size() == expected.size());
      for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(p.coefficient(static_cast<int>(i)) == expected[i]);
    }
  }
}

TEST_CASE("cap refusal") {
  CHECK_THROWS_WITH_AS(chromatic_polynomial(Graph(17)),
                       doctest::Contains("16"), RefusalError);
  CHECK_THROWS_AS(chromatic_polynomial(Graph(10), 8), RefusalError);
  // the built-in limit cannot be raised past the memo key's capacity
  CHECK_THROWS_AS(chromatic_polynomial(Graph(17), 32), RefusalError);
}

TEST_CASE("coefficients serialize as decimal strings") {
  nlohmann::json j = polynomial_json(chromatic_polynomial(complete_graph(3)));
  CHECK(j["degree"] == 3);
  CHECK(j["coefficients"] ==
        nlohmann::json::array({"0", "2", "-3", "1"}));
}

TEST_CASE("big coefficients stay exact") {
  // K12's falling factorial has coefficients beyond 32 bits; spot-check the
  // Stirling value s(12,2) = -13, and the full factorial at k = 12.
  ChromaticPolynomial p = chromatic_polynomial(complete_graph(12));
  CHECK(evaluate(p, 12) == BigInt("479001600"));  // 12!
  CHECK(evaluate(p, 11) == 0);
}
