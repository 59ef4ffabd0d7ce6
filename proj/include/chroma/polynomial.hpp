// Chromatic polynomials by memoized deletion-contraction,
//   P(G) = P(G - e) - P(G / e),  base case: n isolated vertices -> k^n,
// with big-integer coefficients (counts overflow 64 bits quickly).
//
// The memo table is keyed on a canonical relabelling refined from degree
// sequences. The key is the full relabelled adjacency structure, so equal keys
// mean identical graphs; imperfect canonicalization only costs cache misses,
// never correctness.

#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chroma/coloring.hpp"
#include "chroma/graph.hpp"
#include "json.hpp"

namespace chroma {

inline constexpr int kPolynomialCap = 16;  // deletion-contraction is exponential

// Integer polynomial in k; coefficients()[i] multiplies k^i.
class ChromaticPolynomial {
 public:
  ChromaticPolynomial() = default;  // the zero polynomial

  static ChromaticPolynomial monomial(int degree);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coefficient(int power) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  BigInt operator()(const BigInt& k) const;

  ChromaticPolynomial& operator+=(const ChromaticPolynomial& other);
  ChromaticPolynomial& operator-=(const ChromaticPolynomial& other);
  friend ChromaticPolynomial operator+(ChromaticPolynomial a,
                                       const ChromaticPolynomial& b) {
    return a += b;
  }
  friend ChromaticPolynomial operator-(ChromaticPolynomial a,
                                       const ChromaticPolynomial& b) {
    return a -= b;
  }
  bool operator==(const ChromaticPolynomial&) const = default;

  std::string to_string() const;  // e.g. "k^3 - 3k^2 + 2k"

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Exact evaluation at a non-negative integer point.
BigInt evaluate(const ChromaticPolynomial& p, int k);

// P(G). Refuses graphs above `cap` vertices.
ChromaticPolynomial chromatic_polynomial(const Graph& g,
                                         int cap = kPolynomialCap);

// True iff P(G) = P(G+uv) + P(G/uv) holds as a polynomial identity.
// Requires (u,v) to be a non-edge.
bool check_addition_contraction(const Graph& g, Vertex u, Vertex v);

// {"degree": n, "coefficients": ["...", ...]} with decimal strings, index =
// power of k.
nlohmann::json polynomial_json(const ChromaticPolynomial& p);

// Drop all memoized polynomials (test hygiene; the cache is insert-only and
// shared process-wide otherwise).
void clear_polynomial_cache();

}  // namespace chroma
