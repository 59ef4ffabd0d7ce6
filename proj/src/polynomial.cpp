#include "chroma/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace chroma {

ChromaticPolynomial ChromaticPolynomial::monomial(int degree) {
  ChromaticPolynomial p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, 0);
  p.coeffs_.back() = 1;
  return p;
}

BigInt ChromaticPolynomial::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

BigInt ChromaticPolynomial::operator()(const BigInt& k) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * k + *it;
  return acc;
}

ChromaticPolynomial& ChromaticPolynomial::operator+=(
    const ChromaticPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

ChromaticPolynomial& ChromaticPolynomial::operator-=(
    const ChromaticPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

void ChromaticPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string ChromaticPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int p = degree(); p >= 0; --p) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(p)];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || p == 0) out << mag.str();
    if (p >= 1) out << "k";
    if (p >= 2) out << "^" << p;
  }
  return out.str();
}

BigInt evaluate(const ChromaticPolynomial& p, int k) {
  if (k < 0) throw PreconditionError("evaluation point must be non-negative");
  return p(BigInt(k));
}

namespace {

// Canonical relabelling key: vertices are ordered by an iterated degree
// refinement (original label as the final tie-break), and the key stores the
// relabelled adjacency triangle verbatim. n <= 16 keeps the triangle in two
// 64-bit words.
struct CanonKey {
  std::uint64_t lo = 0, hi = 0;
  std::uint32_t n = 0;
  bool operator==(const CanonKey&) const = default;
};

struct CanonKeyHash {
  std::size_t operator()(const CanonKey& k) const {
    std::uint64_t h = k.lo * 0x9e3779b97f4a7c15ULL;
    h ^= k.hi + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= k.n + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

CanonKey canonical_key(const Graph& g) {
  const std::vector<Vertex> vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  std::array<int, kMaxVertices> color{};
  for (Vertex v : vs) color[v] = g.degree(v);

  // Refine colors by sorted neighbor-color multisets until stable.
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::vector<int>, Vertex>> sig;
    sig.reserve(vs.size());
    for (Vertex v : vs) {
      std::vector<int> s{color[v]};
      for (VertexSet rest = g.neighbors(v); rest; rest &= rest - 1)
        s.push_back(color[std::countr_zero(rest)]);
      std::sort(s.begin() + 1, s.end());
      sig.emplace_back(std::move(s), v);
    }
    std::sort(sig.begin(), sig.end());
    std::array<int, kMaxVertices> next{};
    int c = 0;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      if (i > 0 && sig[i].first != sig[i - 1].first) ++c;
      next[sig[i].second] = c;
    }
    bool changed = false;
    for (Vertex v : vs) changed |= next[v] != color[v];
    color = next;
    if (!changed) break;
  }

  std::vector<Vertex> order = vs;
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return color[a] != color[b] ? color[a] < color[b] : a < b;
  });
  std::array<int, kMaxVertices> pos{};
  for (int i = 0; i < n; ++i) pos[order[static_cast<std::size_t>(i)]] = i;

  CanonKey key;
  key.n = static_cast<std::uint32_t>(n);
  int bitindex = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bitindex)
      if (g.has_edge(order[static_cast<std::size_t>(i)],
                     order[static_cast<std::size_t>(j)])) {
        if (bitindex < 64)
          key.lo |= std::uint64_t{1} << bitindex;
        else
          key.hi |= std::uint64_t{1} << (bitindex - 64);
      }
  return key;
}

using PolyCache = std::unordered_map<CanonKey, ChromaticPolynomial, CanonKeyHash>;

PolyCache& cache() {
  static thread_local PolyCache table;
  return table;
}

// Pivot edge: most common neighbors first (its contraction collapses the most
// parallel edges), lexicographic tie-break.
std::pair<Vertex, Vertex> pivot_edge(const Graph& g) {
  std::pair<Vertex, Vertex> best{-1, -1};
  int best_common = -1;
  for (auto [u, v] : g.edges()) {
    int common = std::popcount(g.neighbors(u) & g.neighbors(v));
    if (common > best_common) {
      best_common = common;
      best = {u, v};
    }
  }
  return best;
}

ChromaticPolynomial compute(const Graph& g) {
  if (g.edge_count() == 0) return ChromaticPolynomial::monomial(g.order());
  CanonKey key = canonical_key(g);
  if (auto it = cache().find(key); it != cache().end()) return it->second;
  auto [u, v] = pivot_edge(g);
  ChromaticPolynomial p =
      compute(delete_edge(g, u, v)) - compute(contract_edge(g, u, v).graph);
  cache().emplace(key, p);
  return p;
}

}  // namespace

ChromaticPolynomial chromatic_polynomial(const Graph& g, int cap) {
  // The memo key packs an upper triangle of at most 128 bits, so the built-in
  // limit can be tightened by callers but never raised.
  int effective = std::min(cap, kPolynomialCap);
  if (g.order() > effective)
    throw RefusalError("chromatic polynomial refused: order " +
                       std::to_string(g.order()) + " exceeds the cap of " +
                       std::to_string(effective) + " vertices");
  return compute(g);
}

bool check_addition_contraction(const Graph& g, Vertex u, Vertex v) {
  g.require_vertex(u);
  g.require_vertex(v);
  if (g.has_edge(u, v))
    throw PreconditionError("(" + std::to_string(u) + "," + std::to_string(v) +
                            ") is already an edge");
  ChromaticPolynomial lhs = chromatic_polynomial(g);
  ChromaticPolynomial rhs =
      chromatic_polynomial(add_edge(g, u, v).graph) +
      chromatic_polynomial(identify_vertices(g, u, v).graph);
  return lhs == rhs;
}

nlohmann::json polynomial_json(const ChromaticPolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const BigInt& c : p.coefficients()) coeffs.push_back(c.str());
  return nlohmann::json{{"degree", p.degree()}, {"coefficients", coeffs}};
}

void clear_polynomial_cache() { cache().clear(); }

}  // namespace chroma
