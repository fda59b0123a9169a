#pragma once

// Graph families used by the extremal constructions and the random corpora.
// Vertex numbering per family is fixed and documented so tests can address
// tiers and copies by id.

#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include "contagion/error.hpp"
#include "contagion/graph.hpp"
#include "contagion/rational.hpp"
#include "contagion/rng.hpp"

namespace contagion {

inline Graph complete_graph(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// 0 - 1 - ... - (n-1) - 0
inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::invalid_argument, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, edges);
}

inline Graph path_graph(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

/// Star K_{1,n-1} with centre 0 plus the perfect matching (1,2), (3,4), ...
/// on the leaves. n must be odd and at least 3.
inline Graph star_with_matching(std::size_t n) {
  if (n < 3 || n % 2 == 0)
    throw Error(ErrorKind::invalid_argument, "star with matching needs odd n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  for (Vertex v = 1; v + 1 < n; v += 2) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

/// Root 0; tier-2 vertices 1..d; tier-2 vertex t owns the d-1 leaves
/// d+1+(t-1)(d-1) .. d+(t)(d-1). Every non-leaf has degree d; n = 1 + d^2.
struct TwoLevelTree {
  Graph graph;
  std::size_t d = 0;

  Vertex root() const { return 0; }
  std::vector<Vertex> tier2() const {
    std::vector<Vertex> out;
    for (Vertex v = 1; v <= d; ++v) out.push_back(v);
    return out;
  }
  std::vector<Vertex> leaves_of(Vertex t) const {
    std::vector<Vertex> out;
    const Vertex first = static_cast<Vertex>(d + 1 + (t - 1) * (d - 1));
    for (Vertex i = 0; i + 1 < d; ++i) out.push_back(first + i);
    return out;
  }
  std::vector<Vertex> tier3() const {
    std::vector<Vertex> out;
    for (Vertex v = static_cast<Vertex>(d + 1); v < graph.order(); ++v) out.push_back(v);
    return out;
  }
};

inline TwoLevelTree balanced_two_level_tree(std::size_t d) {
  if (d < 2) throw Error(ErrorKind::invalid_argument, "two-level tree needs d >= 2");
  TwoLevelTree t;
  t.d = d;
  const std::size_t n = 1 + d * d;
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= d; ++v) edges.emplace_back(0, v);
  Vertex next_leaf = static_cast<Vertex>(d + 1);
  for (Vertex v = 1; v <= d; ++v)
    for (std::size_t i = 0; i + 1 < d; ++i) edges.emplace_back(v, next_leaf++);
  t.graph = Graph(n, edges);
  return t;
}

/// Parameters of the two-seeds-per-block gadget chain.
///
/// Requires 0 < rho < 1/3 and frac(1/rho) > 1/2. With b = floor(1/rho) and
/// gamma = 1/rho - b - 1/2, each block has 2b+1 vertices and forces two seeds,
/// so the chain has h >= 2k = (1 + eps_max) * rho * n exactly.
class GadgetParams {
 public:
  GadgetParams(Rational rho, std::size_t k) : rho_(std::move(rho)), k_(k) {
    if (rho_ <= 0 || rho_ >= Rational(1, 3))
      throw Error(ErrorKind::invalid_argument, "gadget needs 0 < rho < 1/3, got " + to_string(rho_));
    if (k_ < 1) throw Error(ErrorKind::invalid_argument, "gadget needs k >= 1");
    const Rational inv = 1 / rho_;
    b_ = floor(inv).convert_to<std::size_t>();
    gamma_ = inv - Rational(b_) - Rational(1, 2);
    if (gamma_ <= 0)
      throw Error(ErrorKind::invalid_argument,
                  "gadget needs frac(1/rho) > 1/2, got rho = " + to_string(rho_));
  }

  const Rational& rho() const noexcept { return rho_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t b() const noexcept { return b_; }
  const Rational& gamma() const noexcept { return gamma_; }
  std::size_t block_order() const noexcept { return 2 * b_ + 1; }
  std::size_t order() const noexcept { return k_ * block_order() + 1; }

  /// rho(gamma - 1/(2k)) / (1 - rho(gamma - 1/(2k))).
  Rational eps_max() const {
    const Rational t = rho_ * (gamma_ - Rational(1, 2 * static_cast<long long>(k_)));
    return t / (1 - t);
  }

  /// k > 1/(2 gamma), the regime where eps_max > 0.
  bool separates() const { return Rational(k_) > 1 / (2 * gamma_); }

 private:
  Rational rho_;
  std::size_t k_;
  std::size_t b_ = 0;
  Rational gamma_;
};

/// Block i occupies [i(2b+1), (i+1)(2b+1)): first the b vertices of A, then
/// the clique B, then u. The apex s is the last vertex.
struct GadgetChain {
  Graph graph;
  GadgetParams params;

  Vertex block_begin(std::size_t i) const { return static_cast<Vertex>(i * params.block_order()); }
  Vertex a(std::size_t i, std::size_t j) const { return block_begin(i) + static_cast<Vertex>(j); }
  Vertex b(std::size_t i, std::size_t j) const {
    return block_begin(i) + static_cast<Vertex>(params.b() + j);
  }
  Vertex u(std::size_t i) const { return block_begin(i) + static_cast<Vertex>(2 * params.b()); }
  Vertex apex() const { return static_cast<Vertex>(graph.order() - 1); }

  VertexSet block(std::size_t i) const {
    VertexSet s(graph.order());
    for (std::size_t j = 0; j < params.block_order(); ++j) s.insert(block_begin(i) + static_cast<Vertex>(j));
    return s;
  }
};

inline GadgetChain gadget_chain(const GadgetParams& params) {
  const std::size_t b = params.b();
  const std::size_t n = params.order();
  std::vector<Edge> edges;
  GadgetChain chain{Graph(), params};
  for (std::size_t i = 0; i < params.k(); ++i) {
    for (std::size_t x = 0; x < b; ++x)
      for (std::size_t y = x + 1; y < b; ++y) edges.emplace_back(chain.b(i, x), chain.b(i, y));
    for (std::size_t x = 0; x < b; ++x)
      for (std::size_t y = 0; y < b; ++y) edges.emplace_back(chain.a(i, x), chain.b(i, y));
    for (std::size_t x = 0; x < b; ++x) edges.emplace_back(chain.a(i, x), chain.u(i));
    edges.emplace_back(chain.u(i), static_cast<Vertex>(n - 1));
  }
  chain.graph = Graph(n, edges);
  return chain;
}

// ---------------------------------------------------------------------------
// Random corpora

/// Uniform labelled tree on n vertices via Prüfer-sequence decoding.
inline Graph random_tree(std::size_t n, std::uint64_t rng_seed) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "random tree needs n >= 1");
  if (n == 1) return Graph(1);
  if (n == 2) return Graph(2, {Edge{0, 1}});
  Rng rng(rng_seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng.below(n));

  std::vector<std::size_t> remaining(n, 1);
  for (Vertex c : code) ++remaining[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (remaining[v] == 1) leaves.push(v);

  std::vector<Edge> edges;
  for (Vertex c : code) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
    if (--remaining[c] == 1) leaves.push(c);
  }
  Vertex x = leaves.top();
  leaves.pop();
  Vertex y = leaves.top();
  edges.emplace_back(std::min(x, y), std::max(x, y));
  return Graph(n, edges);
}

/// Random tree backbone plus each remaining pair independently with
/// probability edge_prob. Always connected.
inline Graph random_connected_graph(std::size_t n, double edge_prob, std::uint64_t rng_seed) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "random graph needs n >= 1");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw Error(ErrorKind::invalid_argument, "edge probability must lie in [0,1]");
  Graph tree = random_tree(n, stream_seed(rng_seed, 0));
  Rng rng(stream_seed(rng_seed, 1));
  std::vector<Edge> edges = tree.edges();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!tree.adjacent(u, v) && rng.bernoulli(edge_prob)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace contagion
