#pragma once

// Simple undirected graphs on dense vertex ids 0..n-1, their structural
// queries, and the plain-text edge-list format:
//
//   n m
//   u v        (m lines, 0 <= u,v < n, u != v, no duplicates)

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "contagion/error.hpp"
#include "contagion/vertex_set.hpp"

namespace contagion {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : adjacency_(n) {}

  /// Throws Error(invalid_graph) on self-loops, duplicate edges or ids >= n.
  Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
    for (auto [u, v] : edges) {
      if (u >= n || v >= n)
        throw Error(ErrorKind::invalid_graph, "edge " + describe(u, v) + " has a vertex id out of range");
      if (u == v) throw Error(ErrorKind::invalid_graph, "self-loop at vertex " + std::to_string(u));
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (std::size_t v = 0; v < n; ++v) {
      auto& nb = adjacency_[v];
      std::sort(nb.begin(), nb.end());
      if (auto dup = std::adjacent_find(nb.begin(), nb.end()); dup != nb.end())
        throw Error(ErrorKind::invalid_graph,
                    "duplicate edge " + describe(static_cast<Vertex>(v), *dup));
    }
    edge_count_ = edges.size();
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_.at(v); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& nb = adjacency_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static std::string describe(Vertex u, Vertex v) {
    return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
  }

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// ---------------------------------------------------------------------------
// Edge-list format

inline Graph read_edge_list(std::istream& in) {
  auto fail = [](std::size_t line_no, const std::string& msg) {
    return Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": " + msg);
  };
  // Reads exactly two unsigned integers and nothing else from a line.
  auto parse_pair = [&](const std::string& line, std::size_t line_no) {
    std::istringstream ls(line);
    long long a = -1, b = -1;
    std::string rest;
    if (!(ls >> a >> b) || (ls >> rest))
      throw fail(line_no, "expected two integers, got '" + line + "'");
    if (a < 0 || b < 0) throw fail(line_no, "negative value in '" + line + "'");
    return std::pair<long long, long long>(a, b);
  };

  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw fail(1, "missing header 'n m'");
  ++line_no;
  auto [n, m] = parse_pair(line, line_no);
  if (n > std::numeric_limits<Vertex>::max()) throw fail(line_no, "vertex count too large");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (static_cast<long long>(edges.size()) < m) {
    if (!std::getline(in, line))
      throw fail(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
    ++line_no;
    auto [u, v] = parse_pair(line, line_no);
    if (u >= n || v >= n)
      throw Error(ErrorKind::invalid_graph,
                  "line " + std::to_string(line_no) + ": vertex id out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      throw fail(line_no, "unexpected content after " + std::to_string(m) + " edges");
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

inline Graph graph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

// ---------------------------------------------------------------------------
// Structural queries

/// Components ordered by their smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    VertexSet comp(n);
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (Vertex w : g.neighbours(v))
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

/// Length of a shortest cycle; std::nullopt for forests (acyclic).
inline std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
  std::optional<std::size_t> best;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  std::queue<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), unseen);
    dist[root] = 0;
    parent[root] = root;
    queue.push(root);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      // Nothing shorter can close below this depth.
      if (best && 2 * dist[v] + 1 >= *best) continue;
      for (Vertex w : g.neighbours(v)) {
        if (dist[w] == unseen) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push(w);
        } else if (parent[v] != w) {
          std::size_t len = dist[v] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

/// Induced subgraph G - S with order-preserving relabelling.
struct InducedSubgraph {
  Graph graph;
  std::vector<std::optional<Vertex>> old_to_new;
  std::vector<Vertex> new_to_old;
};

inline InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed) {
  if (removed.universe() != g.order())
    throw Error(ErrorKind::invalid_graph, "vertex set does not match graph order");
  InducedSubgraph out;
  out.old_to_new.assign(g.order(), std::nullopt);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (removed.contains(v)) continue;
    out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (out.old_to_new[u] && out.old_to_new[v]) edges.emplace_back(*out.old_to_new[u], *out.old_to_new[v]);
  out.graph = Graph(out.new_to_old.size(), edges);
  return out;
}

/// Subgraph induced by `kept`.
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& kept) {
  return delete_vertices(g, kept.complement());
}

}  // namespace contagion
