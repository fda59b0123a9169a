#pragma once

#include <vector>

#include "contagion/graph.hpp"
#include "oracles.hpp"

namespace testing_support {

inline oracle::AdjList to_oracle(const contagion::Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  return oracle::adjacency(static_cast<int>(g.order()), edges);
}

inline contagion::Graph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<contagion::Edge> edges;
  for (auto [u, v] : pairs) edges.emplace_back(static_cast<contagion::Vertex>(u), static_cast<contagion::Vertex>(v));
  return contagion::Graph(static_cast<std::size_t>(n), edges);
}

}  // namespace testing_support
