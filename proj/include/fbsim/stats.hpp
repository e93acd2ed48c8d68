#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fbsim/error.hpp"
#include "fbsim/graph.hpp"

namespace fbsim {

struct GraphStats {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double avg_degree = 0.0;
  double bridge_fraction = 0.0;
};

/// Incident edge endpoints per node, 2E/N for both directed and undirected graphs.
inline double avg_degree(const Graph& g) {
  if (g.node_count() == 0) throw UndefinedStatistic("avg_degree of an empty graph");
  return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
}

/// Number of bridges in a simple undirected adjacency, by iterative low-link DFS.
inline std::size_t count_bridges(const Csr& adj) {
  const std::size_t n = adj.node_count();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnvisited), low(n, 0);
  std::vector<NodeId> parent(n, 0);
  // (node, index of next neighbor to scan)
  std::vector<std::pair<NodeId, std::size_t>> stack;
  std::size_t timer = 0, bridges = 0;

  for (NodeId root = 0; root < n; ++root) {
    if (disc[root] != kUnvisited) continue;
    disc[root] = low[root] = timer++;
    parent[root] = root;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      auto nb = adj.neighbors(u);
      if (next < nb.size()) {
        NodeId v = nb[next++];
        if (disc[v] == kUnvisited) {
          disc[v] = low[v] = timer++;
          parent[v] = u;
          stack.emplace_back(v, 0);
        } else if (v != parent[u]) {
          low[u] = std::min(low[u], disc[v]);
        }
        continue;
      }
      NodeId done = u;
      stack.pop_back();
      if (done == root) continue;
      NodeId p = parent[done];
      low[p] = std::min(low[p], low[done]);
      if (low[done] > disc[p]) ++bridges;
    }
  }
  return bridges;
}

/// Fraction of edges of the undirected projection whose removal disconnects
/// their endpoints. Self-loops are ignored.
inline double bridge_fraction(const Graph& g) {
  Csr adj = undirected_projection(g);
  const std::size_t edges = adj.targets.size() / 2;
  if (edges == 0) throw UndefinedStatistic("bridge_fraction of a graph without edges");
  return static_cast<double>(count_bridges(adj)) / static_cast<double>(edges);
}

inline GraphStats compute_stats(const Graph& g) {
  return {g.node_count(), g.edge_count(), avg_degree(g), bridge_fraction(g)};
}

}  // namespace fbsim
