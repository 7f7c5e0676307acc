#include "qgb/graph.hpp"

#include <algorithm>
#include <queue>

#include "qgb/error.hpp"

namespace qgb {

std::vector<std::pair<int, int>> normalize_edges(int num_nodes,
                                                 std::vector<std::pair<int, int>> edges) {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_nodes || v >= num_nodes)
      throw ConfigError("edge endpoint out of range");
    if (u == v) continue;
    out.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> node_degrees(int num_nodes, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> deg(num_nodes, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<std::vector<int>> adjacency_lists(int num_nodes,
                                              const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(num_nodes);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

void degree_onehot(Dataset& ds) {
  int d_max = 0;
  for (const Graph& g : ds.graphs) {
    for (int d : node_degrees(g.num_nodes, g.edges)) d_max = std::max(d_max, d);
  }
  ds.d_max = d_max;
  for (Graph& g : ds.graphs) {
    const std::vector<int> deg = node_degrees(g.num_nodes, g.edges);
    g.x = Mat(g.num_nodes, d_max + 1);
    for (int v = 0; v < g.num_nodes; ++v) g.x(v, std::min(deg[v], d_max)) = 1.0;
  }
}

EgoSubgraph ego_subgraph(const Graph& g, int center, int hops) {
  if (center < 0 || center >= g.num_nodes) throw ConfigError("ego_subgraph: bad center node");
  const auto adj = adjacency_lists(g.num_nodes, g.edges);

  std::vector<int> dist(g.num_nodes, -1);
  std::vector<int> ordering;
  dist[center] = 0;
  ordering.push_back(center);
  // BFS layer by layer; adjacency lists are sorted, so nodes enter each
  // layer in ascending original-index order.
  std::vector<int> frontier{center};
  for (int layer = 1; layer <= hops && !frontier.empty(); ++layer) {
    std::vector<int> next;
    for (int u : frontier) {
      for (int w : adj[u]) {
        if (dist[w] < 0) {
          dist[w] = layer;
          next.push_back(w);
        }
      }
    }
    std::sort(next.begin(), next.end());
    for (int w : next) ordering.push_back(w);
    frontier = std::move(next);
  }

  std::vector<int> local(g.num_nodes, -1);
  for (size_t i = 0; i < ordering.size(); ++i) local[ordering[i]] = static_cast<int>(i);

  EgoSubgraph sub;
  sub.num_nodes = static_cast<int>(ordering.size());
  sub.ordering = std::move(ordering);
  for (auto [u, v] : g.edges) {
    if (local[u] >= 0 && local[v] >= 0)
      sub.edges.emplace_back(std::min(local[u], local[v]), std::max(local[u], local[v]));
  }
  std::sort(sub.edges.begin(), sub.edges.end());
  return sub;
}

}  // namespace qgb
