#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qgb/matrix.hpp"

namespace qgb {

// One undirected graph. Edges are stored once each as (u, v) with u < v,
// sorted, deduplicated, no self-loops.
struct Graph {
  int num_nodes = 0;
  std::vector<std::pair<int, int>> edges;
  Mat x;   // degree one-hot, num_nodes x (d_max+1)
  Mat pe;  // positional encoding, num_nodes x k
  int label = -1;
  std::map<std::string, Mat> descriptors;  // per-method cached descriptor matrices
};

struct Dataset {
  std::string name;
  std::vector<Graph> graphs;
  int num_classes = 0;
  int d_max = 0;  // dataset-wide max degree backing the one-hot width
};

// Sorts, deduplicates, and drops self-loops; throws ConfigError on an
// endpoint outside [0, num_nodes).
std::vector<std::pair<int, int>> normalize_edges(int num_nodes,
                                                 std::vector<std::pair<int, int>> edges);

std::vector<int> node_degrees(int num_nodes, const std::vector<std::pair<int, int>>& edges);

// Sorted neighbor lists.
std::vector<std::vector<int>> adjacency_lists(int num_nodes,
                                              const std::vector<std::pair<int, int>>& edges);

// Computes the dataset-wide max degree, sets d_max, and fills every graph's
// x with one-hot rows of width d_max+1; degree g maps to index min(g, d_max).
void degree_onehot(Dataset& ds);

// Induced subgraph on the nodes within `hops` of `center`. `ordering` maps
// local index -> original node index: center first, then BFS layer by layer,
// ties within a layer broken by ascending original index. Edges are in local
// indices.
struct EgoSubgraph {
  int num_nodes = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> ordering;
};

EgoSubgraph ego_subgraph(const Graph& g, int center, int hops);

}  // namespace qgb
