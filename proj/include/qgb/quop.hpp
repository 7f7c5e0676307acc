#pragma once

#include <vector>

#include "qgb/graph.hpp"
#include "qgb/matrix.hpp"

namespace qgb {

struct QuopConfig {
  int hop_radius = 1;
  int qubit_budget = 5;  // descriptor length 2^q; 5 keeps the frozen path at d = 32
};

// Evolves the center-node basis state under exp(-i H_v) where H_v is the
// ego-subgraph adjacency in canonical ordering, zero-padded (or truncated)
// to 2^q x 2^q. Returns the per-basis probabilities, a length-2^q
// probability vector.
std::vector<double> quop_descriptor(const Graph& g, int v, const QuopConfig& cfg);

Mat quop_descriptor_all(const Graph& g, const QuopConfig& cfg);

}  // namespace qgb
