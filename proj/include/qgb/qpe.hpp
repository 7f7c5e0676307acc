#pragma once

#include <vector>

#include "qgb/graph.hpp"
#include "qgb/matrix.hpp"

namespace qgb {

struct QpeConfig {
  std::vector<double> times{0.5, 1.0, 2.0};
  int anchors = 8;
};

// Nodes by descending degree, ascending index on ties; first min(A, n).
std::vector<int> select_anchors(const Graph& g, int count);

// Evolves each anchor indicator under U(t) = exp(-i L t) for the normalized
// Laplacian L and records node v's complex response. Descriptor width is
// 2 * anchors * |times|; layout per node: anchors outer, times inner,
// (Re, Im) innermost. Graphs with fewer nodes than anchors use every node
// and zero-pad the remaining columns.
Mat qpe_descriptor(const Graph& g, const QpeConfig& cfg);

}  // namespace qgb
