#include "qgb/quop.hpp"

#include "qgb/error.hpp"
#include "qgb/spectral.hpp"

namespace qgb {

std::vector<double> quop_descriptor(const Graph& g, int v, const QuopConfig& cfg) {
  if (cfg.hop_radius < 1 || cfg.qubit_budget < 1) throw ConfigError("quop: bad config");
  const int dim = 1 << cfg.qubit_budget;

  const EgoSubgraph ego = ego_subgraph(g, v, cfg.hop_radius);
  Mat h(dim, dim);
  for (auto [a, b] : ego.edges) {
    if (a >= dim || b >= dim) continue;  // oversized ego graphs are truncated
    h(a, b) = 1.0;
    h(b, a) = 1.0;
  }

  const CMat u = evolution_operator(h, 1.0);
  std::vector<double> s(dim);
  for (int i = 0; i < dim; ++i) s[i] = std::norm(u(i, 0));  // |U e_0|^2, center is index 0
  return s;
}

Mat quop_descriptor_all(const Graph& g, const QuopConfig& cfg) {
  const int dim = 1 << cfg.qubit_budget;
  Mat out(g.num_nodes, dim);
  for (int v = 0; v < g.num_nodes; ++v) {
    const std::vector<double> row = quop_descriptor(g, v, cfg);
    for (int i = 0; i < dim; ++i) out(v, i) = row[i];
  }
  return out;
}

}  // namespace qgb
