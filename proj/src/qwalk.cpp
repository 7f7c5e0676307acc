#include "qgb/qwalk.hpp"

#include <cmath>

#include "qgb/error.hpp"
#include "qgb/log.hpp"

namespace qgb {

CoinStrategy coin_from_tag(const std::string& tag) {
  if (tag == "grover-uniform") return CoinStrategy::kGroverUniform;
  if (tag == "degree-weighted") return CoinStrategy::kDegreeWeighted;
  throw ConfigError("unknown coin strategy '" + tag + "'");
}

std::string coin_tag(CoinStrategy c) {
  return c == CoinStrategy::kGroverUniform ? "grover-uniform" : "degree-weighted";
}

ArcSpace build_arc_space(const Graph& g) {
  const auto adj = adjacency_lists(g.num_nodes, g.edges);
  ArcSpace arcs;
  arcs.node_offset.resize(g.num_nodes + 1, 0);
  for (int v = 0; v < g.num_nodes; ++v) {
    arcs.node_offset[v + 1] = arcs.node_offset[v] + static_cast<int>(adj[v].size());
    for (int w : adj[v]) {
      arcs.tail.push_back(v);
      arcs.head.push_back(w);
    }
  }
  arcs.num_arcs = static_cast<int>(arcs.tail.size());

  arcs.reverse.resize(arcs.num_arcs);
  for (int a = 0; a < arcs.num_arcs; ++a) {
    const int t = arcs.head[a];
    const auto& nb = adj[t];
    const int pos = static_cast<int>(
        std::lower_bound(nb.begin(), nb.end(), arcs.tail[a]) - nb.begin());
    arcs.reverse[a] = arcs.node_offset[t] + pos;
  }
  return arcs;
}

void qwalk_step(const ArcSpace& arcs, const std::vector<int>& degrees, const QWalkConfig& cfg,
                std::vector<double>& state) {
  // coin: per-node Grover-type reflection about the weighted direction
  for (size_t v = 0; v + 1 < arcs.node_offset.size(); ++v) {
    const int lo = arcs.node_offset[v];
    const int hi = arcs.node_offset[v + 1];
    if (lo == hi) continue;
    double wnorm2 = 0.0;
    double dot = 0.0;
    for (int a = lo; a < hi; ++a) {
      double alpha = 1.0;
      if (cfg.coin == CoinStrategy::kDegreeWeighted)
        alpha = degrees[arcs.head[a]] <= degrees[arcs.tail[a]] ? cfg.w_p : cfg.w_q;
      const double w = std::sqrt(alpha);
      wnorm2 += w * w;
      dot += w * state[a];
    }
    const double scale = 2.0 * dot / wnorm2;
    for (int a = lo; a < hi; ++a) {
      double alpha = 1.0;
      if (cfg.coin == CoinStrategy::kDegreeWeighted)
        alpha = degrees[arcs.head[a]] <= degrees[arcs.tail[a]] ? cfg.w_p : cfg.w_q;
      state[a] = scale * std::sqrt(alpha) - state[a];
    }
  }
  // flip-flop shift
  std::vector<double> shifted(state.size());
  for (int a = 0; a < arcs.num_arcs; ++a) shifted[arcs.reverse[a]] = state[a];
  state = std::move(shifted);
}

Mat qwalk_run(const Graph& g, const QWalkConfig& cfg) {
  if (cfg.steps < 1 || cfg.w_p <= 0.0 || cfg.w_q <= 0.0)
    throw ConfigError("qwalk: steps must be >= 1 and weights positive");

  Mat desc(g.num_nodes, cfg.steps);
  if (g.edges.empty()) {
    log_warn("qwalk: graph has no edges, descriptor rows are zero");
    return desc;
  }

  const ArcSpace arcs = build_arc_space(g);
  const std::vector<int> degrees = node_degrees(g.num_nodes, g.edges);
  std::vector<double> state(arcs.num_arcs,
                            1.0 / std::sqrt(static_cast<double>(arcs.num_arcs)));
  for (int t = 0; t < cfg.steps; ++t) {
    qwalk_step(arcs, degrees, cfg, state);
    for (int a = 0; a < arcs.num_arcs; ++a)
      desc(arcs.head[a], t) += state[a] * state[a];
  }
  return desc;
}

}  // namespace qgb
