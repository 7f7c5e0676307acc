#include "qgb/qpe.hpp"

#include <algorithm>
#include <numeric>

#include "qgb/error.hpp"
#include "qgb/spectral.hpp"

namespace qgb {

std::vector<int> select_anchors(const Graph& g, int count) {
  const std::vector<int> deg = node_degrees(g.num_nodes, g.edges);
  std::vector<int> order(g.num_nodes);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (deg[a] != deg[b]) return deg[a] > deg[b];
    return a < b;
  });
  order.resize(std::min<size_t>(order.size(), static_cast<size_t>(std::max(count, 0))));
  return order;
}

Mat qpe_descriptor(const Graph& g, const QpeConfig& cfg) {
  if (cfg.times.empty() || cfg.anchors < 1) throw ConfigError("qpe: bad config");
  const int num_times = static_cast<int>(cfg.times.size());
  const int width = 2 * cfg.anchors * num_times;
  Mat desc(g.num_nodes, width);

  const std::vector<int> anchors = select_anchors(g, cfg.anchors);
  const Mat lap = normalized_laplacian(g.num_nodes, g.edges);
  for (int ti = 0; ti < num_times; ++ti) {
    const CMat u = evolution_operator(lap, cfg.times[ti]);
    for (size_t ai = 0; ai < anchors.size(); ++ai) {
      const int a = anchors[ai];
      const int base = static_cast<int>(ai) * 2 * num_times + 2 * ti;
      for (int v = 0; v < g.num_nodes; ++v) {
        const cplx val = u(v, a);  // (U(t) e_a)[v]
        desc(v, base) = val.real();
        desc(v, base + 1) = val.imag();
      }
    }
  }
  return desc;
}

}  // namespace qgb
