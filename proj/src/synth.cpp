#include "qgb/synth.hpp"

#include <algorithm>

#include "qgb/error.hpp"
#include "qgb/fsio.hpp"
#include "qgb/rng.hpp"

namespace qgb {

namespace {

int pick_attach_point(Rng& rng, const std::vector<int>& deg, int upto, int max_degree) {
  for (int tries = 0; tries < 64; ++tries) {
    const int u = static_cast<int>(rng.next_below(upto));
    if (deg[u] < max_degree) return u;
  }
  for (int u = 0; u < upto; ++u)
    if (deg[u] < max_degree) return u;
  return 0;  // all saturated: overload node 0 rather than fail
}

Graph make_tree(Rng& rng, int n, int max_degree) {
  Graph g;
  g.num_nodes = n;
  std::vector<int> deg(n, 0);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    const int u = pick_attach_point(rng, deg, v, max_degree);
    edges.emplace_back(u, v);
    ++deg[u];
    ++deg[v];
  }
  g.edges = normalize_edges(n, std::move(edges));
  return g;
}

Graph make_ringed(Rng& rng, int n, int max_degree) {
  const int ring = 5 + static_cast<int>(rng.next_below(2));  // 5 or 6
  Graph g;
  g.num_nodes = n;
  std::vector<int> deg(n, 0);
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < ring; ++v) {
    edges.emplace_back(v, (v + 1) % ring);
    deg[v] += 2;
  }
  for (int v = ring; v < n; ++v) {
    const int u = pick_attach_point(rng, deg, v, max_degree);
    edges.emplace_back(u, v);
    ++deg[u];
    ++deg[v];
  }
  // sometimes close a second cycle through the pendant trees
  if (n >= ring + 4 && rng.next_double() < 0.5) {
    for (int tries = 0; tries < 20; ++tries) {
      const int a = static_cast<int>(rng.next_below(n));
      const int b = static_cast<int>(rng.next_below(n));
      if (a == b || deg[a] >= max_degree || deg[b] >= max_degree) continue;
      const auto e = std::minmax(a, b);
      if (std::find(edges.begin(), edges.end(), std::make_pair(e.first, e.second)) !=
          edges.end())
        continue;
      edges.emplace_back(e.first, e.second);
      ++deg[a];
      ++deg[b];
      break;
    }
  }
  g.edges = normalize_edges(n, std::move(edges));
  return g;
}

}  // namespace

Dataset make_synth_dataset(const std::string& name, uint64_t seed, const SynthSpec& spec) {
  if (spec.num_ring_graphs > spec.num_graphs || spec.min_nodes < 7 ||
      spec.max_nodes < spec.min_nodes)
    throw ConfigError("synth: bad spec");

  std::vector<int> klass(spec.num_graphs, 0);
  for (int i = 0; i < spec.num_ring_graphs; ++i) klass[i] = 1;
  Rng(mix(seed, "class-order")).shuffle(klass);

  Dataset ds;
  ds.name = name;
  ds.num_classes = 2;
  for (int i = 0; i < spec.num_graphs; ++i) {
    Rng rng(mix(seed, static_cast<uint64_t>(i)));
    const int span = spec.max_nodes - spec.min_nodes + 1;
    const int n = spec.min_nodes + static_cast<int>(rng.next_below(span));
    Graph g = klass[i] == 1 ? make_ringed(rng, n, spec.max_degree)
                            : make_tree(rng, n, spec.max_degree);
    g.label = klass[i];
    ds.graphs.push_back(std::move(g));
  }
  return ds;
}

void write_synth_tu_dataset(const std::filesystem::path& dir, const std::string& name,
                            uint64_t seed, const SynthSpec& spec) {
  const Dataset ds = make_synth_dataset(name, seed, spec);
  std::filesystem::create_directories(dir);

  std::string a_txt, ind_txt, lab_txt;
  int offset = 0;
  for (const Graph& g : ds.graphs) {
    // TU convention: every undirected edge appears in both orientations
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : g.edges) {
      arcs.emplace_back(u, v);
      arcs.emplace_back(v, u);
    }
    std::sort(arcs.begin(), arcs.end());
    for (auto [u, v] : arcs) {
      a_txt += std::to_string(offset + u + 1);
      a_txt += ", ";
      a_txt += std::to_string(offset + v + 1);
      a_txt += '\n';
    }
    offset += g.num_nodes;
  }
  int gid = 1;
  for (const Graph& g : ds.graphs) {
    for (int v = 0; v < g.num_nodes; ++v) ind_txt += std::to_string(gid) + "\n";
    lab_txt += (g.label == 1 ? "1\n" : "-1\n");
    ++gid;
  }
  atomic_write_text(dir / (name + "_A.txt"), a_txt);
  atomic_write_text(dir / (name + "_graph_indicator.txt"), ind_txt);
  atomic_write_text(dir / (name + "_graph_labels.txt"), lab_txt);
}

}  // namespace qgb
