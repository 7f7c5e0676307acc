#include "qgb/dataset_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "qgb/error.hpp"
#include "qgb/fsio.hpp"
#include "qgb/rng.hpp"

namespace qgb {

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IngestError("missing or unreadable file: " + file.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  // trailing blank lines are common in TU files
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

long parse_long(const std::string& s, const std::filesystem::path& file, size_t lineno) {
  try {
    size_t pos = 0;
    const long v = std::stol(s, &pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw IngestError(file.string() + ":" + std::to_string(lineno) + ": expected integer, got '" +
                      s + "'");
  }
}

}  // namespace

Dataset parse_tu_dataset(const std::filesystem::path& dir, const std::string& name) {
  const auto a_file = dir / (name + "_A.txt");
  const auto ind_file = dir / (name + "_graph_indicator.txt");
  const auto lab_file = dir / (name + "_graph_labels.txt");

  const auto indicator_lines = read_lines(ind_file);
  const auto label_lines = read_lines(lab_file);
  const auto edge_lines = read_lines(a_file);

  const int num_graphs = static_cast<int>(label_lines.size());

  // node -> graph (both 0-based), node -> local index within its graph
  std::vector<int> node_graph(indicator_lines.size());
  std::vector<int> node_local(indicator_lines.size());
  std::vector<int> graph_sizes(num_graphs, 0);
  for (size_t i = 0; i < indicator_lines.size(); ++i) {
    const long gid = parse_long(indicator_lines[i], ind_file, i + 1);
    if (gid < 1 || gid > num_graphs)
      throw IngestError(ind_file.string() + ":" + std::to_string(i + 1) +
                        ": graph id out of range");
    node_graph[i] = static_cast<int>(gid - 1);
    node_local[i] = graph_sizes[gid - 1]++;
  }

  std::vector<std::vector<std::pair<int, int>>> edges(num_graphs);
  for (size_t i = 0; i < edge_lines.size(); ++i) {
    if (edge_lines[i].empty()) continue;
    const size_t comma = edge_lines[i].find(',');
    if (comma == std::string::npos)
      throw IngestError(a_file.string() + ":" + std::to_string(i + 1) + ": expected 'u, v'");
    const long a = parse_long(edge_lines[i].substr(0, comma), a_file, i + 1);
    const long b = parse_long(edge_lines[i].substr(comma + 1), a_file, i + 1);
    if (a < 1 || b < 1 || a > static_cast<long>(node_graph.size()) ||
        b > static_cast<long>(node_graph.size()))
      throw IngestError(a_file.string() + ":" + std::to_string(i + 1) +
                        ": node id out of range");
    if (node_graph[a - 1] != node_graph[b - 1])
      throw IngestError(a_file.string() + ":" + std::to_string(i + 1) +
                        ": edge crosses graph boundary per the indicator");
    edges[node_graph[a - 1]].emplace_back(node_local[a - 1], node_local[b - 1]);
  }

  // remap labels to contiguous 0-based range by ascending original value
  std::vector<long> raw_labels(num_graphs);
  for (int gidx = 0; gidx < num_graphs; ++gidx)
    raw_labels[gidx] = parse_long(label_lines[gidx], lab_file, gidx + 1);
  std::vector<long> distinct = raw_labels;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::map<long, int> remap;
  for (size_t i = 0; i < distinct.size(); ++i) remap[distinct[i]] = static_cast<int>(i);

  Dataset ds;
  ds.name = name;
  ds.num_classes = static_cast<int>(distinct.size());
  ds.graphs.resize(num_graphs);
  for (int gidx = 0; gidx < num_graphs; ++gidx) {
    Graph& g = ds.graphs[gidx];
    g.num_nodes = graph_sizes[gidx];
    g.edges = normalize_edges(g.num_nodes, std::move(edges[gidx]));
    g.label = remap[raw_labels[gidx]];
  }
  return ds;
}

JsonlGraphs load_jsonl_graphs(const std::filesystem::path& path, int target_index,
                              int max_graphs) {
  std::ifstream in(path);
  if (!in) throw IngestError("missing or unreadable file: " + path.string());

  JsonlGraphs out;
  out.dataset.name = path.stem().string();
  std::string line;
  size_t lineno = 0;
  while (static_cast<int>(out.dataset.graphs.size()) < max_graphs && std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
      Graph g;
      g.num_nodes = j.at("num_nodes").get<int>();
      std::vector<std::pair<int, int>> edges;
      for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      g.edges = normalize_edges(g.num_nodes, std::move(edges));
      const auto& targets = j.at("targets");
      if (target_index < 0 || target_index >= static_cast<int>(targets.size()))
        throw IngestError(path.string() + ":" + std::to_string(lineno) +
                          ": target index " + std::to_string(target_index) + " out of range");
      out.targets.push_back(targets.at(target_index).get<double>());
      out.dataset.graphs.push_back(std::move(g));
    } catch (const IngestError&) {
      throw;
    } catch (const std::exception& e) {
      throw IngestError(path.string() + ":" + std::to_string(lineno) + ": malformed line (" +
                        e.what() + ")");
    }
  }
  return out;
}

void write_jsonl_graphs(const std::filesystem::path& path, const Dataset& ds,
                        const std::vector<std::vector<double>>& targets) {
  std::ofstream outf(path);
  if (!outf) throw IngestError("cannot open for writing: " + path.string());
  for (size_t i = 0; i < ds.graphs.size(); ++i) {
    nlohmann::json j;
    j["num_nodes"] = ds.graphs[i].num_nodes;
    auto edges = nlohmann::json::array();
    for (auto [u, v] : ds.graphs[i].edges) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    j["targets"] = targets[i];
    outf << j.dump() << "\n";
  }
}

std::vector<int> quantile_bin(const std::vector<double>& targets, int bins) {
  if (bins < 2) throw ConfigError("quantile_bin: bins must be >= 2");
  if (targets.empty()) throw ConfigError("quantile_bin: empty targets");
  std::vector<double> sorted = targets;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() == sorted.back())
    throw ConfigError("quantile_bin: degenerate target (all values identical)");

  // lower-interpolation quantiles at i/bins, i = 1..bins-1
  const size_t n = sorted.size();
  std::vector<double> edges;
  for (int i = 1; i < bins; ++i) {
    const size_t idx =
        static_cast<size_t>(std::floor(static_cast<double>(n - 1) * i / bins));
    edges.push_back(sorted[idx]);
  }

  std::vector<int> labels(targets.size());
  for (size_t i = 0; i < targets.size(); ++i) {
    int b = bins - 1;
    for (int e = 0; e < bins - 1; ++e) {
      if (targets[i] <= edges[e]) {  // tie goes to the lower bin
        b = e;
        break;
      }
    }
    labels[i] = b;
  }
  return labels;
}

SplitManifest stratified_split(const std::vector<int>& labels, std::array<double, 3> ratios,
                               uint64_t seed) {
  int num_classes = 0;
  for (int l : labels) num_classes = std::max(num_classes, l + 1);

  SplitManifest m;
  m.seed = seed;
  m.ratios = ratios;
  for (int c = 0; c < num_classes; ++c) {
    std::vector<int> idx;
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == c) idx.push_back(static_cast<int>(i));
    if (idx.size() < 3)
      throw ConfigError("unstratifiable class " + std::to_string(c) + " with " +
                        std::to_string(idx.size()) + " members");
    Rng rng(mix(seed, static_cast<uint64_t>(c)));
    rng.shuffle(idx);
    const size_t n = idx.size();
    const size_t n_train = static_cast<size_t>(std::floor(ratios[0] * n + 1e-9));
    const size_t n_val = static_cast<size_t>(std::floor(ratios[1] * n + 1e-9));
    for (size_t i = 0; i < n; ++i) {
      if (i < n_train)
        m.train.push_back(idx[i]);
      else if (i < n_train + n_val)
        m.val.push_back(idx[i]);
      else
        m.test.push_back(idx[i]);
    }
  }
  std::sort(m.train.begin(), m.train.end());
  std::sort(m.val.begin(), m.val.end());
  std::sort(m.test.begin(), m.test.end());
  return m;
}

void save_split_manifest(const std::filesystem::path& path, const SplitManifest& m) {
  nlohmann::json j;
  j["seed"] = m.seed;
  j["ratios"] = m.ratios;
  j["train"] = m.train;
  j["val"] = m.val;
  j["test"] = m.test;
  atomic_write_text(path, j.dump(2) + "\n");
}

SplitManifest load_split_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IngestError("missing or unreadable file: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
    SplitManifest m;
    m.seed = j.at("seed").get<uint64_t>();
    m.ratios = j.at("ratios").get<std::array<double, 3>>();
    m.train = j.at("train").get<std::vector<int>>();
    m.val = j.at("val").get<std::vector<int>>();
    m.test = j.at("test").get<std::vector<int>>();
    return m;
  } catch (const std::exception& e) {
    throw IngestError("bad split manifest " + path.string() + ": " + e.what());
  }
}

}  // namespace qgb
