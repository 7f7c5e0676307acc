#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qgb/graph.hpp"

namespace qgb {

// Reads NAME_A.txt (1-indexed comma-separated edge list),
// NAME_graph_indicator.txt, and NAME_graph_labels.txt from `dir`.
// Labels are remapped to a contiguous 0-based range by ascending original
// label. Node attribute/label files are not read.
Dataset parse_tu_dataset(const std::filesystem::path& dir, const std::string& name);

// JSONL container: one object per line with fields
//   num_nodes : int, edges : [[u,v],...] (0-based), targets : [real,...]
// Reads at most max_graphs lines in file order. Graphs come back unlabeled;
// the caller assigns labels (see quantile_bin).
struct JsonlGraphs {
  Dataset dataset;
  std::vector<double> targets;
};

JsonlGraphs load_jsonl_graphs(const std::filesystem::path& path, int target_index,
                              int max_graphs);

void write_jsonl_graphs(const std::filesystem::path& path, const Dataset& ds,
                        const std::vector<std::vector<double>>& targets);

// Converts real targets to class labels by splitting at empirical quantiles
// i/bins (lower interpolation); a value equal to an edge goes to the lower
// bin. Throws on all-identical targets.
std::vector<int> quantile_bin(const std::vector<double>& targets, int bins);

struct SplitManifest {
  std::vector<int> train, val, test;
  uint64_t seed = 0;
  std::array<double, 3> ratios{0.8, 0.1, 0.1};
};

// Per class c: indices ascending, shuffled by Rng(mix(seed, c)); first
// floor(r_train*n_c) to train, next floor(r_val*n_c) to val, rest to test.
// Throws on any class with fewer than 3 members.
SplitManifest stratified_split(const std::vector<int>& labels, std::array<double, 3> ratios,
                               uint64_t seed);

void save_split_manifest(const std::filesystem::path& path, const SplitManifest& m);
SplitManifest load_split_manifest(const std::filesystem::path& path);

}  // namespace qgb
