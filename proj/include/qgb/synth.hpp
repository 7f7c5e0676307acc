#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "qgb/graph.hpp"

namespace qgb {

// Deterministic molecule-scale benchmark generator. Graphs with raw label 1
// contain one or two rings with pendant trees; raw label -1 graphs are
// trees with a matched size range. Written in the TU text format so the
// normal ingestion path applies.
struct SynthSpec {
  int num_graphs = 188;
  int num_ring_graphs = 125;  // raw label 1; the rest are trees, raw label -1
  int min_nodes = 10;
  int max_nodes = 28;
  int max_degree = 4;
};

Dataset make_synth_dataset(const std::string& name, uint64_t seed, const SynthSpec& spec);

void write_synth_tu_dataset(const std::filesystem::path& dir, const std::string& name,
                            uint64_t seed, const SynthSpec& spec);

}  // namespace qgb
