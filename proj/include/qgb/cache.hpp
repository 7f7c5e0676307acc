#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgb/graph.hpp"

namespace qgb {

// Identity of a descriptor cache file. `config` is the generator's canonical
// parameter JSON; `fingerprint` pins the dataset the matrices belong to.
struct CacheHeader {
  std::string method;
  nlohmann::json config;
  int d_s = 0;
  int graph_count = 0;
  uint64_t fingerprint = 0;
};

uint64_t dataset_fingerprint(const Dataset& ds);

// One header line (JSON) followed by one line per graph holding the row
// count and the hex-encoded row-major matrix, so cache hits reload the
// descriptors bit-identically.
void write_descriptor_cache(const std::filesystem::path& path, const CacheHeader& header,
                            const std::vector<Mat>& per_graph);

// Returns the matrices when the file exists and matches `expected` exactly;
// logs a warning and returns nullopt on corruption or mismatch.
std::optional<std::vector<Mat>> read_descriptor_cache(const std::filesystem::path& path,
                                                      const CacheHeader& expected);

}  // namespace qgb
