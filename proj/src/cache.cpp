#include "qgb/cache.hpp"

#include <fstream>
#include <sstream>

#include "qgb/error.hpp"
#include "qgb/fsio.hpp"
#include "qgb/hexio.hpp"
#include "qgb/log.hpp"
#include "qgb/rng.hpp"

namespace qgb {

uint64_t dataset_fingerprint(const Dataset& ds) {
  std::string blob = ds.name;
  blob += '|';
  for (const Graph& g : ds.graphs) {
    blob += std::to_string(g.num_nodes);
    blob += ':';
    for (auto [u, v] : g.edges) {
      blob += std::to_string(u);
      blob += ',';
      blob += std::to_string(v);
      blob += ';';
    }
    blob += '|';
  }
  return fnv1a(blob);
}

void write_descriptor_cache(const std::filesystem::path& path, const CacheHeader& header,
                            const std::vector<Mat>& per_graph) {
  nlohmann::json h;
  h["method"] = header.method;
  h["config"] = header.config;
  h["d_s"] = header.d_s;
  h["graph_count"] = header.graph_count;
  h["fingerprint"] = header.fingerprint;

  std::string text = h.dump() + "\n";
  for (const Mat& m : per_graph) {
    text += std::to_string(m.rows);
    text += ' ';
    text += doubles_to_hex(m.data);
    text += '\n';
  }
  atomic_write_text(path, text);
}

std::optional<std::vector<Mat>> read_descriptor_cache(const std::filesystem::path& path,
                                                      const CacheHeader& expected) {
  std::ifstream in(path);
  if (!in) return std::nullopt;

  auto invalid = [&](const std::string& why) -> std::optional<std::vector<Mat>> {
    log_warn("descriptor cache " + path.string() + " invalid (" + why + "), recomputing");
    return std::nullopt;
  };

  std::string line;
  if (!std::getline(in, line)) return invalid("empty file");
  nlohmann::json h;
  try {
    h = nlohmann::json::parse(line);
    if (h.at("method").get<std::string>() != expected.method) return invalid("method mismatch");
    if (h.at("config") != expected.config) return invalid("config mismatch");
    if (h.at("d_s").get<int>() != expected.d_s) return invalid("descriptor width mismatch");
    if (h.at("graph_count").get<int>() != expected.graph_count)
      return invalid("graph count mismatch");
    if (h.at("fingerprint").get<uint64_t>() != expected.fingerprint)
      return invalid("dataset fingerprint mismatch");
  } catch (const std::exception& e) {
    return invalid(std::string("corrupted header: ") + e.what());
  }

  std::vector<Mat> mats;
  mats.reserve(expected.graph_count);
  for (int g = 0; g < expected.graph_count; ++g) {
    if (!std::getline(in, line)) return invalid("truncated body");
    const size_t sp = line.find(' ');
    if (sp == std::string::npos) return invalid("bad body line");
    try {
      const int rows = std::stoi(line.substr(0, sp));
      Mat m(rows, expected.d_s);
      m.data = hex_to_doubles(line.substr(sp + 1));
      if (static_cast<int64_t>(m.data.size()) != m.size()) return invalid("bad matrix size");
      mats.push_back(std::move(m));
    } catch (const std::exception& e) {
      return invalid(std::string("bad body line: ") + e.what());
    }
  }
  return mats;
}

}  // namespace qgb
