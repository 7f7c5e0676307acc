#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgb/gin.hpp"
#include "qgb/method.hpp"
#include "qgb/qpe.hpp"
#include "qgb/quop.hpp"
#include "qgb/qwalk.hpp"
#include "qgb/vqc.hpp"

namespace qgb {

struct DatasetConfig {
  std::string name = "toy";
  std::string path;              // defaults to data/<name> when empty
  std::string format = "tu";     // "tu" | "jsonl"
  int target_index = 0;          // jsonl only
  int bins = 2;                  // jsonl only
  int max_graphs = 5000;         // jsonl only

  std::string resolved_path() const { return path.empty() ? "data/" + name : path; }
};

struct TrainConfig {
  double lr = 1e-3;
  double weight_decay = 0.0;
  int max_epochs = 30;
  int batch_size = 16;
  int patience = 7;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct ExperimentConfig {
  DatasetConfig dataset;
  std::string method = "fixed";
  uint64_t seed = 7;
  std::string out_dir = "out";

  int pe_k = 8;
  int embed_dim = 32;

  VqcConfig vqc;
  QuopConfig quop;
  QWalkConfig qwalk;
  QpeConfig qpe;
  GinConfig gin;
  TrainConfig train;

  // bench matrix; when empty, bench uses {dataset} x all 8 methods
  std::vector<DatasetConfig> bench_datasets;
  std::vector<std::string> bench_methods;
};

// JSON schema mirrors the struct field names; unknown keys are rejected.
ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig load_config_file(const std::filesystem::path& path);

// FNV-1a over the canonical dump (sorted keys, out_dir excluded); any value
// change rehashes, key order does not.
std::string config_hash(const ExperimentConfig& cfg);

// Hash naming a generator's descriptor cache: generator parameters only
// (descriptors do not depend on seed or training settings).
std::string generator_config_hash(const ExperimentConfig& cfg, Generator gen);

AdamConfig adam_from_train(const TrainConfig& t);

}  // namespace qgb
