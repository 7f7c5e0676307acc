#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "qgb/matrix.hpp"
#include "qgb/tape.hpp"

namespace qgb {

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double weight_decay = 0.0;
};

struct CheckpointMeta {
  int epoch = 0;
  double val_macro_f1 = 0.0;
  std::string config_hash;
};

// All trainable tensors plus per-tensor Adam state. Iteration follows
// registration order, which is fixed per method.
class ParamStore {
 public:
  Mat& create(const std::string& name, int rows, int cols);
  bool has(const std::string& name) const { return index_.count(name) > 0; }
  Mat& value(const std::string& name);
  const Mat& value(const std::string& name) const;
  const Mat& grad(const std::string& name) const;

  void accum_grad(const std::string& name, const Mat& g);
  size_t count() const { return entries_.size(); }
  std::vector<std::string> names() const;

  // Bias-corrected Adam on every tensor; throws if any registered tensor
  // never received a gradient since the last step. Gradients are zeroed.
  void adam_step(const AdamConfig& cfg);

  std::vector<Mat> snapshot() const;
  void restore(const std::vector<Mat>& values);

  // Single JSON file: {"meta": {...}, "tensors": [{name, rows, cols, data}]}
  // with values hex-encoded so reload is bit-identical.
  void save_checkpoint(const std::filesystem::path& path, const CheckpointMeta& meta) const;
  CheckpointMeta load_checkpoint(const std::filesystem::path& path);

 private:
  struct Entry {
    std::string name;
    Mat value, grad, m, v;
    int64_t step = 0;
    bool grad_set = false;
  };
  std::vector<Entry> entries_;
  std::unordered_map<std::string, size_t> index_;

  Entry& entry(const std::string& name);
  const Entry& entry(const std::string& name) const;
};

// Binds store tensors to tape leaves, one leaf per name per tape.
class BoundParams {
 public:
  BoundParams(Tape& tape, ParamStore& store, bool needs_grad)
      : tape_(&tape), store_(&store), needs_grad_(needs_grad) {}

  int operator[](const std::string& name);

  // Accumulates tape gradients back into the store (insertion order).
  void flush_grads();

 private:
  Tape* tape_;
  ParamStore* store_;
  bool needs_grad_;
  std::vector<std::pair<std::string, int>> bound_;
  std::unordered_map<std::string, int> map_;
};

// Gaussian(0, variance) entries from the stream mix(seed, "init:" + name).
void init_gaussian(ParamStore& store, const std::string& name, int rows, int cols,
                   uint64_t seed, double variance);
void init_zeros(ParamStore& store, const std::string& name, int rows, int cols);

}  // namespace qgb
