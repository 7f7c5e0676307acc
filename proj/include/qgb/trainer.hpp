#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qgb/config.hpp"
#include "qgb/dataset_io.hpp"
#include "qgb/metrics.hpp"
#include "qgb/model.hpp"

namespace qgb {

// Strict-improvement early stopping: equal scores do not reset patience.
class EarlyStopper {
 public:
  explicit EarlyStopper(int patience) : patience_(patience) {}

  // Returns true when `score` strictly improves on the best so far.
  bool observe(double score) {
    ++observed_;
    if (score > best_) {
      best_ = score;
      best_epoch_ = observed_;
      since_best_ = 0;
      return true;
    }
    ++since_best_;
    return false;
  }

  bool should_stop() const { return since_best_ >= patience_; }
  int best_epoch() const { return best_epoch_; }
  double best_score() const { return best_; }

 private:
  int patience_;
  int observed_ = 0;
  int best_epoch_ = 0;
  int since_best_ = 0;
  double best_ = -1e300;
};

struct EpochRecord {
  int epoch = 0;
  double train_loss = 0.0;
  double val_macro_f1 = 0.0;
  bool is_best = false;
};

struct RunResult {
  std::string status = "ok";  // "ok" | "diverged"
  Metrics test;
  std::vector<EpochRecord> history;
  int epochs_ran = 0;
  int best_epoch = 0;
  double best_val_f1 = 0.0;
  double restored_val_f1 = 0.0;  // recomputed after restoring the best checkpoint
};

// Mini-batch training over the train split with per-epoch shuffling from
// Rng(mix(seed, epoch)), validation Macro-F1 monitoring, best-checkpoint
// restore, and a single test evaluation. A NumericError during training
// aborts the run with status "diverged". When checkpoint_path is non-empty
// the restored best parameters are saved there.
RunResult train_model(const Dataset& ds, const SplitManifest& split, Method method,
                      const ExperimentConfig& cfg, const std::string& cfg_hash = "",
                      const std::filesystem::path& checkpoint_path = {});

std::vector<int> labels_at(const Dataset& ds, const std::vector<int>& indices);

void write_history_csv(const std::filesystem::path& path,
                       const std::vector<EpochRecord>& history);

}  // namespace qgb
