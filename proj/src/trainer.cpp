#include "qgb/trainer.hpp"

#include <cstdio>

#include "qgb/error.hpp"
#include "qgb/fsio.hpp"
#include "qgb/log.hpp"

namespace qgb {

std::vector<int> labels_at(const Dataset& ds, const std::vector<int>& indices) {
  std::vector<int> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(ds.graphs.at(i).label);
  return out;
}

RunResult train_model(const Dataset& ds, const SplitManifest& split, Method method,
                      const ExperimentConfig& cfg, const std::string& cfg_hash,
                      const std::filesystem::path& checkpoint_path) {
  RunResult result;
  Model model(ds, method, cfg);
  const AdamConfig adam = adam_from_train(cfg.train);
  Rng dropout_rng(mix(cfg.seed, "dropout"));
  EarlyStopper stopper(cfg.train.patience);
  const std::vector<int> val_labels = labels_at(ds, split.val);
  const std::vector<int> test_labels = labels_at(ds, split.test);

  std::vector<Mat> best_values;
  try {
    for (int epoch = 1; epoch <= cfg.train.max_epochs; ++epoch) {
      std::vector<int> order = split.train;
      Rng(mix(cfg.seed, static_cast<uint64_t>(epoch))).shuffle(order);

      double loss_sum = 0.0;
      for (size_t start = 0; start < order.size(); start += cfg.train.batch_size) {
        const size_t stop = std::min(order.size(), start + cfg.train.batch_size);
        const std::vector<int> batch(order.begin() + start, order.begin() + stop);
        const double loss = model.train_step(batch, dropout_rng);
        model.params().adam_step(adam);
        loss_sum += loss * static_cast<double>(batch.size());
      }
      const double train_loss = loss_sum / static_cast<double>(order.size());

      const double val_f1 =
          compute_metrics(model.predict(split.val), val_labels, ds.num_classes).macro_f1;
      const bool improved = stopper.observe(val_f1);
      if (improved) best_values = model.params().snapshot();
      result.history.push_back({epoch, train_loss, val_f1, improved});
      result.epochs_ran = epoch;
      if (stopper.should_stop()) break;
    }
  } catch (const NumericError& e) {
    log_warn(std::string("run diverged: ") + e.what());
    result.status = "diverged";
    return result;
  }

  result.best_epoch = stopper.best_epoch();
  result.best_val_f1 = stopper.best_score();
  model.params().restore(best_values);
  result.restored_val_f1 =
      compute_metrics(model.predict(split.val), val_labels, ds.num_classes).macro_f1;
  result.test = compute_metrics(model.predict(split.test), test_labels, ds.num_classes);

  if (!checkpoint_path.empty()) {
    CheckpointMeta meta;
    meta.epoch = result.best_epoch;
    meta.val_macro_f1 = result.best_val_f1;
    meta.config_hash = cfg_hash;
    model.params().save_checkpoint(checkpoint_path, meta);
  }
  return result;
}

void write_history_csv(const std::filesystem::path& path,
                       const std::vector<EpochRecord>& history) {
  std::string text = "epoch,train_loss,val_macro_f1,is_best\n";
  char buf[128];
  for (const EpochRecord& r : history) {
    std::snprintf(buf, sizeof(buf), "%d,%.6f,%.6f,%d\n", r.epoch, r.train_loss, r.val_macro_f1,
                  r.is_best ? 1 : 0);
    text += buf;
  }
  atomic_write_text(path, text);
}

}  // namespace qgb
