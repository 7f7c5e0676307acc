#pragma once

#include <cstdint>
#include <vector>

namespace qgb {

struct Metrics {
  double accuracy = 0.0;
  double macro_f1 = 0.0;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  std::vector<int64_t> confusion;  // C x C row-major, row = true class, col = predicted
  int num_classes = 0;

  int64_t confusion_at(int truth, int pred) const {
    return confusion[static_cast<size_t>(truth) * num_classes + pred];
  }
};

// Per-class precision/recall/F1 with the 0/0 -> 0 convention; macro values
// average over all C classes, including classes absent from `labels`.
Metrics compute_metrics(const std::vector<int>& predictions, const std::vector<int>& labels,
                        int num_classes);

}  // namespace qgb
