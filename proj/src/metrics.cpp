#include "qgb/metrics.hpp"

#include "qgb/error.hpp"

namespace qgb {

Metrics compute_metrics(const std::vector<int>& predictions, const std::vector<int>& labels,
                        int num_classes) {
  if (predictions.size() != labels.size())
    throw ConfigError("compute_metrics: prediction/label length mismatch");
  if (num_classes < 1) throw ConfigError("compute_metrics: bad class count");

  Metrics m;
  m.num_classes = num_classes;
  m.confusion.assign(static_cast<size_t>(num_classes) * num_classes, 0);
  for (size_t i = 0; i < labels.size(); ++i) {
    const int t = labels[i], p = predictions[i];
    if (t < 0 || t >= num_classes || p < 0 || p >= num_classes)
      throw ConfigError("compute_metrics: class index out of range");
    ++m.confusion[static_cast<size_t>(t) * num_classes + p];
  }

  int64_t correct = 0;
  for (int c = 0; c < num_classes; ++c) correct += m.confusion_at(c, c);
  m.accuracy = labels.empty() ? 0.0 : static_cast<double>(correct) / labels.size();

  double sum_p = 0.0, sum_r = 0.0, sum_f = 0.0;
  for (int c = 0; c < num_classes; ++c) {
    const int64_t tp = m.confusion_at(c, c);
    int64_t fp = 0, fn = 0;
    for (int o = 0; o < num_classes; ++o) {
      if (o == c) continue;
      fp += m.confusion_at(o, c);
      fn += m.confusion_at(c, o);
    }
    const double prec = (tp + fp) == 0 ? 0.0 : static_cast<double>(tp) / (tp + fp);
    const double rec = (tp + fn) == 0 ? 0.0 : static_cast<double>(tp) / (tp + fn);
    const double f1 = (prec + rec) == 0.0 ? 0.0 : 2.0 * prec * rec / (prec + rec);
    sum_p += prec;
    sum_r += rec;
    sum_f += f1;
  }
  m.macro_precision = sum_p / num_classes;
  m.macro_recall = sum_r / num_classes;
  m.macro_f1 = sum_f / num_classes;
  return m;
}

}  // namespace qgb
