#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qgb/config.hpp"
#include "qgb/dataset_io.hpp"
#include "qgb/trainer.hpp"

namespace qgb {

struct LoadedData {
  Dataset dataset;
  SplitManifest split;
};

// Ingests the dataset, builds degree one-hots and positional encodings,
// loads or computes the frozen descriptor caches for quop/qwalkvec/qpe,
// attaches them to the graphs, and writes the split manifest.
LoadedData cmd_prepare(const ExperimentConfig& cfg);

struct ResultRow {
  std::string dataset;
  std::string method;
  bool trainable = false;
  bool has_metrics = false;
  double acc = 0.0, macro_f1 = 0.0, macro_p = 0.0, macro_r = 0.0;
  int epochs = 0;
  uint64_t seed = 0;
  std::string status = "ok";  // ok | diverged | error
  double wall_seconds = 0.0;
};

// Trains one (dataset, method) cell, writes history + checkpoint, and
// appends the row to <out>/results.csv. Pass prepared data to skip
// re-ingestion.
ResultRow cmd_run(const ExperimentConfig& cfg, const LoadedData* prepared = nullptr);

// Full matrix in deterministic order (datasets in config order, methods in
// the fixed reporting order); each row is flushed as soon as it finishes,
// and a failed cell is recorded as status "error" without stopping the
// matrix.
void cmd_bench(const ExperimentConfig& cfg);

// Markdown report from a results CSV: one block per dataset, methods in the
// fixed order, best Acc and best Macro-F1 bold (ties all bold), 4 decimals.
std::string render_report(const std::vector<ResultRow>& rows);
void cmd_report(const std::filesystem::path& csv_path, const std::filesystem::path& md_path);

std::string results_csv_header();
std::string result_row_csv(const ResultRow& row);
std::vector<ResultRow> read_results_csv(const std::filesystem::path& path);

std::filesystem::path results_csv_path(const ExperimentConfig& cfg);

}  // namespace qgb
