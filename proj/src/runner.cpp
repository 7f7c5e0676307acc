#include "qgb/runner.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "qgb/cache.hpp"
#include "qgb/error.hpp"
#include "qgb/fsio.hpp"
#include "qgb/log.hpp"
#include "qgb/model.hpp"
#include "qgb/spectral.hpp"

namespace qgb {

namespace {

Dataset ingest(const ExperimentConfig& cfg) {
  const DatasetConfig& dc = cfg.dataset;
  if (dc.format == "tu") return parse_tu_dataset(dc.resolved_path(), dc.name);

  JsonlGraphs loaded = load_jsonl_graphs(dc.resolved_path(), dc.target_index, dc.max_graphs);
  const std::vector<int> labels = quantile_bin(loaded.targets, dc.bins);
  for (size_t i = 0; i < labels.size(); ++i) loaded.dataset.graphs[i].label = labels[i];
  loaded.dataset.num_classes = dc.bins;
  loaded.dataset.name = dc.name;
  return loaded.dataset;
}

void attach_frozen_descriptors(Dataset& ds, const ExperimentConfig& cfg) {
  const std::filesystem::path cache_dir = std::filesystem::path(cfg.out_dir) / "cache";
  const uint64_t fingerprint = dataset_fingerprint(ds);
  for (Generator gen : {Generator::kQuop, Generator::kQwalk, Generator::kQpe}) {
    const std::string key = generator_key(gen);
    CacheHeader header;
    header.method = key;
    switch (gen) {
      case Generator::kQuop:
        header.config = {{"hops", cfg.quop.hop_radius}, {"qubits", cfg.quop.qubit_budget}};
        break;
      case Generator::kQwalk:
        header.config = {{"steps", cfg.qwalk.steps},
                         {"w_p", cfg.qwalk.w_p},
                         {"w_q", cfg.qwalk.w_q},
                         {"coin", coin_tag(cfg.qwalk.coin)}};
        break;
      default:
        header.config = {{"times", cfg.qpe.times}, {"anchors", cfg.qpe.anchors}};
        break;
    }
    header.graph_count = static_cast<int>(ds.graphs.size());
    header.fingerprint = fingerprint;
    switch (gen) {
      case Generator::kQuop: header.d_s = 1 << cfg.quop.qubit_budget; break;
      case Generator::kQwalk: header.d_s = cfg.qwalk.steps; break;
      default:
        header.d_s = 2 * cfg.qpe.anchors * static_cast<int>(cfg.qpe.times.size());
        break;
    }

    const std::filesystem::path file =
        cache_dir / (ds.name + "_" + key + "_" + generator_config_hash(cfg, gen) + ".desc");
    std::optional<std::vector<Mat>> mats = read_descriptor_cache(file, header);
    if (mats) {
      log_info("descriptor cache hit: " + file.string());
    } else {
      std::vector<Mat> fresh;
      fresh.reserve(ds.graphs.size());
      for (const Graph& g : ds.graphs)
        fresh.push_back(compute_generator_descriptor(g, gen, cfg));
      write_descriptor_cache(file, header, fresh);
      mats = std::move(fresh);
    }
    for (size_t i = 0; i < ds.graphs.size(); ++i)
      ds.graphs[i].descriptors[key] = std::move((*mats)[i]);
  }
}

std::vector<int> dataset_labels(const Dataset& ds) {
  std::vector<int> labels;
  labels.reserve(ds.graphs.size());
  for (const Graph& g : ds.graphs) labels.push_back(g.label);
  return labels;
}

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

LoadedData cmd_prepare(const ExperimentConfig& cfg) {
  LoadedData out;
  out.dataset = ingest(cfg);
  degree_onehot(out.dataset);
  for (Graph& g : out.dataset.graphs) g.pe = laplacian_pe(g.num_nodes, g.edges, cfg.pe_k);
  attach_frozen_descriptors(out.dataset, cfg);

  out.split = stratified_split(dataset_labels(out.dataset), {0.8, 0.1, 0.1}, cfg.seed);
  const std::filesystem::path manifest =
      std::filesystem::path(cfg.out_dir) /
      (out.dataset.name + "_split_seed" + std::to_string(cfg.seed) + ".json");
  save_split_manifest(manifest, out.split);
  return out;
}

std::filesystem::path results_csv_path(const ExperimentConfig& cfg) {
  return std::filesystem::path(cfg.out_dir) / "results.csv";
}

std::string results_csv_header() {
  return "dataset,method,trainable,acc,macro_f1,macro_p,macro_r,epochs,seed,status,"
         "wall_seconds\n";
}

std::string result_row_csv(const ResultRow& r) {
  std::string line = r.dataset + "," + r.method + "," + (r.trainable ? "Y" : "N") + ",";
  if (r.has_metrics) {
    line += fmt4(r.acc) + "," + fmt4(r.macro_f1) + "," + fmt4(r.macro_p) + "," + fmt4(r.macro_r);
  } else {
    line += ",,,";
  }
  char tail[96];
  std::snprintf(tail, sizeof(tail), ",%d,%llu,%s,%.3f\n", r.epochs,
                static_cast<unsigned long long>(r.seed), r.status.c_str(), r.wall_seconds);
  return line + tail;
}

namespace {

void append_result(const ExperimentConfig& cfg, const ResultRow& row) {
  const std::filesystem::path path = results_csv_path(cfg);
  std::filesystem::create_directories(path.parent_path());
  const bool fresh = !std::filesystem::exists(path);
  std::ofstream out(path, std::ios::app);
  if (!out) throw IngestError("cannot open for appending: " + path.string());
  if (fresh) out << results_csv_header();
  out << result_row_csv(row);
  out.flush();
}

ResultRow run_cell(const ExperimentConfig& cfg, const LoadedData& data) {
  const Method method = method_from_tag(cfg.method);
  ResultRow row;
  row.dataset = data.dataset.name;
  row.method = cfg.method;
  row.trainable = method_trainable(method);
  row.seed = cfg.seed;

  const std::filesystem::path out_dir(cfg.out_dir);
  const std::string stem =
      data.dataset.name + "_" + cfg.method + "_seed" + std::to_string(cfg.seed);
  std::filesystem::create_directories(out_dir / "history");
  std::filesystem::create_directories(out_dir / "checkpoints");

  const auto t0 = std::chrono::steady_clock::now();
  const RunResult res =
      train_model(data.dataset, data.split, method, cfg, config_hash(cfg),
                  out_dir / "checkpoints" / (stem + ".ckpt"));
  row.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  write_history_csv(out_dir / "history" / (stem + ".csv"), res.history);
  row.epochs = res.epochs_ran;
  row.status = res.status;
  if (res.status == "ok") {
    row.has_metrics = true;
    row.acc = res.test.accuracy;
    row.macro_f1 = res.test.macro_f1;
    row.macro_p = res.test.macro_precision;
    row.macro_r = res.test.macro_recall;
  }
  return row;
}

}  // namespace

ResultRow cmd_run(const ExperimentConfig& cfg, const LoadedData* prepared) {
  LoadedData local;
  if (!prepared) {
    local = cmd_prepare(cfg);
    prepared = &local;
  }
  const ResultRow row = run_cell(cfg, *prepared);
  append_result(cfg, row);
  return row;
}

void cmd_bench(const ExperimentConfig& cfg) {
  std::vector<DatasetConfig> datasets = cfg.bench_datasets;
  if (datasets.empty()) datasets.push_back(cfg.dataset);
  std::vector<std::string> methods = cfg.bench_methods;
  if (methods.empty())
    for (Method m : all_methods()) methods.push_back(method_tag(m));

  for (const DatasetConfig& dc : datasets) {
    ExperimentConfig cell = cfg;
    cell.dataset = dc;
    LoadedData data;
    try {
      data = cmd_prepare(cell);
    } catch (const std::exception& e) {
      log_warn("prepare failed for dataset " + dc.name + ": " + e.what());
      for (const std::string& m : methods) {
        ResultRow row;
        row.dataset = dc.name;
        row.method = m;
        row.trainable = method_trainable(method_from_tag(m));
        row.seed = cfg.seed;
        row.status = "error";
        append_result(cfg, row);
      }
      continue;
    }
    for (const std::string& m : methods) {
      cell.method = m;
      ResultRow row;
      try {
        row = run_cell(cell, data);
      } catch (const std::exception& e) {
        log_warn("cell " + dc.name + "/" + m + " failed: " + e.what());
        row = ResultRow{};
        row.dataset = dc.name;
        row.method = m;
        row.trainable = method_trainable(method_from_tag(m));
        row.seed = cfg.seed;
        row.status = "error";
      }
      append_result(cfg, row);
    }
  }
}

std::vector<ResultRow> read_results_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IngestError("missing or unreadable results CSV: " + path.string());
  std::vector<ResultRow> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      first = false;
      continue;  // header
    }
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) f.push_back(field);
    while (f.size() < 11) f.push_back("");
    ResultRow r;
    r.dataset = f[0];
    r.method = f[1];
    r.trainable = f[2] == "Y";
    r.has_metrics = !f[3].empty();
    if (r.has_metrics) {
      r.acc = std::stod(f[3]);
      r.macro_f1 = std::stod(f[4]);
      r.macro_p = std::stod(f[5]);
      r.macro_r = std::stod(f[6]);
    }
    if (!f[7].empty()) r.epochs = std::stoi(f[7]);
    if (!f[8].empty()) r.seed = std::stoull(f[8]);
    r.status = f[9];
    if (!f[10].empty()) r.wall_seconds = std::stod(f[10]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string render_report(const std::vector<ResultRow>& rows) {
  // dataset blocks in order of first appearance
  std::vector<std::string> datasets;
  for (const ResultRow& r : rows)
    if (std::find(datasets.begin(), datasets.end(), r.dataset) == datasets.end())
      datasets.push_back(r.dataset);

  std::string md;
  for (const std::string& dsname : datasets) {
    std::vector<const ResultRow*> block;
    for (Method m : all_methods()) {
      const std::string tag = method_tag(m);
      for (const ResultRow& r : rows)
        if (r.dataset == dsname && r.method == tag) block.push_back(&r);
    }
    for (const ResultRow& r : rows) {  // rows with tags outside the known set
      bool known = false;
      for (Method m : all_methods())
        if (r.method == method_tag(m)) known = true;
      if (!known && r.dataset == dsname) block.push_back(&r);
    }

    double best_acc = -1.0, best_f1 = -1.0;
    for (const ResultRow* r : block) {
      if (r->status != "ok" || !r->has_metrics) continue;
      best_acc = std::max(best_acc, r->acc);
      best_f1 = std::max(best_f1, r->macro_f1);
    }

    md += "## " + dsname + "\n\n";
    md += "| Method | Tr. | Acc | F1 | P | R | Epochs | Status |\n";
    md += "|---|---|---|---|---|---|---|---|\n";
    for (const ResultRow* r : block) {
      std::string name = r->method;
      for (Method m : all_methods())
        if (r->method == method_tag(m)) name = method_display(m);
      md += "| " + name + " | " + (r->trainable ? "Y" : "N") + " | ";
      if (r->has_metrics) {
        const bool bold_acc = r->status == "ok" && r->acc == best_acc;
        const bool bold_f1 = r->status == "ok" && r->macro_f1 == best_f1;
        md += (bold_acc ? "**" + fmt4(r->acc) + "**" : fmt4(r->acc)) + " | ";
        md += (bold_f1 ? "**" + fmt4(r->macro_f1) + "**" : fmt4(r->macro_f1)) + " | ";
        md += fmt4(r->macro_p) + " | " + fmt4(r->macro_r) + " | ";
      } else {
        md += "- | - | - | - | ";
      }
      md += std::to_string(r->epochs) + " | " + r->status + " |\n";
    }
    md += "\n";
  }
  return md;
}

void cmd_report(const std::filesystem::path& csv_path, const std::filesystem::path& md_path) {
  std::vector<ResultRow> rows;
  if (std::filesystem::exists(csv_path)) {
    rows = read_results_csv(csv_path);
  }
  if (rows.empty()) log_warn("report: no result rows in " + csv_path.string());
  atomic_write_text(md_path, render_report(rows));
}

}  // namespace qgb
