#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qgb/config.hpp"
#include "qgb/error.hpp"
#include "qgb/runner.hpp"

namespace {

struct CliArgs {
  std::string config_path;
  std::string dataset;
  std::string method;
  std::string out;
  int64_t seed = -1;
};

qgb::ExperimentConfig assemble(const CliArgs& args) {
  qgb::ExperimentConfig cfg;
  if (!args.config_path.empty()) cfg = qgb::load_config_file(args.config_path);
  if (!args.dataset.empty()) {
    if (cfg.dataset.name != args.dataset) cfg.dataset.path.clear();  // re-derive data/<name>
    cfg.dataset.name = args.dataset;
  }
  if (!args.method.empty()) cfg.method = args.method;
  if (args.seed >= 0) cfg.seed = static_cast<uint64_t>(args.seed);
  if (!args.out.empty()) cfg.out_dir = args.out;
  qgb::method_from_tag(cfg.method);  // validate before running
  return cfg;
}

void add_common_flags(CLI::App* cmd, CliArgs& args) {
  cmd->add_option("--config", args.config_path, "experiment config JSON");
  cmd->add_option("--dataset", args.dataset, "dataset name (data expected at data/<name>)");
  cmd->add_option("--method", args.method, "embedding method tag");
  cmd->add_option("--seed", args.seed, "run seed");
  cmd->add_option("--out", args.out, "output directory");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph embedding benchmark"};
  app.require_subcommand(1);

  CliArgs args;
  CLI::App* prepare = app.add_subcommand("prepare", "ingest, featurize, cache descriptors");
  CLI::App* run = app.add_subcommand("run", "train one (dataset, method) cell");
  CLI::App* bench = app.add_subcommand("bench", "run the full dataset x method matrix");
  CLI::App* report = app.add_subcommand("report", "render results.csv as a Markdown table");
  for (CLI::App* cmd : {prepare, run, bench, report}) add_common_flags(cmd, args);

  CLI11_PARSE(app, argc, argv);

  try {
    const qgb::ExperimentConfig cfg = assemble(args);
    if (prepare->parsed()) {
      qgb::cmd_prepare(cfg);
      std::cout << "prepared " << cfg.dataset.name << " into " << cfg.out_dir << "\n";
    } else if (run->parsed()) {
      const qgb::ResultRow row = qgb::cmd_run(cfg);
      std::cout << qgb::results_csv_header() << qgb::result_row_csv(row);
    } else if (bench->parsed()) {
      qgb::cmd_bench(cfg);
      std::cout << "bench complete: " << qgb::results_csv_path(cfg).string() << "\n";
    } else if (report->parsed()) {
      const auto csv = qgb::results_csv_path(cfg);
      const auto md = std::filesystem::path(cfg.out_dir) / "report.md";
      qgb::cmd_report(csv, md);
      std::cout << "report written: " << md.string() << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
