#include "qgb/params.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "qgb/error.hpp"
#include "qgb/fsio.hpp"
#include "qgb/hexio.hpp"
#include "qgb/rng.hpp"

namespace qgb {

Mat& ParamStore::create(const std::string& name, int rows, int cols) {
  if (has(name)) throw ConfigError("parameter '" + name + "' already registered");
  Entry e;
  e.name = name;
  e.value = Mat(rows, cols);
  e.grad = Mat(rows, cols);
  e.m = Mat(rows, cols);
  e.v = Mat(rows, cols);
  index_[name] = entries_.size();
  entries_.push_back(std::move(e));
  return entries_.back().value;
}

ParamStore::Entry& ParamStore::entry(const std::string& name) {
  auto it = index_.find(name);
  if (it == index_.end()) throw ConfigError("unknown parameter '" + name + "'");
  return entries_[it->second];
}

const ParamStore::Entry& ParamStore::entry(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw ConfigError("unknown parameter '" + name + "'");
  return entries_[it->second];
}

Mat& ParamStore::value(const std::string& name) { return entry(name).value; }
const Mat& ParamStore::value(const std::string& name) const { return entry(name).value; }
const Mat& ParamStore::grad(const std::string& name) const { return entry(name).grad; }

void ParamStore::accum_grad(const std::string& name, const Mat& g) {
  Entry& e = entry(name);
  if (!e.value.same_shape(g)) throw ConfigError("gradient shape mismatch for '" + name + "'");
  for (size_t i = 0; i < e.grad.data.size(); ++i) e.grad.data[i] += g.data[i];
  e.grad_set = true;
}

std::vector<std::string> ParamStore::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const Entry& e : entries_) out.push_back(e.name);
  return out;
}

void ParamStore::adam_step(const AdamConfig& cfg) {
  for (Entry& e : entries_) {
    if (!e.grad_set)
      throw Error("adam_step: no gradient accumulated for '" + e.name + "'");
  }
  for (Entry& e : entries_) {
    e.step += 1;
    const double bc1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(e.step));
    const double bc2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(e.step));
    for (size_t i = 0; i < e.value.data.size(); ++i) {
      double g = e.grad.data[i];
      if (cfg.weight_decay != 0.0) g += cfg.weight_decay * e.value.data[i];
      e.m.data[i] = cfg.beta1 * e.m.data[i] + (1.0 - cfg.beta1) * g;
      e.v.data[i] = cfg.beta2 * e.v.data[i] + (1.0 - cfg.beta2) * g * g;
      const double mhat = e.m.data[i] / bc1;
      const double vhat = e.v.data[i] / bc2;
      e.value.data[i] -= cfg.lr * mhat / (std::sqrt(vhat) + cfg.eps);
    }
    e.grad = Mat(e.value.rows, e.value.cols);
    e.grad_set = false;
  }
}

std::vector<Mat> ParamStore::snapshot() const {
  std::vector<Mat> out;
  out.reserve(entries_.size());
  for (const Entry& e : entries_) out.push_back(e.value);
  return out;
}

void ParamStore::restore(const std::vector<Mat>& values) {
  if (values.size() != entries_.size()) throw ConfigError("restore: tensor count mismatch");
  for (size_t i = 0; i < values.size(); ++i) {
    if (!entries_[i].value.same_shape(values[i]))
      throw ConfigError("restore: shape mismatch for '" + entries_[i].name + "'");
    entries_[i].value = values[i];
  }
}

void ParamStore::save_checkpoint(const std::filesystem::path& path,
                                 const CheckpointMeta& meta) const {
  nlohmann::json j;
  j["meta"] = {{"epoch", meta.epoch},
               {"val_macro_f1", meta.val_macro_f1},
               {"config_hash", meta.config_hash}};
  auto tensors = nlohmann::json::array();
  for (const Entry& e : entries_) {
    tensors.push_back({{"name", e.name},
                       {"rows", e.value.rows},
                       {"cols", e.value.cols},
                       {"data", doubles_to_hex(e.value.data)}});
  }
  j["tensors"] = std::move(tensors);
  atomic_write_text(path, j.dump() + "\n");
}

CheckpointMeta ParamStore::load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IngestError("missing or unreadable checkpoint: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
    const auto& tensors = j.at("tensors");
    if (tensors.size() != entries_.size())
      throw IngestError("checkpoint tensor count mismatch");
    for (size_t i = 0; i < entries_.size(); ++i) {
      const auto& t = tensors.at(i);
      if (t.at("name").get<std::string>() != entries_[i].name ||
          t.at("rows").get<int>() != entries_[i].value.rows ||
          t.at("cols").get<int>() != entries_[i].value.cols)
        throw IngestError("checkpoint tensor '" + entries_[i].name + "' mismatch");
      entries_[i].value.data = hex_to_doubles(t.at("data").get<std::string>());
    }
    CheckpointMeta meta;
    meta.epoch = j.at("meta").at("epoch").get<int>();
    meta.val_macro_f1 = j.at("meta").at("val_macro_f1").get<double>();
    meta.config_hash = j.at("meta").at("config_hash").get<std::string>();
    return meta;
  } catch (const IngestError&) {
    throw;
  } catch (const std::exception& e) {
    throw IngestError("bad checkpoint " + path.string() + ": " + e.what());
  }
}

int BoundParams::operator[](const std::string& name) {
  auto it = map_.find(name);
  if (it != map_.end()) return it->second;
  const int node = tape_->leaf(store_->value(name), needs_grad_);
  map_[name] = node;
  bound_.emplace_back(name, node);
  return node;
}

void BoundParams::flush_grads() {
  for (const auto& [name, node] : bound_) store_->accum_grad(name, tape_->grad(node));
}

void init_gaussian(ParamStore& store, const std::string& name, int rows, int cols,
                   uint64_t seed, double variance) {
  Mat& m = store.create(name, rows, cols);
  Rng rng(mix(seed, "init:" + name));
  for (double& v : m.data) v = rng.next_gaussian(0.0, variance);
}

void init_zeros(ParamStore& store, const std::string& name, int rows, int cols) {
  store.create(name, rows, cols);
}

}  // namespace qgb
