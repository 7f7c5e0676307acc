#include "qgb/config.hpp"

#include <fstream>

#include "qgb/error.hpp"
#include "qgb/rng.hpp"

namespace qgb {

namespace {

void reject_unknown(const nlohmann::json& j, const std::vector<std::string>& known,
                    const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const std::string& k : known)
      if (it.key() == k) ok = true;
    if (!ok) throw ConfigError("unknown config key '" + it.key() + "' in " + where);
  }
}

template <typename T>
void maybe(const nlohmann::json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

DatasetConfig dataset_from_json(const nlohmann::json& j) {
  reject_unknown(j, {"name", "path", "format", "target_index", "bins", "max_graphs"},
                 "dataset");
  DatasetConfig d;
  maybe(j, "name", d.name);
  maybe(j, "path", d.path);
  maybe(j, "format", d.format);
  maybe(j, "target_index", d.target_index);
  maybe(j, "bins", d.bins);
  maybe(j, "max_graphs", d.max_graphs);
  if (d.format != "tu" && d.format != "jsonl")
    throw ConfigError("dataset format must be 'tu' or 'jsonl'");
  return d;
}

nlohmann::json dataset_to_json(const DatasetConfig& d) {
  return {{"name", d.name},         {"path", d.path},
          {"format", d.format},     {"target_index", d.target_index},
          {"bins", d.bins},         {"max_graphs", d.max_graphs}};
}

}  // namespace

ExperimentConfig config_from_json(const nlohmann::json& j) {
  reject_unknown(j,
                 {"dataset", "method", "seed", "out", "pe", "embed_dim", "vqc", "quop",
                  "qwalk", "qpe", "gin", "train", "bench_datasets", "bench_methods"},
                 "config");
  ExperimentConfig c;
  if (j.contains("dataset")) c.dataset = dataset_from_json(j.at("dataset"));
  maybe(j, "method", c.method);
  maybe(j, "seed", c.seed);
  if (j.contains("out")) c.out_dir = j.at("out").get<std::string>();
  maybe(j, "embed_dim", c.embed_dim);
  if (j.contains("pe")) {
    reject_unknown(j.at("pe"), {"k"}, "pe");
    maybe(j.at("pe"), "k", c.pe_k);
  }
  if (j.contains("vqc")) {
    const auto& v = j.at("vqc");
    reject_unknown(v, {"qubits", "layers"}, "vqc");
    maybe(v, "qubits", c.vqc.qubits);
    maybe(v, "layers", c.vqc.layers);
  }
  if (j.contains("quop")) {
    const auto& q = j.at("quop");
    reject_unknown(q, {"hops", "qubits"}, "quop");
    maybe(q, "hops", c.quop.hop_radius);
    maybe(q, "qubits", c.quop.qubit_budget);
  }
  if (j.contains("qwalk")) {
    const auto& q = j.at("qwalk");
    reject_unknown(q, {"steps", "w_p", "w_q", "coin"}, "qwalk");
    maybe(q, "steps", c.qwalk.steps);
    maybe(q, "w_p", c.qwalk.w_p);
    maybe(q, "w_q", c.qwalk.w_q);
    if (q.contains("coin")) c.qwalk.coin = coin_from_tag(q.at("coin").get<std::string>());
  }
  if (j.contains("qpe")) {
    const auto& q = j.at("qpe");
    reject_unknown(q, {"times", "anchors"}, "qpe");
    maybe(q, "times", c.qpe.times);
    maybe(q, "anchors", c.qpe.anchors);
    if (c.qpe.times.empty()) throw ConfigError("qpe.times must be non-empty");
  }
  if (j.contains("gin")) {
    const auto& g = j.at("gin");
    reject_unknown(g, {"layers", "hidden", "dropout"}, "gin");
    maybe(g, "layers", c.gin.layers);
    maybe(g, "hidden", c.gin.hidden);
    maybe(g, "dropout", c.gin.dropout);
  }
  if (j.contains("train")) {
    const auto& t = j.at("train");
    reject_unknown(t,
                   {"lr", "weight_decay", "max_epochs", "batch_size", "patience", "beta1",
                    "beta2", "eps"},
                   "train");
    maybe(t, "lr", c.train.lr);
    maybe(t, "weight_decay", c.train.weight_decay);
    maybe(t, "max_epochs", c.train.max_epochs);
    maybe(t, "batch_size", c.train.batch_size);
    maybe(t, "patience", c.train.patience);
    maybe(t, "beta1", c.train.beta1);
    maybe(t, "beta2", c.train.beta2);
    maybe(t, "eps", c.train.eps);
  }
  if (j.contains("bench_datasets"))
    for (const auto& d : j.at("bench_datasets")) c.bench_datasets.push_back(dataset_from_json(d));
  maybe(j, "bench_methods", c.bench_methods);

  method_from_tag(c.method);  // validate
  for (const std::string& m : c.bench_methods) method_from_tag(m);
  return c;
}

nlohmann::json config_to_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["dataset"] = dataset_to_json(c.dataset);
  j["method"] = c.method;
  j["seed"] = c.seed;
  j["out"] = c.out_dir;
  j["pe"] = {{"k", c.pe_k}};
  j["embed_dim"] = c.embed_dim;
  j["vqc"] = {{"qubits", c.vqc.qubits}, {"layers", c.vqc.layers}};
  j["quop"] = {{"hops", c.quop.hop_radius}, {"qubits", c.quop.qubit_budget}};
  j["qwalk"] = {{"steps", c.qwalk.steps},
                {"w_p", c.qwalk.w_p},
                {"w_q", c.qwalk.w_q},
                {"coin", coin_tag(c.qwalk.coin)}};
  j["qpe"] = {{"times", c.qpe.times}, {"anchors", c.qpe.anchors}};
  j["gin"] = {{"layers", c.gin.layers}, {"hidden", c.gin.hidden}, {"dropout", c.gin.dropout}};
  j["train"] = {{"lr", c.train.lr},
                {"weight_decay", c.train.weight_decay},
                {"max_epochs", c.train.max_epochs},
                {"batch_size", c.train.batch_size},
                {"patience", c.train.patience},
                {"beta1", c.train.beta1},
                {"beta2", c.train.beta2},
                {"eps", c.train.eps}};
  if (!c.bench_datasets.empty()) {
    auto arr = nlohmann::json::array();
    for (const auto& d : c.bench_datasets) arr.push_back(dataset_to_json(d));
    j["bench_datasets"] = std::move(arr);
  }
  if (!c.bench_methods.empty()) j["bench_methods"] = c.bench_methods;
  return j;
}

ExperimentConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IngestError("missing or unreadable config: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError("bad config JSON " + path.string() + ": " + e.what());
  }
  return config_from_json(j);
}

namespace {

std::string hex64(uint64_t h) {
  static const char* kHex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = kHex[h & 0xF];
    h >>= 4;
  }
  return s;
}

}  // namespace

std::string config_hash(const ExperimentConfig& cfg) {
  nlohmann::json j = config_to_json(cfg);
  j.erase("out");
  return hex64(fnv1a(j.dump()));  // nlohmann dumps object keys sorted
}

std::string generator_config_hash(const ExperimentConfig& cfg, Generator gen) {
  nlohmann::json j;
  j["generator"] = generator_key(gen);
  switch (gen) {
    case Generator::kQuop:
      j["hops"] = cfg.quop.hop_radius;
      j["qubits"] = cfg.quop.qubit_budget;
      break;
    case Generator::kQwalk:
      j["steps"] = cfg.qwalk.steps;
      j["w_p"] = cfg.qwalk.w_p;
      j["w_q"] = cfg.qwalk.w_q;
      j["coin"] = coin_tag(cfg.qwalk.coin);
      break;
    case Generator::kQpe:
      j["times"] = cfg.qpe.times;
      j["anchors"] = cfg.qpe.anchors;
      break;
    default:
      throw ConfigError("generator_config_hash: generator is not cacheable");
  }
  return hex64(fnv1a(j.dump()));
}

AdamConfig adam_from_train(const TrainConfig& t) {
  AdamConfig a;
  a.lr = t.lr;
  a.beta1 = t.beta1;
  a.beta2 = t.beta2;
  a.eps = t.eps;
  a.weight_decay = t.weight_decay;
  return a;
}

}  // namespace qgb
