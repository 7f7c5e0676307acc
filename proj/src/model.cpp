#include "qgb/model.hpp"

#include <string>

#include "qgb/embed.hpp"
#include "qgb/error.hpp"
#include "qgb/gin.hpp"
#include "qgb/qpe.hpp"
#include "qgb/quop.hpp"
#include "qgb/qwalk.hpp"
#include "qgb/vqc.hpp"

namespace qgb {

Mat compute_generator_descriptor(const Graph& g, Generator gen, const ExperimentConfig& cfg) {
  switch (gen) {
    case Generator::kQuop: return quop_descriptor_all(g, cfg.quop);
    case Generator::kQwalk: return qwalk_run(g, cfg.qwalk);
    case Generator::kQpe: return qpe_descriptor(g, cfg.qpe);
    default: throw ConfigError("compute_generator_descriptor: not a cacheable generator");
  }
}

namespace {

Mat graph_descriptor(const Graph& g, Generator gen, const ExperimentConfig& cfg) {
  const auto it = g.descriptors.find(generator_key(gen));
  if (it != g.descriptors.end()) return it->second;
  return compute_generator_descriptor(g, gen, cfg);
}

}  // namespace

Model::Model(const Dataset& ds, Method method, const ExperimentConfig& cfg)
    : ds_(&ds), method_(method), cfg_(cfg) {
  if (ds.graphs.empty()) throw ConfigError("model: empty dataset");
  if (ds.num_classes < 2) throw ConfigError("model: dataset needs at least 2 classes");

  base_input_.reserve(ds.graphs.size());
  for (const Graph& g : ds.graphs) {
    if (g.x.rows != g.num_nodes || g.pe.rows != g.num_nodes)
      throw ConfigError("model: graph features missing (run degree_onehot / laplacian_pe)");
    base_input_.push_back(concat_base_input(g.x, g.pe));
  }
  d_u_ = base_input_[0].cols;

  const int d = cfg.embed_dim;
  const Generator gen = method_generator(method);

  switch (method_) {
    case Method::kFixed: {
      const FixedProjection proj = init_fixed_projection(cfg.seed, d, d_u_);
      for (const Mat& u : base_input_) frozen_z_.push_back(fixed_embed(u, proj));
      break;
    }
    case Method::kMlp:
      init_mlp_embed(store_, d, d_u_, cfg.seed);
      break;
    case Method::kAngleVqc: {
      vqc_input_map_ = vqc_input_map(cfg.seed, cfg.vqc.qubits, d_u_);
      const VqcCircuit circuit(cfg.vqc);
      init_gaussian(store_, "embed/theta", circuit.theta_rows(), 2, cfg.seed, 0.01);
      init_trainable_fuse(store_, d, d_u_, cfg.vqc.qubits, cfg.seed);
      break;
    }
    case Method::kQuop:
    case Method::kQwalkVec:
    case Method::kQpe: {
      for (size_t i = 0; i < ds.graphs.size(); ++i) {
        const Mat s = graph_descriptor(ds.graphs[i], gen, cfg);
        frozen_z_.push_back(frozen_fuse(s, d, cfg.seed, generator_key(gen)));
      }
      break;
    }
    case Method::kQuopTrainable:
    case Method::kQwalkVecTrainable: {
      int d_s = -1;
      for (size_t i = 0; i < ds.graphs.size(); ++i) {
        const Mat s = graph_descriptor(ds.graphs[i], gen, cfg);
        if (d_s < 0) d_s = s.cols;
        joined_.push_back(concat_base_input(base_input_[i], s));
      }
      init_trainable_fuse(store_, d, d_u_, d_s, cfg.seed);
      break;
    }
  }

  for (int l = 0; l < cfg.gin.layers; ++l) {
    const int in_dim = (l == 0) ? d : cfg.gin.hidden;
    init_affine_pair(store_, "gin" + std::to_string(l), cfg.gin.hidden, in_dim,
                     cfg.gin.hidden, cfg.seed);
  }
  init_affine_pair(store_, "head", ds.num_classes, cfg.gin.hidden, cfg.gin.hidden, cfg.seed);
}

Model::Batch Model::make_batch(const std::vector<int>& graph_ids) const {
  Batch b;
  b.ids = graph_ids;
  for (size_t k = 0; k < graph_ids.size(); ++k) {
    const Graph& g = ds_->graphs.at(graph_ids[k]);
    for (auto [u, v] : g.edges) b.edges.emplace_back(b.total_nodes + u, b.total_nodes + v);
    for (int i = 0; i < g.num_nodes; ++i) b.segments.push_back(static_cast<int>(k));
    b.labels.push_back(g.label);
    b.total_nodes += g.num_nodes;
  }
  return b;
}

namespace {

Mat stack_rows(const std::vector<Mat>& parts, const std::vector<int>& ids, int total_rows) {
  const int cols = parts.at(ids.at(0)).cols;
  Mat out(total_rows, cols);
  int row = 0;
  for (int id : ids) {
    const Mat& p = parts[id];
    for (int i = 0; i < p.rows; ++i, ++row)
      for (int j = 0; j < cols; ++j) out(row, j) = p(i, j);
  }
  return out;
}

}  // namespace

Mat Model::stack_base_input(const Batch& b) const {
  return stack_rows(base_input_, b.ids, b.total_nodes);
}
Mat Model::stack_frozen_z(const Batch& b) const {
  return stack_rows(frozen_z_, b.ids, b.total_nodes);
}
Mat Model::stack_joined(const Batch& b) const { return stack_rows(joined_, b.ids, b.total_nodes); }

int Model::forward_logits(Tape& tape, BoundParams& bp, const Batch& b, bool training,
                          Rng* dropout_rng, int* vqc_descriptor_node) const {
  int z = -1;
  switch (method_) {
    case Method::kFixed:
    case Method::kQuop:
    case Method::kQwalkVec:
    case Method::kQpe:
      z = tape.leaf(stack_frozen_z(b));
      break;
    case Method::kMlp: {
      const int u = tape.leaf(stack_base_input(b));
      z = mlp_embed_forward(tape, u, bp);
      break;
    }
    case Method::kQuopTrainable:
    case Method::kQwalkVecTrainable: {
      const int joined = tape.leaf(stack_joined(b));
      z = tape.add_row(tape.matmul_nt(joined, bp["embed/fuse_w"]), bp["embed/fuse_b"]);
      break;
    }
    case Method::kAngleVqc: {
      const Mat u_cat = stack_base_input(b);
      const Mat s_cat =
          vqc_descriptor_all(u_cat, vqc_input_map_, store_.value("embed/theta"), cfg_.vqc);
      const int u = tape.leaf(u_cat);
      const int s = tape.leaf(s_cat, /*needs_grad=*/vqc_descriptor_node != nullptr);
      if (vqc_descriptor_node) *vqc_descriptor_node = s;
      z = trainable_fuse_forward(tape, u, s, bp);
      break;
    }
  }

  int h = z;
  for (int l = 0; l < cfg_.gin.layers; ++l)
    h = gin_layer(tape, h, b.edges, bp, "gin" + std::to_string(l), cfg_.gin.eps);
  const int pooled = tape.mean_pool(h, b.segments, static_cast<int>(b.ids.size()));
  return classifier_head(tape, pooled, bp, cfg_.gin.dropout, training, dropout_rng);
}

double Model::train_step(const std::vector<int>& graph_ids, Rng& dropout_rng) {
  const Batch b = make_batch(graph_ids);
  Tape tape;
  BoundParams bp(tape, store_, /*needs_grad=*/true);
  int vqc_node = -1;
  const bool is_vqc = method_ == Method::kAngleVqc;
  const int logits =
      forward_logits(tape, bp, b, /*training=*/true, &dropout_rng, is_vqc ? &vqc_node : nullptr);
  const int loss = tape.cross_entropy(logits, b.labels);
  tape.backward(loss);
  bp.flush_grads();

  if (is_vqc) {
    // Chain the descriptor gradient through the parameter-shift rule.
    const Mat& upstream = tape.grad(vqc_node);
    const Mat u_cat = stack_base_input(b);
    const Mat phi = matmul_nt(u_cat, vqc_input_map_);  // per-node encoding angles
    const Mat& theta = store_.value("embed/theta");
    const VqcCircuit circuit(cfg_.vqc);
    Mat theta_grad(theta.rows, theta.cols);
    std::vector<double> angles(cfg_.vqc.qubits), up(cfg_.vqc.qubits);
    for (int r = 0; r < upstream.rows; ++r) {
      bool any = false;
      for (int k = 0; k < cfg_.vqc.qubits; ++k) {
        angles[k] = phi(r, k);
        up[k] = upstream(r, k);
        if (up[k] != 0.0) any = true;
      }
      if (!any) continue;
      const Mat g = circuit.param_shift_grad(angles, theta, up);
      for (size_t i = 0; i < theta_grad.data.size(); ++i) theta_grad.data[i] += g.data[i];
    }
    store_.accum_grad("embed/theta", theta_grad);
  }
  return tape.value(loss)(0, 0);
}

FdEval Model::eval_fd(const std::vector<int>& graph_ids) const {
  if (graph_ids.empty()) throw ConfigError("eval_fd: empty batch");
  const Batch b = make_batch(graph_ids);
  Tape tape;
  BoundParams bp(tape, store_, /*needs_grad=*/false);
  const int logits = forward_logits(tape, bp, b, /*training=*/false, nullptr, nullptr);
  const int loss = tape.cross_entropy(logits, b.labels);
  FdEval e;
  e.loss = tape.value(loss)(0, 0);
  e.relu_margin = tape.relu_min_margin();
  e.relu_pattern = tape.relu_pattern();
  return e;
}

std::vector<int> Model::predict(const std::vector<int>& graph_ids) const {
  if (graph_ids.empty()) return {};
  const Batch b = make_batch(graph_ids);
  Tape tape;
  BoundParams bp(tape, store_, /*needs_grad=*/false);
  const int logits = forward_logits(tape, bp, b, /*training=*/false, nullptr, nullptr);
  const Mat& lv = tape.value(logits);
  std::vector<int> preds(lv.rows);
  for (int i = 0; i < lv.rows; ++i) {
    int best = 0;
    for (int j = 1; j < lv.cols; ++j)
      if (lv(i, j) > lv(i, best)) best = j;  // ties keep the lowest class
    preds[i] = best;
  }
  return preds;
}

}  // namespace qgb
