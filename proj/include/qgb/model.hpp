#pragma once

#include <utility>
#include <vector>

#include "qgb/config.hpp"
#include "qgb/gradcheck.hpp"
#include "qgb/graph.hpp"
#include "qgb/params.hpp"
#include "qgb/rng.hpp"

namespace qgb {

// Descriptor matrix of one graph for a cacheable generator (quop, qwalkvec,
// qpe) under the experiment's generator settings.
Mat compute_generator_descriptor(const Graph& g, Generator gen, const ExperimentConfig& cfg);

// One embedding variant plus the shared GIN backbone and head. Graphs must
// already carry x and pe; frozen descriptors are taken from the per-graph
// cache when present and computed on the fly otherwise.
class Model {
 public:
  Model(const Dataset& ds, Method method, const ExperimentConfig& cfg);

  // Forward + backward on one mini-batch; gradients land in params().
  // Returns the batch loss. Throws NumericError when the NaN guard fires.
  double train_step(const std::vector<int>& graph_ids, Rng& dropout_rng);

  // Dropout-free forward; argmax predictions, ties to the lowest class.
  std::vector<int> predict(const std::vector<int>& graph_ids) const;

  // Dropout-free cross-entropy under the current parameters, no gradients.
  double eval_loss(const std::vector<int>& graph_ids) const { return eval_fd(graph_ids).loss; }

  // Same evaluation packaged for finite_diff_check (loss + relu telemetry).
  FdEval eval_fd(const std::vector<int>& graph_ids) const;

  ParamStore& params() { return store_; }
  const ParamStore& params() const { return store_; }
  int base_input_width() const { return d_u_; }
  Method method() const { return method_; }

 private:
  struct Batch {
    std::vector<int> ids;
    std::vector<int> segments;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> labels;
    int total_nodes = 0;
  };

  Batch make_batch(const std::vector<int>& graph_ids) const;
  Mat stack_base_input(const Batch& b) const;
  Mat stack_frozen_z(const Batch& b) const;
  Mat stack_joined(const Batch& b) const;

  // Builds embedding + backbone + head; returns the logits node. For
  // angle-vqc, *vqc_descriptor_node receives the descriptor leaf so
  // train_step can chain parameter-shift gradients into embed/theta.
  int forward_logits(Tape& tape, BoundParams& bp, const Batch& b, bool training,
                     Rng* dropout_rng, int* vqc_descriptor_node) const;

  const Dataset* ds_;
  Method method_;
  ExperimentConfig cfg_;
  int d_u_ = 0;
  mutable ParamStore store_;

  std::vector<Mat> base_input_;  // per graph, [x || pe]
  std::vector<Mat> frozen_z_;    // frozen methods: precomputed embeddings
  std::vector<Mat> joined_;      // trainable fusion over frozen descriptors: [u || s]
  Mat vqc_input_map_;            // angle-vqc only
};

}  // namespace qgb
