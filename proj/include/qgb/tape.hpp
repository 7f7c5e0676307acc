#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qgb/matrix.hpp"
#include "qgb/rng.hpp"

namespace qgb {

// Reverse-mode tape over dense Mat values. One tape per forward pass; ops
// append nodes, backward() runs a reverse sweep accumulating gradients at
// fan-out. Every op checks its output for NaN/Inf and throws NumericError.
class Tape {
 public:
  int leaf(Mat value, bool needs_grad = false);

  int matmul_nt(int x, int w);  // X[n,a] * W[b,a]^T -> [n,b]
  int add_row(int x, int bias_row);
  int relu(int x);
  int concat_cols(int a, int b);
  int mul_elem(int a, int b);
  int sum_all(int x);  // 1x1

  // y_v = self_weight * x_v + sum over neighbors u of x_u
  int neighbor_sum(int x, const std::vector<std::pair<int, int>>& edges, double self_weight);

  // Row s of the result is the mean of rows v with segments[v] == s.
  // Segment ids must be contiguous from 0; an empty segment is fatal.
  int mean_pool(int x, const std::vector<int>& segments, int num_segments);

  // Inverted dropout: kept entries scale by 1/(1-rate); identity (no rng
  // draws) when training is false. The mask walks the matrix row-major.
  int dropout(int x, double rate, Rng* rng, bool training);

  // Mean over rows of -log softmax(logits)[label], max-subtracted.
  int cross_entropy(int logits, const std::vector<int>& labels);

  // Reverse sweep from a scalar node; throws on non-scalar input.
  void backward(int node);

  const Mat& value(int id) const { return nodes_[id].value; }
  const Mat& grad(int id) const { return nodes_[id].grad; }
  bool needs_grad(int id) const { return nodes_[id].needs_grad; }

  // Smallest |input entry| seen by any relu on this tape (inf when no relu
  // ran); finite-difference checks use it to skip kink coordinates.
  double relu_min_margin() const { return relu_min_margin_; }

  // Hash of every relu entry's active/inactive state in evaluation order.
  // Two evaluations of the same pipeline share this value exactly when no
  // pre-activation crossed a kink between them.
  uint64_t relu_pattern() const { return relu_pattern_; }

  int size() const { return static_cast<int>(nodes_.size()); }

 private:
  struct Node {
    Mat value;
    Mat grad;
    bool needs_grad = false;
    std::function<void(Tape&)> back;
  };

  int push(Mat value, bool needs_grad, std::function<void(Tape&)> back, const char* op);
  Mat& grad_ref(int id) { return nodes_[id].grad; }

  std::vector<Node> nodes_;
  double relu_min_margin_ = 1e300;
  uint64_t relu_pattern_ = 0xCBF29CE484222325ULL;  // FNV-1a state
};

}  // namespace qgb
