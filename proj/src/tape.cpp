#include "qgb/tape.hpp"

#include <cmath>
#include <string>

#include "qgb/error.hpp"

namespace qgb {

int Tape::push(Mat value, bool needs_grad, std::function<void(Tape&)> back, const char* op) {
  if (!all_finite(value))
    throw NumericError(std::string("non-finite value produced by op '") + op + "'");
  Node n;
  n.value = std::move(value);
  n.needs_grad = needs_grad;
  n.back = std::move(back);
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

int Tape::leaf(Mat value, bool needs_grad) {
  return push(std::move(value), needs_grad, nullptr, "leaf");
}

int Tape::matmul_nt(int x, int w) {
  const Mat& xv = nodes_[x].value;
  const Mat& wv = nodes_[w].value;
  if (xv.cols != wv.cols) throw ConfigError("matmul_nt: inner dimension mismatch");
  Mat y = qgb::matmul_nt(xv, wv);
  const bool ng = nodes_[x].needs_grad || nodes_[w].needs_grad;
  const int out = push(std::move(y), ng, nullptr, "matmul_nt");
  if (ng) {
    nodes_[out].back = [x, w, out](Tape& t) {
      const Mat& gy = t.nodes_[out].grad;
      if (t.nodes_[x].needs_grad) {
        const Mat gx = qgb::matmul(gy, t.nodes_[w].value);
        Mat& acc = t.grad_ref(x);
        for (size_t i = 0; i < acc.data.size(); ++i) acc.data[i] += gx.data[i];
      }
      if (t.nodes_[w].needs_grad) {
        const Mat gw = qgb::matmul_tn(gy, t.nodes_[x].value);
        Mat& acc = t.grad_ref(w);
        for (size_t i = 0; i < acc.data.size(); ++i) acc.data[i] += gw.data[i];
      }
    };
  }
  return out;
}

int Tape::add_row(int x, int bias_row) {
  const Mat& xv = nodes_[x].value;
  const Mat& bv = nodes_[bias_row].value;
  if (bv.rows != 1 || bv.cols != xv.cols) throw ConfigError("add_row: bias shape mismatch");
  Mat y = xv;
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < y.cols; ++j) y(i, j) += bv(0, j);
  const bool ng = nodes_[x].needs_grad || nodes_[bias_row].needs_grad;
  const int out = push(std::move(y), ng, nullptr, "add_row");
  if (ng) {
    nodes_[out].back = [x, bias_row, out](Tape& t) {
      const Mat& gy = t.nodes_[out].grad;
      if (t.nodes_[x].needs_grad) {
        Mat& gx = t.grad_ref(x);
        for (size_t i = 0; i < gx.data.size(); ++i) gx.data[i] += gy.data[i];
      }
      if (t.nodes_[bias_row].needs_grad) {
        Mat& gb = t.grad_ref(bias_row);
        for (int i = 0; i < gy.rows; ++i)
          for (int j = 0; j < gy.cols; ++j) gb(0, j) += gy(i, j);
      }
    };
  }
  return out;
}

int Tape::relu(int x) {
  const Mat& xv = nodes_[x].value;
  Mat y = xv;
  for (double& v : y.data) {
    const double m = std::fabs(v);
    if (m < relu_min_margin_) relu_min_margin_ = m;
    relu_pattern_ ^= (v > 0.0) ? 0x9E3779B9ULL : 0x517CC1B7ULL;
    relu_pattern_ *= 0x100000001B3ULL;
    if (v < 0.0) v = 0.0;
  }
  const bool ng = nodes_[x].needs_grad;
  const int out = push(std::move(y), ng, nullptr, "relu");
  if (ng) {
    nodes_[out].back = [x, out](Tape& t) {
      const Mat& gy = t.nodes_[out].grad;
      const Mat& xv = t.nodes_[x].value;
      Mat& gx = t.grad_ref(x);
      for (size_t i = 0; i < gx.data.size(); ++i)
        if (xv.data[i] > 0.0) gx.data[i] += gy.data[i];
    };
  }
  return out;
}

int Tape::concat_cols(int a, int b) {
  const Mat& av = nodes_[a].value;
  const Mat& bv = nodes_[b].value;
  if (av.rows != bv.rows) throw ConfigError("concat_cols: row count mismatch");
  Mat y(av.rows, av.cols + bv.cols);
  for (int i = 0; i < av.rows; ++i) {
    for (int j = 0; j < av.cols; ++j) y(i, j) = av(i, j);
    for (int j = 0; j < bv.cols; ++j) y(i, av.cols + j) = bv(i, j);
  }
  const bool ng = nodes_[a].needs_grad || nodes_[b].needs_grad;
  const int out = push(std::move(y), ng, nullptr, "concat_cols");
  if (ng) {
    nodes_[out].back = [a, b, out](Tape& t) {
      const Mat& gy = t.nodes_[out].grad;
      const int ac = t.nodes_[a].value.cols;
      if (t.nodes_[a].needs_grad) {
        Mat& ga = t.grad_ref(a);
        for (int i = 0; i < ga.rows; ++i)
          for (int j = 0; j < ga.cols; ++j) ga(i, j) += gy(i, j);
      }
      if (t.nodes_[b].needs_grad) {
        Mat& gb = t.grad_ref(b);
        for (int i = 0; i < gb.rows; ++i)
          for (int j = 0; j < gb.cols; ++j) gb(i, j) += gy(i, ac + j);
      }
    };
  }
  return out;
}

int Tape::mul_elem(int a, int b) {
  const Mat& av = nodes_[a].value;
  const Mat& bv = nodes_[b].value;
  if (!av.same_shape(bv)) throw ConfigError("mul_elem: shape mismatch");
  Mat y = av;
  for (size_t i = 0; i < y.data.size(); ++i) y.data[i] *= bv.data[i];
  const bool ng = nodes_[a].needs_grad || nodes_[b].needs_grad;
  const int out = push(std::move(y), ng, nullptr, "mul_elem");
  if (ng) {
    nodes_[out].back = [a, b, out](Tape& t) {
      const Mat& gy = t.nodes_[out].grad;
      if (t.nodes_[a].needs_grad) {
        Mat& ga = t.grad_ref(a);
        const Mat& bv2 = t.nodes_[b].value;
        for (size_t i = 0; i < ga.data.size(); ++i) ga.data[i] += gy.data[i] * bv2.data[i];
      }
      if (t.nodes_[b].needs_grad) {
        Mat& gb = t.grad_ref(b);
        const Mat& av2 = t.nodes_[a].value;
        for (size_t i = 0; i < gb.data.size(); ++i) gb.data[i] += gy.data[i] * av2.data[i];
      }
    };
  }
  return out;
}

int Tape::sum_all(int x) {
  const Mat& xv = nodes_[x].value;
  Mat y(1, 1);
  for (double v : xv.data) y(0, 0) += v;
  const bool ng = nodes_[x].needs_grad;
  const int out = push(std::move(y), ng, nullptr, "sum_all");
  if (ng) {
    nodes_[out].back = [x, out](Tape& t) {
      const double g = t.nodes_[out].grad(0, 0);
      Mat& gx = t.grad_ref(x);
      for (double& v : gx.data) v += g;
    };
  }
  return out;
}

int Tape::neighbor_sum(int x, const std::vector<std::pair<int, int>>& edges,
                       double self_weight) {
  const Mat& xv = nodes_[x].value;
  auto apply = [&edges, self_weight](const Mat& in) {
    Mat out(in.rows, in.cols);
    for (int i = 0; i < in.rows; ++i)
      for (int j = 0; j < in.cols; ++j) out(i, j) = self_weight * in(i, j);
    for (auto [u, v] : edges) {
      for (int j = 0; j < in.cols; ++j) {
        out(u, j) += in(v, j);
        out(v, j) += in(u, j);
      }
    }
    return out;
  };
  Mat y = apply(xv);
  const bool ng = nodes_[x].needs_grad;
  const int out = push(std::move(y), ng, nullptr, "neighbor_sum");
  if (ng) {
    // the aggregation operator is symmetric, so backward reuses it
    nodes_[out].back = [x, out, apply](Tape& t) {
      const Mat gx = apply(t.nodes_[out].grad);
      Mat& acc = t.grad_ref(x);
      for (size_t i = 0; i < acc.data.size(); ++i) acc.data[i] += gx.data[i];
    };
  }
  return out;
}

int Tape::mean_pool(int x, const std::vector<int>& segments, int num_segments) {
  const Mat& xv = nodes_[x].value;
  if (static_cast<int>(segments.size()) != xv.rows)
    throw ConfigError("mean_pool: segment vector length mismatch");
  std::vector<int> counts(num_segments, 0);
  for (int s : segments) {
    if (s < 0 || s >= num_segments) throw ConfigError("mean_pool: segment id out of range");
    ++counts[s];
  }
  for (int s = 0; s < num_segments; ++s)
    if (counts[s] == 0) throw Error("mean_pool: empty segment " + std::to_string(s));

  Mat y(num_segments, xv.cols);
  for (int i = 0; i < xv.rows; ++i)
    for (int j = 0; j < xv.cols; ++j) y(segments[i], j) += xv(i, j);
  for (int s = 0; s < num_segments; ++s)
    for (int j = 0; j < xv.cols; ++j) y(s, j) /= counts[s];

  const bool ng = nodes_[x].needs_grad;
  const int out = push(std::move(y), ng, nullptr, "mean_pool");
  if (ng) {
    nodes_[out].back = [x, out, segments, counts](Tape& t) {
      const Mat& gy = t.nodes_[out].grad;
      Mat& gx = t.grad_ref(x);
      for (int i = 0; i < gx.rows; ++i) {
        const int s = segments[i];
        for (int j = 0; j < gx.cols; ++j) gx(i, j) += gy(s, j) / counts[s];
      }
    };
  }
  return out;
}

int Tape::dropout(int x, double rate, Rng* rng, bool training) {
  const Mat& xv = nodes_[x].value;
  if (!training || rate == 0.0) {
    Mat y = xv;
    const bool ng = nodes_[x].needs_grad;
    const int out = push(std::move(y), ng, nullptr, "dropout");
    if (ng) {
      nodes_[out].back = [x, out](Tape& t) {
        const Mat& gy = t.nodes_[out].grad;
        Mat& gx = t.grad_ref(x);
        for (size_t i = 0; i < gx.data.size(); ++i) gx.data[i] += gy.data[i];
      };
    }
    return out;
  }
  if (rate < 0.0 || rate >= 1.0) throw ConfigError("dropout: rate must be in [0,1)");
  if (rng == nullptr) throw ConfigError("dropout: training mode needs an rng stream");
  const double keep = 1.0 - rate;
  const double scale = 1.0 / keep;
  std::vector<double> mask(xv.data.size());
  for (double& m : mask) m = (rng->next_double() < keep) ? scale : 0.0;
  Mat y = xv;
  for (size_t i = 0; i < y.data.size(); ++i) y.data[i] *= mask[i];
  const bool ng = nodes_[x].needs_grad;
  const int out = push(std::move(y), ng, nullptr, "dropout");
  if (ng) {
    nodes_[out].back = [x, out, mask = std::move(mask)](Tape& t) {
      const Mat& gy = t.nodes_[out].grad;
      Mat& gx = t.grad_ref(x);
      for (size_t i = 0; i < gx.data.size(); ++i) gx.data[i] += gy.data[i] * mask[i];
    };
  }
  return out;
}

int Tape::cross_entropy(int logits, const std::vector<int>& labels) {
  const Mat& lv = nodes_[logits].value;
  if (static_cast<int>(labels.size()) != lv.rows)
    throw ConfigError("cross_entropy: label count mismatch");
  for (int l : labels)
    if (l < 0 || l >= lv.cols)
      throw ConfigError("cross_entropy: label " + std::to_string(l) + " out of range");

  Mat softmax(lv.rows, lv.cols);
  double loss = 0.0;
  for (int i = 0; i < lv.rows; ++i) {
    double mx = lv(i, 0);
    for (int j = 1; j < lv.cols; ++j) mx = std::max(mx, lv(i, j));
    double denom = 0.0;
    for (int j = 0; j < lv.cols; ++j) denom += std::exp(lv(i, j) - mx);
    const double lse = mx + std::log(denom);
    for (int j = 0; j < lv.cols; ++j) softmax(i, j) = std::exp(lv(i, j) - lse);
    loss += lse - lv(i, labels[i]);
  }
  Mat y(1, 1);
  y(0, 0) = loss / lv.rows;

  const bool ng = nodes_[logits].needs_grad;
  const int out = push(std::move(y), ng, nullptr, "cross_entropy");
  if (ng) {
    nodes_[out].back = [logits, out, labels, softmax = std::move(softmax)](Tape& t) {
      const double g = t.nodes_[out].grad(0, 0);
      Mat& gl = t.grad_ref(logits);
      const double inv_n = 1.0 / gl.rows;
      for (int i = 0; i < gl.rows; ++i) {
        for (int j = 0; j < gl.cols; ++j) {
          const double ind = (j == labels[i]) ? 1.0 : 0.0;
          gl(i, j) += g * (softmax(i, j) - ind) * inv_n;
        }
      }
    };
  }
  return out;
}

void Tape::backward(int node) {
  const Mat& v = nodes_[node].value;
  if (v.rows != 1 || v.cols != 1) throw Error("backward: loss node is not a scalar");
  for (Node& n : nodes_) n.grad = Mat(n.value.rows, n.value.cols);
  nodes_[node].grad(0, 0) = 1.0;
  for (int i = static_cast<int>(nodes_.size()) - 1; i >= 0; --i) {
    if (nodes_[i].back && nodes_[i].needs_grad) nodes_[i].back(*this);
  }
}

}  // namespace qgb
