// Independent reference implementations used only by tests. Everything here
// deliberately avoids the library's code paths: Taylor series instead of
// eigendecomposition, explicit dense operators instead of in-place updates,
// plain loops instead of the tape.
#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "qgb/graph.hpp"
#include "qgb/matrix.hpp"

namespace oracle {

using qgb::CMat;
using qgb::cplx;
using qgb::Mat;

// exp(-i H t) by scaling-and-squaring Taylor series.
inline CMat taylor_expm(const Mat& h, double t) {
  const int n = h.rows;
  CMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cplx(0.0, -h(i, j) * t);

  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += std::abs(m(i, j));
    norm = std::max(norm, row);
  }
  int squarings = 0;
  while (norm > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  const double scale = std::pow(2.0, -squarings);
  for (auto& v : m.data) v *= scale;

  CMat result = CMat::identity(n);
  CMat term = CMat::identity(n);
  for (int k = 1; k <= 60; ++k) {
    term = qgb::cmatmul(term, m);
    for (auto& v : term.data) v /= static_cast<double>(k);
    double tmax = 0.0;
    for (const auto& v : term.data) tmax = std::max(tmax, std::abs(v));
    for (size_t i = 0; i < result.data.size(); ++i) result.data[i] += term.data[i];
    if (tmax < 1e-20) break;
  }
  for (int s = 0; s < squarings; ++s) result = qgb::cmatmul(result, result);
  return result;
}

inline Mat naive_matmul_nt(const Mat& a, const Mat& b) {
  Mat out(a.rows, b.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.rows; ++j) {
      double s = 0.0;
      for (int k = 0; k < a.cols; ++k) s += a(i, k) * b(j, k);
      out(i, j) = s;
    }
  return out;
}

// Hop distances by repeated relaxation over an explicit adjacency matrix.
inline std::vector<int> bfs_distances(int n, const std::vector<std::pair<int, int>>& edges,
                                      int source) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> dist(n, -1);
  dist[source] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < n; ++u) {
      if (dist[u] < 0) continue;
      for (int w : adj[u]) {
        if (dist[w] < 0 || dist[w] > dist[u] + 1) {
          dist[w] = dist[u] + 1;
          changed = true;
        }
      }
    }
  }
  return dist;
}

// --- dense gate-matrix circuit oracle -------------------------------------

inline CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows * b.rows, a.cols * b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      for (int k = 0; k < b.rows; ++k)
        for (int l = 0; l < b.cols; ++l)
          out(i * b.rows + k, j * b.cols + l) = a(i, j) * b(k, l);
  return out;
}

// Embeds a 2x2 gate on qubit j (qubit 0 = least significant bit).
inline CMat single_qubit_full(const CMat& gate, int qubit, int num_qubits) {
  CMat full = CMat::identity(1);
  for (int pos = num_qubits - 1; pos >= 0; --pos)
    full = kron(full, pos == qubit ? gate : CMat::identity(2));
  return full;
}

inline CMat ry_gate(double a) {
  CMat g(2, 2);
  g(0, 0) = std::cos(a / 2);
  g(0, 1) = -std::sin(a / 2);
  g(1, 0) = std::sin(a / 2);
  g(1, 1) = std::cos(a / 2);
  return g;
}

inline CMat rz_gate(double a) {
  CMat g(2, 2);
  g(0, 0) = std::exp(cplx(0, -a / 2));
  g(1, 1) = std::exp(cplx(0, a / 2));
  return g;
}

inline CMat cnot_full(int control, int target, int num_qubits) {
  const int dim = 1 << num_qubits;
  CMat full(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const int j = (i & (1 << control)) ? (i ^ (1 << target)) : i;
    full(j, i) = cplx(1, 0);
  }
  return full;
}

// Builds the whole circuit unitary gate by gate and measures every Z_k.
// theta layout matches VqcCircuit: Mat(layers*q, 2).
inline std::vector<double> dense_vqc_descriptor(const std::vector<double>& angles,
                                                const Mat& theta, int q, int layers) {
  const int dim = 1 << q;
  CMat u = CMat::identity(dim);
  auto apply = [&](const CMat& g) { u = qgb::cmatmul(g, u); };
  for (int j = 0; j < q; ++j) apply(single_qubit_full(ry_gate(angles[j]), j, q));
  for (int l = 0; l < layers; ++l) {
    for (int j = 0; j < q; ++j)
      apply(single_qubit_full(ry_gate(theta(l * q + j, 0)), j, q));
    for (int j = 0; j < q; ++j)
      apply(single_qubit_full(rz_gate(theta(l * q + j, 1)), j, q));
    if (q >= 2)
      for (int j = 0; j < q; ++j) apply(cnot_full(j, (j + 1) % q, q));
  }
  std::vector<cplx> psi(dim, cplx(0, 0));
  for (int i = 0; i < dim; ++i) psi[i] = u(i, 0);
  std::vector<double> s(q, 0.0);
  for (int k = 0; k < q; ++k) {
    double e = 0.0;
    for (int i = 0; i < dim; ++i) e += std::norm(psi[i]) * ((i >> k) & 1 ? -1.0 : 1.0);
    s[k] = e;
  }
  return s;
}

// --- dense coined-walk oracle ----------------------------------------------

struct DenseWalk {
  std::vector<std::pair<int, int>> arcs;  // (tail, head)
  Mat coin;                               // 2|E| x 2|E|
  Mat shift;
};

inline DenseWalk dense_walk_operators(const qgb::Graph& g, double w_p, double w_q,
                                      bool degree_weighted) {
  DenseWalk dw;
  for (auto [u, v] : g.edges) {
    dw.arcs.emplace_back(u, v);
    dw.arcs.emplace_back(v, u);
  }
  const int m = static_cast<int>(dw.arcs.size());
  std::vector<int> deg(g.num_nodes, 0);
  for (auto [u, v] : g.edges) {
    ++deg[u];
    ++deg[v];
  }

  dw.coin = Mat(m, m);
  for (int x = 0; x < g.num_nodes; ++x) {
    std::vector<int> mine;
    for (int a = 0; a < m; ++a)
      if (dw.arcs[a].first == x) mine.push_back(a);
    if (mine.empty()) continue;
    std::vector<double> w(mine.size());
    double norm2 = 0.0;
    for (size_t i = 0; i < mine.size(); ++i) {
      double alpha = 1.0;
      if (degree_weighted)
        alpha = deg[dw.arcs[mine[i]].second] <= deg[x] ? w_p : w_q;
      w[i] = std::sqrt(alpha);
      norm2 += alpha;
    }
    for (size_t i = 0; i < mine.size(); ++i)
      for (size_t j = 0; j < mine.size(); ++j)
        dw.coin(mine[i], mine[j]) =
            2.0 * w[i] * w[j] / norm2 - (i == j ? 1.0 : 0.0);
  }

  dw.shift = Mat(m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (dw.arcs[b].first == dw.arcs[a].second && dw.arcs[b].second == dw.arcs[a].first) {
        dw.shift(b, a) = 1.0;
        break;
      }
    }
  }
  return dw;
}

// Node-probability time series via explicit matrix-vector products.
inline Mat dense_walk_descriptor(const qgb::Graph& g, int steps, double w_p, double w_q,
                                 bool degree_weighted) {
  const DenseWalk dw = dense_walk_operators(g, w_p, w_q, degree_weighted);
  const int m = static_cast<int>(dw.arcs.size());
  Mat desc(g.num_nodes, steps);
  if (m == 0) return desc;
  std::vector<double> state(m, 1.0 / std::sqrt(static_cast<double>(m)));
  const Mat step_op = qgb::matmul(dw.shift, dw.coin);
  for (int t = 0; t < steps; ++t) {
    std::vector<double> next(m, 0.0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) next[i] += step_op(i, j) * state[j];
    state = next;
    for (int a = 0; a < m; ++a) desc(dw.arcs[a].second, t) += state[a] * state[a];
  }
  return desc;
}

// --- reference Adam ----------------------------------------------------------

struct RefAdam {
  double lr, beta1, beta2, eps;
  std::vector<double> m, v;
  long step = 0;

  explicit RefAdam(size_t n, double lr_ = 1e-3, double b1 = 0.9, double b2 = 0.999,
                   double e = 1e-8)
      : lr(lr_), beta1(b1), beta2(b2), eps(e), m(n, 0.0), v(n, 0.0) {}

  void update(std::vector<double>& x, const std::vector<double>& g) {
    ++step;
    for (size_t i = 0; i < x.size(); ++i) {
      m[i] = beta1 * m[i] + (1 - beta1) * g[i];
      v[i] = beta2 * v[i] + (1 - beta2) * g[i] * g[i];
      const double mhat = m[i] / (1 - std::pow(beta1, step));
      const double vhat = v[i] / (1 - std::pow(beta2, step));
      x[i] -= lr * mhat / (std::sqrt(vhat) + eps);
    }
  }
};

// --- confusion-matrix metrics oracle -----------------------------------------

struct RefMetrics {
  double accuracy, macro_f1, macro_precision, macro_recall;
};

inline RefMetrics brute_force_metrics(const std::vector<int>& pred,
                                      const std::vector<int>& truth, int classes) {
  std::vector<std::vector<long>> cm(classes, std::vector<long>(classes, 0));
  for (size_t i = 0; i < truth.size(); ++i) cm[truth[i]][pred[i]] += 1;
  long correct = 0;
  for (int c = 0; c < classes; ++c) correct += cm[c][c];
  RefMetrics r{};
  r.accuracy = truth.empty() ? 0.0 : double(correct) / truth.size();
  double sp = 0, sr = 0, sf = 0;
  for (int c = 0; c < classes; ++c) {
    long tp = cm[c][c], fp = 0, fn = 0;
    for (int o = 0; o < classes; ++o) {
      if (o == c) continue;
      fp += cm[o][c];
      fn += cm[c][o];
    }
    const double p = (tp + fp) ? double(tp) / (tp + fp) : 0.0;
    const double rr = (tp + fn) ? double(tp) / (tp + fn) : 0.0;
    const double f = (p + rr) > 0 ? 2 * p * rr / (p + rr) : 0.0;
    sp += p;
    sr += rr;
    sf += f;
  }
  r.macro_precision = sp / classes;
  r.macro_recall = sr / classes;
  r.macro_f1 = sf / classes;
  return r;
}

}  // namespace oracle
