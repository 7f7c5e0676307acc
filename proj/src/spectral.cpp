#include "qgb/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qgb/error.hpp"
#include "qgb/graph.hpp"

namespace qgb {

Mat normalized_laplacian(int num_nodes, const std::vector<std::pair<int, int>>& edges) {
  const std::vector<int> deg = node_degrees(num_nodes, edges);
  std::vector<double> dinv(num_nodes, 0.0);
  for (int v = 0; v < num_nodes; ++v)
    if (deg[v] > 0) dinv[v] = 1.0 / std::sqrt(static_cast<double>(deg[v]));

  Mat l(num_nodes, num_nodes);
  for (int v = 0; v < num_nodes; ++v) l(v, v) = 1.0;
  for (auto [u, v] : edges) {
    const double w = -dinv[u] * dinv[v];
    l(u, v) = w;
    l(v, u) = w;
  }
  return l;
}

namespace {

double offdiag_fro(const Mat& a) {
  double s = 0.0;
  for (int p = 0; p < a.rows; ++p)
    for (int q = p + 1; q < a.cols; ++q) s += a(p, q) * a(p, q);
  return std::sqrt(2.0 * s);
}

double fro(const Mat& a) {
  double s = 0.0;
  for (double v : a.data) s += v * v;
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition hermitian_eig(const Mat& sym) {
  if (sym.rows != sym.cols) throw ConfigError("hermitian_eig: matrix not square");
  const int n = sym.rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (sym(i, j) != sym(j, i)) throw ConfigError("hermitian_eig: matrix not symmetric");

  Mat a = sym;
  Mat v = Mat::identity(n);
  const double tol = 1e-13 * std::max(1.0, fro(a));
  constexpr int kMaxSweeps = 100;

  bool converged = (n <= 1) || offdiag_fro(a) <= tol;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::fabs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        const double app = a(p, p), aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(p, k) = a(k, p);
          a(k, q) = s * akp + c * akq;
          a(q, k) = a(k, q);
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    converged = offdiag_fro(a) <= tol;
  }
  if (!converged) throw NumericError("hermitian_eig: Jacobi did not converge within 100 sweeps");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i) < a(j, j); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Mat(n, n);
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]);
    for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

CMat evolution_operator(const Mat& sym, double t) {
  const EigenDecomposition eig = hermitian_eig(sym);
  const int n = sym.rows;
  std::vector<cplx> phase(n);
  for (int m = 0; m < n; ++m)
    phase[m] = std::exp(cplx(0.0, -eig.eigenvalues[m] * t));

  CMat u(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cplx s(0, 0);
      for (int m = 0; m < n; ++m)
        s += eig.eigenvectors(i, m) * phase[m] * eig.eigenvectors(j, m);
      u(i, j) = s;
    }
  }
  return u;
}

Mat laplacian_pe(int num_nodes, const std::vector<std::pair<int, int>>& edges, int k) {
  if (k < 1) throw ConfigError("laplacian_pe: k must be >= 1");
  const EigenDecomposition eig = hermitian_eig(normalized_laplacian(num_nodes, edges));

  Mat pe(num_nodes, k);
  const int avail = std::min(k, num_nodes - 1);
  for (int col = 0; col < avail; ++col) {
    const int src = col + 1;  // skip the first eigenvector
    int best = 0;
    for (int i = 1; i < num_nodes; ++i) {
      if (std::fabs(eig.eigenvectors(i, src)) > std::fabs(eig.eigenvectors(best, src))) best = i;
    }
    const double sign = eig.eigenvectors(best, src) < 0.0 ? -1.0 : 1.0;
    for (int i = 0; i < num_nodes; ++i) pe(i, col) = sign * eig.eigenvectors(i, src);
  }
  return pe;
}

}  // namespace qgb
