#include "qgb/matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "qgb/error.hpp"

namespace qgb {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMat CMat::identity(int n) {
  CMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = cplx(1, 0);
  return m;
}

static void require(bool ok, const char* what) {
  if (!ok) throw ConfigError(std::string("matrix shape mismatch in ") + what);
}

Mat matmul(const Mat& a, const Mat& b) {
  require(a.cols == b.rows, "matmul");
  Mat out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int k = 0; k < a.cols; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Mat matmul_nt(const Mat& a, const Mat& b) {
  require(a.cols == b.cols, "matmul_nt");
  Mat out(a.rows, b.rows);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < b.rows; ++j) {
      double s = 0.0;
      for (int k = 0; k < a.cols; ++k) s += a(i, k) * b(j, k);
      out(i, j) = s;
    }
  }
  return out;
}

Mat matmul_tn(const Mat& a, const Mat& b) {
  require(a.rows == b.rows, "matmul_tn");
  Mat out(a.cols, b.cols);
  for (int k = 0; k < a.rows; ++k) {
    for (int i = 0; i < a.cols; ++i) {
      const double aki = a(k, i);
      if (aki == 0.0) continue;
      for (int j = 0; j < b.cols; ++j) out(i, j) += aki * b(k, j);
    }
  }
  return out;
}

Mat transpose(const Mat& a) {
  Mat out(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out(j, i) = a(i, j);
  return out;
}

double max_abs(const Mat& a) {
  double m = 0.0;
  for (double v : a.data) m = std::max(m, std::fabs(v));
  return m;
}

double max_abs_diff(const Mat& a, const Mat& b) {
  if (!a.same_shape(b)) throw ConfigError("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (size_t i = 0; i < a.data.size(); ++i) m = std::max(m, std::fabs(a.data[i] - b.data[i]));
  return m;
}

bool all_finite(const Mat& a) {
  for (double v : a.data)
    if (!std::isfinite(v)) return false;
  return true;
}

CMat cmatmul(const CMat& a, const CMat& b) {
  require(a.cols == b.rows, "cmatmul");
  CMat out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int k = 0; k < a.cols; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0, 0)) continue;
      for (int j = 0; j < b.cols; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

CMat adjoint(const CMat& a) {
  CMat out(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

double cmax_abs(const CMat& a) {
  double m = 0.0;
  for (const cplx& v : a.data) m = std::max(m, std::abs(v));
  return m;
}

double cmax_abs_diff(const CMat& a, const CMat& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw ConfigError("cmax_abs_diff: shape mismatch");
  double m = 0.0;
  for (size_t i = 0; i < a.data.size(); ++i) m = std::max(m, std::abs(a.data[i] - b.data[i]));
  return m;
}

}  // namespace qgb
