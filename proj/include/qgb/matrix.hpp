#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qgb {

using cplx = std::complex<double>;

// Dense row-major double matrix. The only array type used across the
// project; everything runs in 64-bit arithmetic.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}

  static Mat identity(int n);

  double& operator()(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  double operator()(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

  int64_t size() const { return static_cast<int64_t>(rows) * cols; }
  bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && data == o.data; }
};

// Dense row-major complex matrix.
struct CMat {
  int rows = 0;
  int cols = 0;
  std::vector<cplx> data;

  CMat() = default;
  CMat(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, cplx(0, 0)) {}

  static CMat identity(int n);

  cplx& operator()(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  cplx operator()(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

  int64_t size() const { return static_cast<int64_t>(rows) * cols; }
};

Mat matmul(const Mat& a, const Mat& b);     // a[r,k] * b[k,c]
Mat matmul_nt(const Mat& a, const Mat& b);  // a[r,k] * b[c,k]^T
Mat matmul_tn(const Mat& a, const Mat& b);  // a[k,r]^T * b[k,c]
Mat transpose(const Mat& a);

double max_abs(const Mat& a);
double max_abs_diff(const Mat& a, const Mat& b);
bool all_finite(const Mat& a);

CMat cmatmul(const CMat& a, const CMat& b);
CMat adjoint(const CMat& a);
double cmax_abs(const CMat& a);
double cmax_abs_diff(const CMat& a, const CMat& b);

}  // namespace qgb
