#include "qgb/gradcheck.hpp"

#include <algorithm>
#include <cmath>

namespace qgb {

FdReport finite_diff_check(const std::function<FdEval()>& pipeline, ParamStore& params,
                           double eps, int max_coords_per_tensor, Rng& rng) {
  FdReport report;
  for (const std::string& name : params.names()) {
    Mat& value = params.value(name);
    const Mat analytic = params.grad(name);

    std::vector<size_t> coords;
    const size_t n = value.data.size();
    if (n <= static_cast<size_t>(max_coords_per_tensor)) {
      coords.resize(n);
      for (size_t i = 0; i < n; ++i) coords[i] = i;
    } else {
      for (int i = 0; i < max_coords_per_tensor; ++i)
        coords.push_back(static_cast<size_t>(rng.next_below(n)));
    }

    for (size_t ci : coords) {
      const double x0 = value.data[ci];
      value.data[ci] = x0 + eps;
      const FdEval plus = pipeline();
      value.data[ci] = x0 - eps;
      const FdEval minus = pipeline();
      value.data[ci] = x0;

      if (plus.relu_pattern != minus.relu_pattern) {
        ++report.skipped;
        continue;
      }
      const double fd = (plus.loss - minus.loss) / (2.0 * eps);
      const double g = analytic.data[ci];
      const double rel =
          std::fabs(fd - g) / std::max({1.0, std::fabs(fd), std::fabs(g)});
      report.max_rel_err = std::max(report.max_rel_err, rel);
      ++report.checked;
    }
  }
  return report;
}

}  // namespace qgb
