#pragma once

#include <functional>

#include "qgb/params.hpp"
#include "qgb/rng.hpp"

namespace qgb {

// One deterministic evaluation of the pipeline under the current parameter
// values. relu_margin is the tape's min |relu input| (1e300 when the
// pipeline has no relu); relu_pattern fingerprints the activation states.
struct FdEval {
  double loss = 0.0;
  double relu_margin = 1e300;
  uint64_t relu_pattern = 0;
};

struct FdReport {
  double max_rel_err = 0.0;
  int checked = 0;
  int skipped = 0;
};

// Central finite differences against the analytic gradients already stored
// in `params` (run forward + backward once before calling). Checks up to
// max_coords_per_tensor coordinates per tensor (all of them when the tensor
// is small enough, sampled through `rng` otherwise).
//
// Kink guard: a coordinate is skipped, not failed, when the +eps and -eps
// evaluations disagree on any relu activation state, i.e. some
// |pre-activation| sits inside the ~10*eps window around the kink where the
// central difference stops being quadratic.
// Relative error per coordinate: |fd - g| / max(1, |fd|, |g|).
FdReport finite_diff_check(const std::function<FdEval()>& pipeline, ParamStore& params,
                           double eps, int max_coords_per_tensor, Rng& rng);

}  // namespace qgb
