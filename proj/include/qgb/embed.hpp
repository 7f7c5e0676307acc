#pragma once

#include <cstdint>
#include <string>

#include "qgb/matrix.hpp"
#include "qgb/params.hpp"
#include "qgb/tape.hpp"

namespace qgb {

// Row-wise [x || pe]; throws on row-count mismatch.
Mat concat_base_input(const Mat& x, const Mat& pe);

struct FixedProjection {
  Mat w;  // d x d_u
  uint64_t seed = 0;
};

// Entries i.i.d. Gaussian(0, 1/d_u) from the stream mix(seed, "fixed-proj").
FixedProjection init_fixed_projection(uint64_t seed, int d, int d_u);

// z = u * W^T; no trainable parameters.
Mat fixed_embed(const Mat& base_input, const FixedProjection& proj);

// Registers embed/w1 b1 w2 b2 for the two-layer trainable embedder
// z = w2 * relu(w1 u + b1) + b2.
void init_mlp_embed(ParamStore& store, int d, int d_u, uint64_t seed);
int mlp_embed_forward(Tape& tape, int base_input, BoundParams& params);

// Frozen projection/fusion: identity when the descriptor already has width
// d, otherwise a fixed Gaussian(0, 1/d_s) map from the stream
// mix(seed, "frozen-proj:" + method).
Mat frozen_fuse(const Mat& descriptor, int d, uint64_t seed, const std::string& method);

// Trainable fusion: affine map of [u || s] to d. Registers embed/fuse_w and
// embed/fuse_b.
void init_trainable_fuse(ParamStore& store, int d, int d_u, int d_s, uint64_t seed);
int trainable_fuse_forward(Tape& tape, int base_input, int descriptor, BoundParams& params);

}  // namespace qgb
