#include "qgb/embed.hpp"

#include "qgb/error.hpp"
#include "qgb/rng.hpp"

namespace qgb {

Mat concat_base_input(const Mat& x, const Mat& pe) {
  if (x.rows != pe.rows) throw ConfigError("concat_base_input: row count mismatch");
  Mat u(x.rows, x.cols + pe.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) u(i, j) = x(i, j);
    for (int j = 0; j < pe.cols; ++j) u(i, x.cols + j) = pe(i, j);
  }
  return u;
}

FixedProjection init_fixed_projection(uint64_t seed, int d, int d_u) {
  if (d < 1 || d_u < 1) throw ConfigError("init_fixed_projection: bad dimensions");
  FixedProjection p;
  p.seed = seed;
  p.w = Mat(d, d_u);
  Rng rng(mix(seed, "fixed-proj"));
  const double var = 1.0 / static_cast<double>(d_u);
  for (double& v : p.w.data) v = rng.next_gaussian(0.0, var);
  return p;
}

Mat fixed_embed(const Mat& base_input, const FixedProjection& proj) {
  if (base_input.cols != proj.w.cols) throw ConfigError("fixed_embed: width mismatch");
  return matmul_nt(base_input, proj.w);
}

void init_mlp_embed(ParamStore& store, int d, int d_u, uint64_t seed) {
  init_gaussian(store, "embed/w1", d, d_u, seed, 1.0 / d_u);
  init_zeros(store, "embed/b1", 1, d);
  init_gaussian(store, "embed/w2", d, d, seed, 1.0 / d);
  init_zeros(store, "embed/b2", 1, d);
}

int mlp_embed_forward(Tape& tape, int base_input, BoundParams& params) {
  const int h = tape.relu(
      tape.add_row(tape.matmul_nt(base_input, params["embed/w1"]), params["embed/b1"]));
  return tape.add_row(tape.matmul_nt(h, params["embed/w2"]), params["embed/b2"]);
}

Mat frozen_fuse(const Mat& descriptor, int d, uint64_t seed, const std::string& method) {
  if (descriptor.cols == d) return descriptor;
  Rng rng(mix(seed, "frozen-proj:" + method));
  Mat p(d, descriptor.cols);
  const double var = 1.0 / static_cast<double>(descriptor.cols);
  for (double& v : p.data) v = rng.next_gaussian(0.0, var);
  return matmul_nt(descriptor, p);
}

void init_trainable_fuse(ParamStore& store, int d, int d_u, int d_s, uint64_t seed) {
  init_gaussian(store, "embed/fuse_w", d, d_u + d_s, seed, 1.0 / (d_u + d_s));
  init_zeros(store, "embed/fuse_b", 1, d);
}

int trainable_fuse_forward(Tape& tape, int base_input, int descriptor, BoundParams& params) {
  const int joined = tape.concat_cols(base_input, descriptor);
  return tape.add_row(tape.matmul_nt(joined, params["embed/fuse_w"]), params["embed/fuse_b"]);
}

}  // namespace qgb
