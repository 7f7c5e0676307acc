#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qgb/params.hpp"
#include "qgb/tape.hpp"

namespace qgb {

struct GinConfig {
  int layers = 3;
  int hidden = 64;
  double dropout = 0.2;
  double eps = 0.0;  // fixed, not trainable
};

// Registers <prefix>/w1 b1 w2 b2 with Gaussian(0, 1/fan_in) weights and zero
// biases (streams derive from mix(seed, "init:<name>")).
void init_affine_pair(ParamStore& store, const std::string& prefix, int out_dim, int in_dim,
                      int hidden, uint64_t seed);

// m_v = (1+eps) h_v + sum_{u in N(v)} h_u, then the layer MLP
// relu(w2 * relu(w1 m + b1) + b2).
int gin_layer(Tape& tape, int h, const std::vector<std::pair<int, int>>& edges,
              BoundParams& params, const std::string& prefix, double eps);

// affine -> relu -> dropout -> affine. Dropout applies only when training.
int classifier_head(Tape& tape, int pooled, BoundParams& params, double dropout_rate,
                    bool training, Rng* dropout_rng);

}  // namespace qgb
