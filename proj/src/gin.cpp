#include "qgb/gin.hpp"

namespace qgb {

void init_affine_pair(ParamStore& store, const std::string& prefix, int out_dim, int in_dim,
                      int hidden, uint64_t seed) {
  init_gaussian(store, prefix + "/w1", hidden, in_dim, seed, 1.0 / in_dim);
  init_zeros(store, prefix + "/b1", 1, hidden);
  init_gaussian(store, prefix + "/w2", out_dim, hidden, seed, 1.0 / hidden);
  init_zeros(store, prefix + "/b2", 1, out_dim);
}

int gin_layer(Tape& tape, int h, const std::vector<std::pair<int, int>>& edges,
              BoundParams& params, const std::string& prefix, double eps) {
  const int m = tape.neighbor_sum(h, edges, 1.0 + eps);
  const int a1 = tape.relu(
      tape.add_row(tape.matmul_nt(m, params[prefix + "/w1"]), params[prefix + "/b1"]));
  return tape.relu(
      tape.add_row(tape.matmul_nt(a1, params[prefix + "/w2"]), params[prefix + "/b2"]));
}

int classifier_head(Tape& tape, int pooled, BoundParams& params, double dropout_rate,
                    bool training, Rng* dropout_rng) {
  int a = tape.relu(
      tape.add_row(tape.matmul_nt(pooled, params["head/w1"]), params["head/b1"]));
  a = tape.dropout(a, dropout_rate, dropout_rng, training);
  return tape.add_row(tape.matmul_nt(a, params["head/w2"]), params["head/b2"]);
}

}  // namespace qgb
