#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qgb/config.hpp"
#include "qgb/gin.hpp"
#include "qgb/gradcheck.hpp"
#include "qgb/model.hpp"
#include "test_helpers.hpp"

using namespace qgb;

namespace {

ExperimentConfig small_cfg() {
  ExperimentConfig cfg;
  cfg.seed = 7;
  cfg.embed_dim = 32;
  return cfg;
}

}  // namespace

TEST_CASE("gin layer") {
  SUBCASE("single node without edges is the plain MLP") {
    ParamStore store;
    init_affine_pair(store, "gin0", 4, 3, 4, 1);
    Tape tape;
    BoundParams bp(tape, store, true);
    Rng rng(2);
    Mat h(1, 3);
    for (auto& v : h.data) v = rng.next_gaussian();
    const int out = gin_layer(tape, tape.leaf(h), {}, bp, "gin0", 0.0);

    // by hand: relu(w2 relu(w1 h + b1) + b2)
    const Mat a1 = oracle::naive_matmul_nt(h, store.value("gin0/w1"));
    Mat r1 = a1;
    for (auto& v : r1.data) v = std::max(0.0, v);
    Mat want = oracle::naive_matmul_nt(r1, store.value("gin0/w2"));
    for (auto& v : want.data) v = std::max(0.0, v);
    CHECK(max_abs_diff(tape.value(out), want) <= 1e-12);
  }
  SUBCASE("triangle with equal rows aggregates to 3c before the MLP") {
    Tape tape;
    Mat h(3, 2);
    for (auto& v : h.data) v = 1.0;
    const int m = tape.neighbor_sum(tape.leaf(h), {{0, 1}, {0, 2}, {1, 2}}, 1.0);
    for (double v : tape.value(m).data) CHECK(v == 3.0);
  }
  SUBCASE("permutation equivariance") {
    ParamStore store;
    init_affine_pair(store, "gin0", 8, 4, 8, 3);
    Rng rng(5);
    Mat h(6, 4);
    for (auto& v : h.data) v = rng.next_gaussian();
    const std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}};
    auto perm = [](int v) { return (v + 2) % 6; };
    Mat hp(6, 4);
    std::vector<std::pair<int, int>> edges_p;
    for (int v = 0; v < 6; ++v)
      for (int j = 0; j < 4; ++j) hp(perm(v), j) = h(v, j);
    for (auto [u, v] : edges) edges_p.emplace_back(perm(u), perm(v));

    Tape t1, t2;
    BoundParams b1(t1, store, false), b2(t2, store, false);
    const int o1 = gin_layer(t1, t1.leaf(h), edges, b1, "gin0", 0.0);
    const int o2 = gin_layer(t2, t2.leaf(hp), edges_p, b2, "gin0", 0.0);
    for (int v = 0; v < 6; ++v)
      for (int j = 0; j < 8; ++j)
        CHECK(t1.value(o1)(v, j) == doctest::Approx(t2.value(o2)(perm(v), j)).epsilon(1e-12));
  }
}

TEST_CASE("model parameter registration counts per method") {
  const Dataset ds = testutil::toy_dataset(4);
  const ExperimentConfig cfg = small_cfg();
  // backbone+head: 3 GIN layers * 4 tensors + head 4 tensors = 16
  CHECK(Model(ds, Method::kFixed, cfg).params().count() == 16);
  CHECK(Model(ds, Method::kQuop, cfg).params().count() == 16);
  CHECK(Model(ds, Method::kQwalkVec, cfg).params().count() == 16);
  CHECK(Model(ds, Method::kQpe, cfg).params().count() == 16);
  CHECK(Model(ds, Method::kMlp, cfg).params().count() == 20);
  CHECK(Model(ds, Method::kQuopTrainable, cfg).params().count() == 18);
  CHECK(Model(ds, Method::kQwalkVecTrainable, cfg).params().count() == 18);
  CHECK(Model(ds, Method::kAngleVqc, cfg).params().count() == 19);
}

TEST_CASE("model forward invariances") {
  const ExperimentConfig cfg = small_cfg();
  SUBCASE("deterministic logits without dropout") {
    const Dataset ds = testutil::toy_dataset(3);
    Model m1(ds, Method::kMlp, cfg), m2(ds, Method::kMlp, cfg);
    const std::vector<int> ids = {0, 1, 2, 3};
    CHECK(m1.predict(ids) == m2.predict(ids));
  }
  SUBCASE("shuffling node rows (with consistent edges) leaves pooled logits unchanged") {
    ParamStore store;
    init_affine_pair(store, "gin0", 8, 4, 8, 3);
    init_affine_pair(store, "head", 2, 8, 8, 3);
    Rng rng(31);
    Mat h(6, 4);
    for (auto& v : h.data) v = rng.next_gaussian();
    const std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {4, 5}};
    auto perm = [](int v) { return (5 * v + 1) % 6; };
    Mat hp(6, 4);
    std::vector<std::pair<int, int>> edges_p;
    for (int v = 0; v < 6; ++v)
      for (int j = 0; j < 4; ++j) hp(perm(v), j) = h(v, j);
    for (auto [u, v] : edges) edges_p.emplace_back(perm(u), perm(v));

    auto logits_of = [&](const Mat& feat, const std::vector<std::pair<int, int>>& e) {
      Tape tape;
      BoundParams bp(tape, store, false);
      const int g1 = gin_layer(tape, tape.leaf(feat), e, bp, "gin0", 0.0);
      const int pooled = tape.mean_pool(g1, std::vector<int>(6, 0), 1);
      return tape.value(classifier_head(tape, pooled, bp, 0.0, false, nullptr));
    };
    const Mat l1 = logits_of(h, edges);
    const Mat l2 = logits_of(hp, edges_p);
    CHECK(max_abs_diff(l1, l2) <= 1e-10);
  }
}

TEST_CASE("full pipeline gradients match finite differences") {
  // 5-graph batch through MLP embed -> 3x GIN -> pool -> head -> CE,
  // dropout disabled so the training forward equals the eval forward.
  Dataset ds = testutil::toy_dataset(3);
  ExperimentConfig cfg = small_cfg();
  cfg.gin.dropout = 0.0;
  Model model(ds, Method::kMlp, cfg);
  const std::vector<int> batch = {0, 1, 2, 3, 4};

  Rng dummy(1);
  model.train_step(batch, dummy);  // gradients stay in the store (no adam step)

  auto pipeline = [&]() { return model.eval_fd(batch); };
  Rng coord_rng(3);
  const FdReport r = finite_diff_check(pipeline, model.params(), 1e-5, 6, coord_rng);
  CHECK(r.checked > 50);
  CHECK(r.max_rel_err <= 1e-4);
}

TEST_CASE("angle-vqc pipeline gradients (parameter shift chained) match FD") {
  Dataset ds = testutil::toy_dataset(2);
  ExperimentConfig cfg = small_cfg();
  cfg.gin.dropout = 0.0;
  cfg.vqc.qubits = 3;
  cfg.vqc.layers = 1;
  Model model(ds, Method::kAngleVqc, cfg);
  const std::vector<int> batch = {0, 1, 2};

  Rng dummy(1);
  model.train_step(batch, dummy);

  auto pipeline = [&]() { return model.eval_fd(batch); };
  Rng coord_rng(4);
  const FdReport r = finite_diff_check(pipeline, model.params(), 1e-5, 4, coord_rng);
  CHECK(r.checked > 20);
  CHECK(r.max_rel_err <= 1e-4);
}
