#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qgb/fsio.hpp"
#include "qgb/metrics.hpp"
#include "qgb/trainer.hpp"
#include "test_helpers.hpp"

using namespace qgb;

TEST_CASE("metrics") {
  SUBCASE("perfect predictions score 1 everywhere") {
    const Metrics m = compute_metrics({0, 1, 2, 1}, {0, 1, 2, 1}, 3);
    CHECK(m.accuracy == 1.0);
    CHECK(m.macro_f1 == 1.0);
    CHECK(m.macro_precision == 1.0);
    CHECK(m.macro_recall == 1.0);
  }
  SUBCASE("balanced binary, all predicted class 0") {
    const Metrics m = compute_metrics({0, 0, 0, 0}, {0, 0, 1, 1}, 2);
    CHECK(m.accuracy == doctest::Approx(0.5));
    CHECK(m.macro_f1 == doctest::Approx(1.0 / 3.0));
  }
  SUBCASE("macro averaging counts classes absent from the labels") {
    // class 2 never appears: its precision/recall/F1 terms are 0
    const Metrics m = compute_metrics({0, 1}, {0, 1}, 3);
    CHECK(m.macro_f1 == doctest::Approx(2.0 / 3.0));
    CHECK(m.macro_precision == doctest::Approx(2.0 / 3.0));
  }
  SUBCASE("random cases match the brute-force oracle exactly") {
    Rng rng(14);
    for (int c : {2, 3, 6}) {
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> pred(50), truth(50);
        for (int i = 0; i < 50; ++i) {
          pred[i] = int(rng.next_below(c));
          truth[i] = int(rng.next_below(c));
        }
        const Metrics m = compute_metrics(pred, truth, c);
        const oracle::RefMetrics want = oracle::brute_force_metrics(pred, truth, c);
        CHECK(m.accuracy == want.accuracy);
        CHECK(m.macro_f1 == want.macro_f1);
        CHECK(m.macro_precision == want.macro_precision);
        CHECK(m.macro_recall == want.macro_recall);
      }
    }
  }
  SUBCASE("accuracy equals trace over total") {
    const Metrics m = compute_metrics({0, 1, 0}, {0, 0, 1}, 2);
    CHECK(m.accuracy == doctest::Approx((m.confusion_at(0, 0) + m.confusion_at(1, 1)) / 3.0));
  }
}

TEST_CASE("early stopper") {
  SUBCASE("monotone-degrading run stops after patience epochs past the best") {
    EarlyStopper s(7);
    CHECK(s.observe(0.9));  // epoch 1 is the best
    for (int epoch = 2; epoch <= 7; ++epoch) {
      CHECK_FALSE(s.observe(0.9 - 0.05 * epoch));
      CHECK_FALSE(s.should_stop());
    }
    CHECK_FALSE(s.observe(0.1));  // epoch 8, seventh failure
    CHECK(s.should_stop());
    CHECK(s.best_epoch() == 1);
  }
  SUBCASE("equal scores do not reset patience") {
    EarlyStopper s(2);
    s.observe(0.5);
    CHECK_FALSE(s.observe(0.5));
    CHECK_FALSE(s.should_stop());
    CHECK_FALSE(s.observe(0.5));
    CHECK(s.should_stop());
    CHECK(s.best_epoch() == 1);
  }
  SUBCASE("late improvement resets the counter") {
    EarlyStopper s(3);
    s.observe(0.5);
    s.observe(0.4);
    s.observe(0.45);
    CHECK(s.observe(0.6));
    CHECK(s.best_epoch() == 4);
    CHECK_FALSE(s.should_stop());
  }
}

TEST_CASE("training runs end to end on the toy dataset") {
  Dataset ds = testutil::toy_dataset(10);  // 20 graphs, clean structure signal
  ExperimentConfig cfg;
  cfg.seed = 7;
  cfg.train.max_epochs = 8;
  std::vector<int> all_labels;
  for (const Graph& g : ds.graphs) all_labels.push_back(g.label);
  const SplitManifest split = stratified_split(all_labels, {0.8, 0.1, 0.1}, cfg.seed);

  SUBCASE("identical seeds give identical histories and metrics") {
    const RunResult a = train_model(ds, split, Method::kMlp, cfg);
    const RunResult b = train_model(ds, split, Method::kMlp, cfg);
    REQUIRE(a.history.size() == b.history.size());
    for (size_t i = 0; i < a.history.size(); ++i) {
      CHECK(a.history[i].train_loss == b.history[i].train_loss);
      CHECK(a.history[i].val_macro_f1 == b.history[i].val_macro_f1);
      CHECK(a.history[i].is_best == b.history[i].is_best);
    }
    CHECK(a.test.accuracy == b.test.accuracy);
    CHECK(a.test.macro_f1 == b.test.macro_f1);
    CHECK(a.status == "ok");
  }
  SUBCASE("restored checkpoint reproduces the recorded best validation score") {
    const RunResult r = train_model(ds, split, Method::kMlp, cfg);
    CHECK(r.restored_val_f1 == r.best_val_f1);
    CHECK(r.best_epoch >= 1);
    CHECK(r.epochs_ran <= cfg.train.max_epochs);
  }
  SUBCASE("frozen methods register only backbone tensors and still train") {
    const RunResult r = train_model(ds, split, Method::kFixed, cfg);
    CHECK(r.status == "ok");
    CHECK(r.history.size() == size_t(r.epochs_ran));
  }
  SUBCASE("early stopping halts within patience+1 of the best epoch") {
    ExperimentConfig cfg2 = cfg;
    cfg2.train.max_epochs = 30;
    cfg2.train.patience = 3;
    const RunResult r = train_model(ds, split, Method::kMlp, cfg2);
    CHECK(r.epochs_ran <= r.best_epoch + cfg2.train.patience);
  }
  SUBCASE("train loss trends down for the mlp variant") {
    ExperimentConfig cfg3 = cfg;
    cfg3.train.max_epochs = 5;
    cfg3.train.patience = 30;
    const RunResult r = train_model(ds, split, Method::kMlp, cfg3);
    REQUIRE(r.history.size() == 5);
    std::vector<double> deltas;
    for (size_t i = 1; i < r.history.size(); ++i)
      deltas.push_back(r.history[i].train_loss - r.history[i - 1].train_loss);
    std::sort(deltas.begin(), deltas.end());
    CHECK(deltas[deltas.size() / 2] <= 0.0);  // median delta
  }
}

TEST_CASE("history csv layout") {
  const auto dir = testutil::fresh_temp_dir("hist");
  std::vector<EpochRecord> h = {{1, 0.9, 0.5, true}, {2, 0.7, 0.6, true}};
  write_history_csv(dir / "h.csv", h);
  const std::string text = read_text_file(dir / "h.csv");
  CHECK(text.find("epoch,train_loss,val_macro_f1,is_best\n") == 0);
  CHECK(text.find("1,0.900000,0.500000,1\n") != std::string::npos);
}
