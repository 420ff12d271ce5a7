// Copyright 2026 The nidsbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>

#include "nids/error.hpp"
#include "nids/metrics.hpp"
#include "nids/report.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace nids;

namespace {

const std::vector<std::string> kTwo = {"Normal", "Abnormal"};
const std::vector<std::string> kThree = {"a", "b", "c"};

}  // namespace

TEST_SUITE("metrics") {
  TEST_CASE("perfect prediction yields a diagonal matrix") {
    IntVector y(6);
    y << 0, 1, 0, 1, 1, 0;
    const ConfusionMatrix cm = confusion(y, y, kTwo);
    CHECK(cm.counts(0, 0) == 3);
    CHECK(cm.counts(1, 1) == 3);
    CHECK(cm.counts(0, 1) == 0);
    CHECK(cm.counts(1, 0) == 0);
  }

  TEST_CASE("all-positive predictor fills one column") {
    IntVector y_true(5), y_pred(5);
    y_true << 0, 0, 1, 1, 1;
    y_pred.setOnes();
    const ConfusionMatrix cm = confusion(y_true, y_pred, kTwo);
    CHECK(cm.counts.col(0).sum() == 0);
    CHECK(cm.counts(0, 1) == 2);
    CHECK(cm.counts(1, 1) == 3);
  }

  TEST_CASE("matches the nested-loop counting oracle on random labels") {
    Rng rng(37);
    const IntVector y_true = testing::random_labels(rng, 100, 4);
    const IntVector y_pred = testing::random_labels(rng, 100, 4);
    const ConfusionMatrix cm = confusion(y_true, y_pred, {"w", "x", "y", "z"});
    CHECK(cm.counts == oracles::confusion_counts(y_true, y_pred, 4));
    CHECK(cm.total() == 100);
  }

  TEST_CASE("mismatched lengths and unknown labels are rejected") {
    IntVector a(3), b(2);
    a.setZero();
    b.setZero();
    try {
      confusion(a, b, kTwo);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == errc::length_mismatch);
    }
    IntVector c(3);
    c << 0, 1, 2;  // 2 is not a binary class id
    try {
      confusion(a, c, kTwo);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == errc::unknown_label);
    }
  }

  TEST_CASE("the published triple satisfies the harmonic identity") {
    CHECK(round2(f1_from(87.87, 87.07)) == 87.47);
  }

  TEST_CASE("equal precision and recall give that same f1") {
    for (double x : {1.0, 33.33, 87.07, 100.0}) {
      CHECK(f1_from(x, x) == doctest::Approx(x).epsilon(1e-12));
    }
    CHECK(f1_from(0.0, 0.0) == 0.0);
  }

  TEST_CASE("f1 is symmetric in precision and recall") {
    CHECK(f1_from(80.0, 60.0) == f1_from(60.0, 80.0));
  }

  TEST_CASE("3-class aggregate agrees with hand arithmetic") {
    // rows true, cols predicted
    ConfusionMatrix cm;
    cm.classes = kThree;
    cm.counts = Eigen::MatrixXi(3, 3);
    cm.counts << 5, 2, 1,
                 1, 6, 1,
                 0, 2, 2;
    // per class precision: 5/6, 6/10, 2/4; recall: 5/8, 6/8, 2/4
    const Prf weighted = aggregate_prf(cm, Averaging::weighted);
    const double wp = 100.0 * (8 * (5.0 / 6) + 8 * (6.0 / 10) + 4 * (2.0 / 4)) / 20.0;
    const double wr = 100.0 * (8 * (5.0 / 8) + 8 * (6.0 / 8) + 4 * (2.0 / 4)) / 20.0;
    CHECK(weighted.precision == doctest::Approx(wp).epsilon(1e-12));
    CHECK(weighted.recall == doctest::Approx(wr).epsilon(1e-12));
    CHECK(weighted.f1 == doctest::Approx(f1_from(wp, wr)).epsilon(1e-12));

    const Prf macro = aggregate_prf(cm, Averaging::macro);
    const double mp = 100.0 * (5.0 / 6 + 6.0 / 10 + 2.0 / 4) / 3.0;
    const double mr = 100.0 * (5.0 / 8 + 6.0 / 8 + 2.0 / 4) / 3.0;
    CHECK(macro.precision == doctest::Approx(mp).epsilon(1e-12));
    CHECK(macro.recall == doctest::Approx(mr).epsilon(1e-12));
  }

  TEST_CASE("empty predicted column contributes zero precision") {
    ConfusionMatrix cm;
    cm.classes = kTwo;
    cm.counts = Eigen::MatrixXi(2, 2);
    cm.counts << 3, 0,
                 2, 0;  // nothing predicted as class 1
    const Prf prf = aggregate_prf(cm, Averaging::weighted);
    // weights 3 and 2; precisions 3/5 and 0 -> (3 * 0.6 + 2 * 0) / 5 = 0.36
    CHECK(prf.precision == doctest::Approx(36.0).epsilon(1e-12));
  }

  TEST_CASE("weighted recall equals overall accuracy") {
    Rng rng(41);
    const IntVector y_true = testing::random_labels(rng, 250, 5);
    const IntVector y_pred = testing::random_labels(rng, 250, 5);
    const ConfusionMatrix cm =
        confusion(y_true, y_pred, {"a", "b", "c", "d", "e"});
    const Prf prf = aggregate_prf(cm, Averaging::weighted);
    const double overall =
        100.0 * cm.counts.diagonal().cast<double>().sum() / cm.total();
    CHECK(std::abs(prf.recall - overall) <= 1e-12);
  }

  TEST_CASE("per-class accuracy is recall per class") {
    ConfusionMatrix cm;
    cm.classes = kThree;
    cm.counts = Eigen::MatrixXi(3, 3);
    cm.counts << 4, 0, 0,
                 0, 0, 3,
                 0, 0, 0;  // class c never occurs
    const Vector acc = per_class_accuracy(cm);
    CHECK(acc(0) == 100.0);
    CHECK(acc(1) == 0.0);
    CHECK(std::isnan(acc(2)));
  }

  TEST_CASE("per-class accuracy of a diagonal matrix is all 100") {
    IntVector y(9);
    y << 0, 1, 2, 0, 1, 2, 0, 1, 2;
    const Vector acc = per_class_accuracy(confusion(y, y, kThree));
    for (int i = 0; i < 3; ++i) CHECK(acc(i) == 100.0);
  }

  TEST_CASE("per-class accuracy matches the counting oracle") {
    Rng rng(43);
    const IntVector y_true = testing::random_labels(rng, 120, 3);
    const IntVector y_pred = testing::random_labels(rng, 120, 3);
    const ConfusionMatrix cm = confusion(y_true, y_pred, kThree);
    const Eigen::MatrixXi ref = oracles::confusion_counts(y_true, y_pred, 3);
    const Vector acc = per_class_accuracy(cm);
    for (int c = 0; c < 3; ++c) {
      const double expected = 100.0 * ref(c, c) / ref.row(c).sum();
      CHECK(acc(c) == doctest::Approx(expected).epsilon(1e-12));
    }
  }

  TEST_CASE("timing decomposition arithmetic") {
    const Timing t = compose_timing(0.0, 2.0, 0.0, 1.0, 1000000);
    CHECK(t.training_time_s == 2.0);
    CHECK(t.inference_us_per_sample == 1.0);

    const Timing u = compose_timing(1.5, 13.0, 0.25, 0.75, 10);
    CHECK(u.training_time_s == 14.5);
    CHECK(u.inference_us_per_sample == doctest::Approx(1e5).epsilon(1e-12));

    // selection path: negligible transform cost means inference is
    // essentially predict time over the test size
    const Timing s = compose_timing(0.8, 5.0, 0.0, 2.0, 500);
    CHECK(s.inference_us_per_sample == doctest::Approx(2.0 / 500 * 1e6).epsilon(1e-12));
  }

  TEST_CASE("timing reconstruction is exact arithmetic") {
    const Timing t = compose_timing(0.125, 0.375, 0.0625, 0.875, 64);
    CHECK(t.training_time_s == t.fit_model_s + t.fit_reducer_s);
    CHECK(t.inference_us_per_sample ==
          (t.predict_model_s + t.transform_reducer_s) / 64.0 * 1e6);
  }

  TEST_CASE("invalid timing inputs are rejected") {
    CHECK_THROWS_AS(compose_timing(-1.0, 0, 0, 0, 10), Error);
    CHECK_THROWS_AS(compose_timing(0, 0, 0, 0, 0), Error);
  }
}
