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

#include "nids/metrics.hpp"

#include <cmath>
#include <limits>

#include "nids/error.hpp"

namespace nids {

std::string to_string(Averaging averaging) {
  return averaging == Averaging::weighted ? "weighted" : "macro";
}

ConfusionMatrix confusion(const IntVector& y_true, const IntVector& y_pred,
                          const std::vector<std::string>& classes) {
  if (y_true.size() != y_pred.size()) {
    throw Error(errc::length_mismatch,
                "label vectors differ in length: " + std::to_string(y_true.size()) +
                    " vs " + std::to_string(y_pred.size()));
  }
  const int c = static_cast<int>(classes.size());
  ConfusionMatrix cm;
  cm.classes = classes;
  cm.counts = Eigen::MatrixXi::Zero(c, c);
  for (Index i = 0; i < y_true.size(); ++i) {
    const int t = y_true(i);
    const int p = y_pred(i);
    if (t < 0 || t >= c || p < 0 || p >= c) {
      throw Error(errc::unknown_label,
                  "label outside the class list at position " + std::to_string(i));
    }
    ++cm.counts(t, p);
  }
  return cm;
}

double f1_from(double precision, double recall) {
  const double sum = precision + recall;
  return sum == 0.0 ? 0.0 : 2.0 * precision * recall / sum;
}

Prf aggregate_prf(const ConfusionMatrix& cm, Averaging averaging) {
  const int c = static_cast<int>(cm.classes.size());
  if (cm.total() < 1) {
    throw Error(errc::bad_config, "confusion matrix holds no samples");
  }

  const Eigen::VectorXi row_sums = cm.counts.rowwise().sum();
  const Eigen::VectorXi col_sums = cm.counts.colwise().sum();

  double precision = 0.0;
  double recall = 0.0;
  double weight_total = 0.0;
  for (int i = 0; i < c; ++i) {
    const double diag = cm.counts(i, i);
    const double class_precision = col_sums(i) > 0 ? diag / col_sums(i) : 0.0;
    const double class_recall = row_sums(i) > 0 ? diag / row_sums(i) : 0.0;
    const double weight =
        averaging == Averaging::weighted ? static_cast<double>(row_sums(i)) : 1.0;
    precision += weight * class_precision;
    recall += weight * class_recall;
    weight_total += weight;
  }
  precision = 100.0 * precision / weight_total;
  recall = 100.0 * recall / weight_total;

  return Prf{precision, recall, f1_from(precision, recall)};
}

Vector per_class_accuracy(const ConfusionMatrix& cm) {
  const int c = static_cast<int>(cm.classes.size());
  Vector acc(c);
  for (int i = 0; i < c; ++i) {
    const long support = cm.counts.row(i).cast<long>().sum();
    acc(i) = support > 0
                 ? 100.0 * static_cast<double>(cm.counts(i, i)) / static_cast<double>(support)
                 : std::numeric_limits<double>::quiet_NaN();
  }
  return acc;
}

Timing compose_timing(double fit_reducer_s, double fit_model_s,
                      double transform_reducer_s, double predict_model_s,
                      Index n_test) {
  if (fit_reducer_s < 0 || fit_model_s < 0 || transform_reducer_s < 0 ||
      predict_model_s < 0 || n_test < 1) {
    throw Error(errc::bad_config, "durations must be >= 0 and n_test >= 1");
  }
  Timing t;
  t.fit_reducer_s = fit_reducer_s;
  t.fit_model_s = fit_model_s;
  t.transform_reducer_s = transform_reducer_s;
  t.predict_model_s = predict_model_s;
  t.training_time_s = fit_model_s + fit_reducer_s;
  t.inference_us_per_sample =
      (predict_model_s + transform_reducer_s) / static_cast<double>(n_test) * 1e6;
  return t;
}

}  // namespace nids
