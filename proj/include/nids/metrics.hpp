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

#ifndef NIDS_METRICS_HPP_
#define NIDS_METRICS_HPP_

#include <string>
#include <vector>

#include "nids/types.hpp"

namespace nids {

struct ConfusionMatrix {
  Eigen::MatrixXi counts;  // rows = true class, columns = predicted class
  std::vector<std::string> classes;

  long total() const { return counts.cast<long>().sum(); }
};

/// counts[i][j] = number of samples with true class i predicted as j.
/// Errors: length_mismatch, unknown_label.
ConfusionMatrix confusion(const IntVector& y_true, const IntVector& y_pred,
                          const std::vector<std::string>& classes);

enum class Averaging { weighted, macro };

std::string to_string(Averaging averaging);

/// Aggregate precision/recall/F1 as percentages. Per-class precision is
/// diagonal over column sum (0 for empty columns), recall diagonal over row
/// sum; the average is support-weighted or unweighted macro. F1 is the
/// harmonic mean of the aggregated P and R, not an average of per-class F1s.
struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};
Prf aggregate_prf(const ConfusionMatrix& cm, Averaging averaging);

/// 2PR/(P+R) on percentage inputs; 0 when both are 0.
double f1_from(double precision, double recall);

/// Recall per class as percentages; NaN for classes with no true samples.
Vector per_class_accuracy(const ConfusionMatrix& cm);

/// Timing decomposition. training_time = fit_model + fit_reducer;
/// inference_us_per_sample = (predict_model + transform_reducer) / n_test in
/// microseconds. Pre-processing time is excluded by construction.
struct Timing {
  double fit_reducer_s = 0.0;
  double fit_model_s = 0.0;
  double transform_reducer_s = 0.0;
  double predict_model_s = 0.0;
  double training_time_s = 0.0;
  double inference_us_per_sample = 0.0;
};

Timing compose_timing(double fit_reducer_s, double fit_model_s,
                      double transform_reducer_s, double predict_model_s,
                      Index n_test);

}  // namespace nids

#endif  // NIDS_METRICS_HPP_
