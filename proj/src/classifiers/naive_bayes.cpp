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

#include "nids/classifiers/naive_bayes.hpp"

#include <cmath>

namespace nids {

NbModel fit_bernoulli_nb(const Matrix& u, const IntVector& y, int n_classes,
                         const BernoulliNbParams& params) {
  const Index k = u.rows();
  const Index n = u.cols();

  NbModel model;
  model.binarize_threshold = params.binarize_threshold;
  model.class_log_prior.resize(n_classes);
  model.feature_log_on.resize(n_classes, k);
  model.feature_log_off.resize(n_classes, k);

  Eigen::VectorXi class_counts = Eigen::VectorXi::Zero(n_classes);
  Matrix on_counts = Matrix::Zero(n_classes, k);
  for (Index j = 0; j < n; ++j) {
    const int c = y(j);
    ++class_counts(c);
    for (Index f = 0; f < k; ++f) {
      if (u(f, j) > params.binarize_threshold) {
        on_counts(c, f) += 1.0;
      }
    }
  }

  for (int c = 0; c < n_classes; ++c) {
    model.class_log_prior(c) =
        std::log(static_cast<double>(class_counts(c)) / static_cast<double>(n));
    const double denom = static_cast<double>(class_counts(c)) + 2.0 * params.alpha;
    for (Index f = 0; f < k; ++f) {
      const double p_on = (on_counts(c, f) + params.alpha) / denom;
      model.feature_log_on(c, f) = std::log(p_on);
      model.feature_log_off(c, f) = std::log(1.0 - p_on);
    }
  }
  return model;
}

IntVector predict(const NbModel& model, const Matrix& u) {
  const Index k = model.input_dim();
  const int c = static_cast<int>(model.n_classes());

  IntVector labels(u.cols());
  Vector scores(c);
  for (Index j = 0; j < u.cols(); ++j) {
    scores = model.class_log_prior;
    for (Index f = 0; f < k; ++f) {
      const bool on = u(f, j) > model.binarize_threshold;
      for (int cls = 0; cls < c; ++cls) {
        scores(cls) += on ? model.feature_log_on(cls, f) : model.feature_log_off(cls, f);
      }
    }
    int best = 0;
    for (int cls = 1; cls < c; ++cls) {
      if (scores(cls) > scores(best)) {
        best = cls;
      }
    }
    labels(j) = best;
  }
  return labels;
}

}  // namespace nids
