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

#ifndef NIDS_CLASSIFIERS_NAIVE_BAYES_HPP_
#define NIDS_CLASSIFIERS_NAIVE_BAYES_HPP_

#include "nids/types.hpp"

namespace nids {

struct BernoulliNbParams {
  double alpha = 1.0;             // Laplace smoothing
  double binarize_threshold = 0.0;  // feature present iff value > threshold
};

struct NbModel {
  Vector class_log_prior;   // C, log empirical class frequencies
  Matrix feature_log_on;    // C x K, log P(feature present | class)
  Matrix feature_log_off;   // C x K, log P(feature absent  | class)
  double binarize_threshold = 0.0;

  Index input_dim() const { return feature_log_on.cols(); }
  Index n_classes() const { return class_log_prior.size(); }
};

NbModel fit_bernoulli_nb(const Matrix& u, const IntVector& y, int n_classes,
                         const BernoulliNbParams& params);

/// argmax over class log-posteriors, ties to the lowest class id.
IntVector predict(const NbModel& model, const Matrix& u);

}  // namespace nids

#endif  // NIDS_CLASSIFIERS_NAIVE_BAYES_HPP_
