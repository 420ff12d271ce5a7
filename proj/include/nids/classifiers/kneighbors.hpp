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

#ifndef NIDS_CLASSIFIERS_KNEIGHBORS_HPP_
#define NIDS_CLASSIFIERS_KNEIGHBORS_HPP_

#include "nids/types.hpp"

namespace nids {

struct KNeighborsParams {
  int k = 5;
};

/// Brute-force Euclidean k-nearest-neighbors: the model is the training set.
/// No spatial index, so prediction cost scales with the full training size.
struct KnnModel {
  Matrix train_points;  // K x N
  IntVector train_labels;
  int k = 5;
  int n_classes = 0;
};

KnnModel fit_k_neighbors(const Matrix& u, const IntVector& y, int n_classes,
                         const KNeighborsParams& params);

/// Scans every training point for each query. Distances are computed per
/// block of kKnnPredictBlock query columns through one matrix product.
/// Equal distances prefer the lower training index; the k-vote breaks ties
/// toward the lowest class id.
IntVector predict(const KnnModel& model, const Matrix& u);

inline constexpr int kKnnPredictBlock = 128;

}  // namespace nids

#endif  // NIDS_CLASSIFIERS_KNEIGHBORS_HPP_
