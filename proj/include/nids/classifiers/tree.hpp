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

#ifndef NIDS_CLASSIFIERS_TREE_HPP_
#define NIDS_CLASSIFIERS_TREE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nids/rng.hpp"
#include "nids/types.hpp"

namespace nids {

struct DecisionTreeParams {
  int max_depth = 0;  // 0 = unbounded
};

struct RandomForestParams {
  int n_trees = 100;
  int max_depth = 5;
  bool bootstrap = true;
  bool sqrt_features = true;  // false = every feature considered per split
};

/// CART node. Internal nodes route x[feature] <= threshold to `left`,
/// otherwise to `right`; leaves carry `label` and feature == -1.
struct TreeNode {
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  int label = -1;

  bool is_leaf() const { return feature < 0; }
};

struct TreeModel {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  int input_dim = 0;
  int n_classes = 0;
};

struct ForestModel {
  std::vector<TreeModel> trees;
  int input_dim = 0;
  int n_classes = 0;
};

/// Best Gini split over the given samples and candidate features (ascending
/// index order). Thresholds sit midway between consecutive distinct values;
/// equal impurity decreases resolve to the lowest feature index, then the
/// lowest threshold. Empty when no feature separates the samples.
struct SplitChoice {
  int feature = -1;
  double threshold = 0.0;
  double decrease = 0.0;
};
std::optional<SplitChoice> best_gini_split(const Matrix& u, const IntVector& y,
                                           int n_classes,
                                           std::span<const int> sample_indices,
                                           std::span<const int> features);

/// Grows a CART classification tree: Gini impurity, midpoint thresholds,
/// leaves on purity or fewer than two samples, majority label with
/// lowest-class-id ties.
TreeModel fit_decision_tree(const Matrix& u, const IntVector& y, int n_classes,
                            const DecisionTreeParams& params);

/// Bagged ensemble of depth-capped CART trees. Each tree draws its own
/// bootstrap sample and, when `sqrt_features`, a fresh floor(sqrt(K)) feature
/// subset per split, from a per-tree stream derived from `seed`. Prediction
/// is a majority vote with lowest-class-id ties.
ForestModel fit_random_forest(const Matrix& u, const IntVector& y, int n_classes,
                              const RandomForestParams& params, std::uint64_t seed);

int predict_one(const TreeModel& tree, const Eigen::Ref<const Vector>& x);
IntVector predict(const TreeModel& tree, const Matrix& u);
IntVector predict(const ForestModel& forest, const Matrix& u);

}  // namespace nids

#endif  // NIDS_CLASSIFIERS_TREE_HPP_
