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

#ifndef NIDS_CLASSIFIERS_CLASSIFIER_HPP_
#define NIDS_CLASSIFIERS_CLASSIFIER_HPP_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "nids/classifiers/kneighbors.hpp"
#include "nids/classifiers/mlp.hpp"
#include "nids/classifiers/naive_bayes.hpp"
#include "nids/classifiers/tree.hpp"
#include "nids/types.hpp"

namespace nids {

enum class ClassifierKind {
  decision_tree,
  random_forest,
  k_neighbors,
  mlp,
  bernoulli_nb,
};

std::string to_string(ClassifierKind kind);
ClassifierKind classifier_from_string(const std::string& name);
const std::vector<ClassifierKind>& all_classifier_kinds();

/// One spec covers all five kinds; only the block matching `kind` is read.
/// Defaults reproduce the benchmark grid (forest depth 5, five neighbors,
/// one hidden layer of 200 units for at most 100 epochs).
struct ClassifierSpec {
  ClassifierKind kind = ClassifierKind::decision_tree;
  std::uint64_t seed = 0;
  DecisionTreeParams tree;
  RandomForestParams forest;
  KNeighborsParams knn;
  MlpParams mlp;
  BernoulliNbParams nb;
};

/// Fitted parameters of any of the five kinds, immutable after fit.
using TrainedModel = std::variant<TreeModel, ForestModel, KnnModel, MlpModel, NbModel>;

/// Trains the classifier named by the spec on U (K x N) against labels y in
/// [0, n_classes). Deterministic given (spec.seed, U, y).
///
/// Errors: length_mismatch, single_class_input, non_finite_feature,
/// unknown_label.
TrainedModel fit_classifier(const ClassifierSpec& spec, const Matrix& u,
                            const IntVector& y, int n_classes);

/// One label per column of u. Errors: dimension_mismatch.
IntVector predict(const TrainedModel& model, const Matrix& u);

int model_input_dim(const TrainedModel& model);
int model_n_classes(const TrainedModel& model);
ClassifierKind model_kind(const TrainedModel& model);

}  // namespace nids

#endif  // NIDS_CLASSIFIERS_CLASSIFIER_HPP_
