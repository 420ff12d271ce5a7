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

#include "nids/classifiers/classifier.hpp"

#include "nids/error.hpp"

namespace nids {

std::string to_string(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::decision_tree:
      return "decision_tree";
    case ClassifierKind::random_forest:
      return "random_forest";
    case ClassifierKind::k_neighbors:
      return "k_neighbors";
    case ClassifierKind::mlp:
      return "mlp";
    case ClassifierKind::bernoulli_nb:
      return "bernoulli_nb";
  }
  return "decision_tree";
}

ClassifierKind classifier_from_string(const std::string& name) {
  for (ClassifierKind kind : all_classifier_kinds()) {
    if (to_string(kind) == name) {
      return kind;
    }
  }
  throw Error(errc::bad_config, "unknown classifier: " + name);
}

const std::vector<ClassifierKind>& all_classifier_kinds() {
  static const std::vector<ClassifierKind> kinds = {
      ClassifierKind::decision_tree, ClassifierKind::random_forest,
      ClassifierKind::k_neighbors, ClassifierKind::mlp,
      ClassifierKind::bernoulli_nb};
  return kinds;
}

TrainedModel fit_classifier(const ClassifierSpec& spec, const Matrix& u,
                            const IntVector& y, int n_classes) {
  if (u.cols() != y.size()) {
    throw Error(errc::length_mismatch,
                "feature columns and labels differ: " + std::to_string(u.cols()) +
                    " vs " + std::to_string(y.size()));
  }
  if (y.size() < 2) {
    throw Error(errc::single_class_input, "need at least 2 training samples");
  }
  if (!u.allFinite()) {
    throw Error(errc::non_finite_feature, "training features contain NaN or inf");
  }
  bool multiple = false;
  for (Index j = 0; j < y.size(); ++j) {
    if (y(j) < 0 || y(j) >= n_classes) {
      throw Error(errc::unknown_label,
                  "label " + std::to_string(y(j)) + " outside [0, " +
                      std::to_string(n_classes) + ")");
    }
    multiple = multiple || y(j) != y(0);
  }
  if (!multiple) {
    throw Error(errc::single_class_input, "training labels are a single class");
  }

  switch (spec.kind) {
    case ClassifierKind::decision_tree:
      return fit_decision_tree(u, y, n_classes, spec.tree);
    case ClassifierKind::random_forest:
      return fit_random_forest(u, y, n_classes, spec.forest, spec.seed);
    case ClassifierKind::k_neighbors:
      return fit_k_neighbors(u, y, n_classes, spec.knn);
    case ClassifierKind::mlp:
      return fit_mlp(u, y, n_classes, spec.mlp, spec.seed);
    case ClassifierKind::bernoulli_nb:
      return fit_bernoulli_nb(u, y, n_classes, spec.nb);
  }
  throw Error(errc::bad_config, "invalid classifier kind");
}

IntVector predict(const TrainedModel& model, const Matrix& u) {
  if (u.rows() != model_input_dim(model)) {
    throw Error(errc::dimension_mismatch,
                "model expects K=" + std::to_string(model_input_dim(model)) +
                    ", got K=" + std::to_string(u.rows()));
  }
  return std::visit([&u](const auto& m) { return predict(m, u); }, model);
}

int model_input_dim(const TrainedModel& model) {
  return std::visit(
      [](const auto& m) -> int {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, TreeModel> || std::is_same_v<T, ForestModel>) {
          return m.input_dim;
        } else if constexpr (std::is_same_v<T, KnnModel>) {
          return static_cast<int>(m.train_points.rows());
        } else {
          return static_cast<int>(m.input_dim());
        }
      },
      model);
}

int model_n_classes(const TrainedModel& model) {
  return std::visit(
      [](const auto& m) -> int {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, TreeModel> || std::is_same_v<T, ForestModel> ||
                      std::is_same_v<T, KnnModel>) {
          return m.n_classes;
        } else {
          return static_cast<int>(m.n_classes());
        }
      },
      model);
}

ClassifierKind model_kind(const TrainedModel& model) {
  struct Visitor {
    ClassifierKind operator()(const TreeModel&) { return ClassifierKind::decision_tree; }
    ClassifierKind operator()(const ForestModel&) { return ClassifierKind::random_forest; }
    ClassifierKind operator()(const KnnModel&) { return ClassifierKind::k_neighbors; }
    ClassifierKind operator()(const MlpModel&) { return ClassifierKind::mlp; }
    ClassifierKind operator()(const NbModel&) { return ClassifierKind::bernoulli_nb; }
  };
  return std::visit(Visitor{}, model);
}

}  // namespace nids
