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

#ifndef NIDS_TYPES_HPP_
#define NIDS_TYPES_HPP_

#include <Eigen/Core>

#include <string>
#include <vector>

namespace nids {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IntVector = Eigen::VectorXi;
using Index = Eigen::Index;

/// Dense numeric view of a dataset: one row per feature, one column per
/// sample. Label vectors ride along so reducers and classifiers can pass
/// them through untouched; they are empty when the source table carries no
/// label columns.
struct DesignMatrix {
  Matrix values;                           // D x N
  std::vector<std::string> feature_names;  // size D, no duplicates
  IntVector labels_binary;                 // N entries in {0,1}
  IntVector labels_multiclass;             // N entries in [0, 10)

  Index dim() const { return values.rows(); }
  Index samples() const { return values.cols(); }
};

enum class Task { binary, multiclass };

std::string to_string(Task task);
Task task_from_string(const std::string& name);

/// The ten flow categories in class-id order (alphabetical, Normal included).
const std::vector<std::string>& category_class_names();

/// Binary class-id order: 0 = Normal, 1 = Abnormal.
const std::vector<std::string>& binary_class_names();

const std::vector<std::string>& class_names(Task task);

/// Task-appropriate label vector of a design matrix.
const IntVector& labels_for(const DesignMatrix& x, Task task);

}  // namespace nids

#endif  // NIDS_TYPES_HPP_
