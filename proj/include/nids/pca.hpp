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

#ifndef NIDS_PCA_HPP_
#define NIDS_PCA_HPP_

#include <string>
#include <vector>

#include "nids/types.hpp"

namespace nids {

/// Principal-component projection fitted on training data: orthonormal
/// columns of `projection` span the top-k eigenspace of the biased (1/N)
/// sample covariance, `mean` is the training feature mean.
struct ExtractionModel {
  Matrix projection;   // D x K, orthonormal, sign-normalized columns
  Vector mean;         // length D
  Vector eigenvalues;  // length K, non-increasing
  std::vector<std::string> input_features;  // fitted feature order
  bool rank_deficient = false;  // k-th eigenvalue at or below 1e-12

  Index input_dim() const { return projection.rows(); }
  Index k() const { return projection.cols(); }
};

/// Output feature names pc_1 .. pc_k.
std::vector<std::string> principal_component_names(int k);

/// Fits the projection: centers the data, forms R = (1/N) Xc Xc^T in centered
/// column blocks, decomposes it with the Jacobi solver, and keeps the k
/// leading eigenpairs. Requires 1 <= k <= D and N >= 2. A k-th eigenvalue at
/// or below 1e-12 marks the model rank deficient (still returned).
ExtractionModel pca_fit(const DesignMatrix& x, int k);

/// U = W^T (X - mean), a K x N matrix named pc_1..pc_K; labels pass through.
/// Errors: dimension_mismatch.
DesignMatrix pca_transform(const ExtractionModel& model, const DesignMatrix& x);

}  // namespace nids

#endif  // NIDS_PCA_HPP_
