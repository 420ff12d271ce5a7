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

#ifndef NIDS_CLASSIFIERS_MLP_HPP_
#define NIDS_CLASSIFIERS_MLP_HPP_

#include <cstdint>

#include "nids/types.hpp"

namespace nids {

struct MlpParams {
  int hidden_units = 200;
  int max_epochs = 100;
  int batch_size = 200;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// One rectified-linear hidden layer and a softmax output. Binary tasks are
/// trained as two-class softmax.
struct MlpModel {
  Matrix hidden_weights;  // H x K
  Vector hidden_bias;     // H
  Matrix output_weights;  // C x H
  Vector output_bias;     // C

  Index input_dim() const { return hidden_weights.cols(); }
  Index n_classes() const { return output_weights.rows(); }
};

struct MlpGradients {
  Matrix hidden_weights;
  Vector hidden_bias;
  Matrix output_weights;
  Vector output_bias;
};

/// Mean cross-entropy of the softmax outputs over a batch (columns of x).
double mlp_loss(const MlpModel& model, const Matrix& x, const IntVector& y);

/// Backpropagated gradients of mlp_loss at the model's parameters. Exposed
/// so the finite-difference check can probe the exact training gradient.
MlpGradients mlp_loss_gradients(const MlpModel& model, const Matrix& x,
                                const IntVector& y, double* loss_out = nullptr);

/// Adam over shuffled minibatches: fixed epoch count, no early stopping,
/// Glorot-uniform initial weights and zero biases drawn from `seed`.
MlpModel fit_mlp(const Matrix& u, const IntVector& y, int n_classes,
                 const MlpParams& params, std::uint64_t seed);

IntVector predict(const MlpModel& model, const Matrix& u);

}  // namespace nids

#endif  // NIDS_CLASSIFIERS_MLP_HPP_
