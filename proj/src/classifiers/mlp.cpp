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

#include "nids/classifiers/mlp.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "nids/rng.hpp"

namespace nids {

namespace {

// Column-wise stable softmax of logits, in place.
void softmax_columns(Matrix& z) {
  for (Index j = 0; j < z.cols(); ++j) {
    const double zmax = z.col(j).maxCoeff();
    z.col(j) = (z.col(j).array() - zmax).exp();
    z.col(j) /= z.col(j).sum();
  }
}

struct Forward {
  Matrix hidden;  // post-relu activations, H x B
  Matrix probs;   // softmax outputs, C x B
  double loss = 0.0;
};

Forward forward_pass(const MlpModel& m, const Matrix& x, const IntVector& y) {
  Forward f;
  f.hidden.noalias() = m.hidden_weights * x;
  f.hidden.colwise() += m.hidden_bias;
  f.hidden = f.hidden.cwiseMax(0.0);

  Matrix logits;
  logits.noalias() = m.output_weights * f.hidden;
  logits.colwise() += m.output_bias;

  // Mean cross entropy through log-sum-exp, then softmax for the gradient.
  double loss = 0.0;
  for (Index j = 0; j < x.cols(); ++j) {
    const double zmax = logits.col(j).maxCoeff();
    const double lse = std::log((logits.col(j).array() - zmax).exp().sum()) + zmax;
    loss += lse - logits(y(j), j);
  }
  f.loss = loss / static_cast<double>(x.cols());

  f.probs = std::move(logits);
  softmax_columns(f.probs);
  return f;
}

struct AdamState {
  Matrix m, v;
  explicit AdamState(Index rows, Index cols)
      : m(Matrix::Zero(rows, cols)), v(Matrix::Zero(rows, cols)) {}

  void update(Eigen::Ref<Matrix> param, const Matrix& grad, const MlpParams& p,
              double bias1, double bias2) {
    m = p.beta1 * m + (1.0 - p.beta1) * grad;
    v = p.beta2 * v + (1.0 - p.beta2) * grad.cwiseProduct(grad);
    param.array() -= p.learning_rate * (m.array() / bias1) /
                     ((v.array() / bias2).sqrt() + p.epsilon);
  }
};

}  // namespace

double mlp_loss(const MlpModel& model, const Matrix& x, const IntVector& y) {
  return forward_pass(model, x, y).loss;
}

MlpGradients mlp_loss_gradients(const MlpModel& model, const Matrix& x,
                                const IntVector& y, double* loss_out) {
  const Forward f = forward_pass(model, x, y);
  if (loss_out != nullptr) {
    *loss_out = f.loss;
  }
  const double inv_b = 1.0 / static_cast<double>(x.cols());

  Matrix dlogits = f.probs;
  for (Index j = 0; j < x.cols(); ++j) {
    dlogits(y(j), j) -= 1.0;
  }
  dlogits *= inv_b;

  MlpGradients g;
  g.output_weights.noalias() = dlogits * f.hidden.transpose();
  g.output_bias = dlogits.rowwise().sum();

  Matrix dhidden;
  dhidden.noalias() = model.output_weights.transpose() * dlogits;
  dhidden = dhidden.cwiseProduct(
      (f.hidden.array() > 0.0).cast<double>().matrix());

  g.hidden_weights.noalias() = dhidden * x.transpose();
  g.hidden_bias = dhidden.rowwise().sum();
  return g;
}

MlpModel fit_mlp(const Matrix& u, const IntVector& y, int n_classes,
                 const MlpParams& params, std::uint64_t seed) {
  const Index k = u.rows();
  const Index n = u.cols();
  const Index h = params.hidden_units;
  const Index c = n_classes;

  Rng rng(seed);
  MlpModel model;
  const double limit1 = std::sqrt(6.0 / static_cast<double>(k + h));
  model.hidden_weights = Matrix::NullaryExpr(
      h, k, [&]() { return rng.next_uniform(-limit1, limit1); });
  model.hidden_bias = Vector::Zero(h);
  const double limit2 = std::sqrt(6.0 / static_cast<double>(h + c));
  model.output_weights = Matrix::NullaryExpr(
      c, h, [&]() { return rng.next_uniform(-limit2, limit2); });
  model.output_bias = Vector::Zero(c);

  AdamState s_w1(h, k), s_b1(h, 1), s_w2(c, h), s_b2(c, 1);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);

  const Index batch = std::min<Index>(params.batch_size, n);
  Matrix xb(k, batch);
  IntVector yb(batch);

  long step = 0;
  for (int epoch = 0; epoch < params.max_epochs; ++epoch) {
    rng.shuffle(order);
    for (Index start = 0; start < n; start += batch) {
      const Index width = std::min(batch, n - start);
      for (Index j = 0; j < width; ++j) {
        const int src = order[static_cast<std::size_t>(start + j)];
        xb.col(j) = u.col(src);
        yb(j) = y(src);
      }

      const Matrix x_view = xb.leftCols(width);
      const IntVector y_view = yb.head(width);
      const MlpGradients g = mlp_loss_gradients(model, x_view, y_view);

      ++step;
      const double bias1 = 1.0 - std::pow(params.beta1, static_cast<double>(step));
      const double bias2 = 1.0 - std::pow(params.beta2, static_cast<double>(step));
      s_w1.update(model.hidden_weights, g.hidden_weights, params, bias1, bias2);
      s_b1.update(model.hidden_bias, g.hidden_bias, params, bias1, bias2);
      s_w2.update(model.output_weights, g.output_weights, params, bias1, bias2);
      s_b2.update(model.output_bias, g.output_bias, params, bias1, bias2);
    }
  }
  return model;
}

IntVector predict(const MlpModel& model, const Matrix& u) {
  Matrix hidden;
  hidden.noalias() = model.hidden_weights * u;
  hidden.colwise() += model.hidden_bias;
  hidden = hidden.cwiseMax(0.0);

  Matrix logits;
  logits.noalias() = model.output_weights * hidden;
  logits.colwise() += model.output_bias;

  IntVector labels(u.cols());
  for (Index j = 0; j < u.cols(); ++j) {
    int best = 0;
    for (Index c = 1; c < logits.rows(); ++c) {
      if (logits(c, j) > logits(best, j)) {
        best = static_cast<int>(c);
      }
    }
    labels(j) = best;
  }
  return labels;
}

}  // namespace nids
