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

#include "nids/pca.hpp"

#include <algorithm>

#include "nids/eigh.hpp"
#include "nids/error.hpp"

namespace nids {

std::vector<std::string> principal_component_names(int k) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    names.push_back("pc_" + std::to_string(i));
  }
  return names;
}

ExtractionModel pca_fit(const DesignMatrix& x, int k) {
  const Index d = x.dim();
  const Index n = x.samples();
  if (k < 1 || k > d) {
    throw Error(errc::bad_config, "k must be in [1, " + std::to_string(d) + "]");
  }
  if (n < 2) {
    throw Error(errc::bad_config, "pca needs at least 2 samples");
  }

  const Vector mean = x.values.rowwise().mean();

  // R = (1/N) Xc Xc^T, accumulated over centered column blocks.
  Matrix r = Matrix::Zero(d, d);
  const Index block = 8192;
  Matrix centered(d, std::min(block, n));
  for (Index j0 = 0; j0 < n; j0 += block) {
    const Index width = std::min(block, n - j0);
    centered.leftCols(width) = x.values.middleCols(j0, width).colwise() - mean;
    r.selfadjointView<Eigen::Lower>().rankUpdate(centered.leftCols(width), 1.0);
  }
  r /= static_cast<double>(n);
  r.triangularView<Eigen::Upper>() = r.transpose();

  const EighResult<double> eig = eigh_symmetric<double>(r);

  ExtractionModel model;
  model.projection = eig.eigenvectors.leftCols(k);
  model.mean = mean;
  model.eigenvalues = eig.eigenvalues.head(k);
  model.input_features = x.feature_names;
  model.rank_deficient = model.eigenvalues(k - 1) <= 1e-12;
  return model;
}

DesignMatrix pca_transform(const ExtractionModel& model, const DesignMatrix& x) {
  if (x.dim() != model.input_dim()) {
    throw Error(errc::dimension_mismatch,
                "pca fitted on D=" + std::to_string(model.input_dim()) +
                    ", got D=" + std::to_string(x.dim()));
  }
  DesignMatrix out;
  out.values.noalias() = model.projection.transpose() * x.values;
  out.values.colwise() -= (model.projection.transpose() * model.mean).eval();
  out.feature_names = principal_component_names(static_cast<int>(model.k()));
  out.labels_binary = x.labels_binary;
  out.labels_multiclass = x.labels_multiclass;
  return out;
}

}  // namespace nids
