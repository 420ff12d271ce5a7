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

#include "nids/classifiers/kneighbors.hpp"

#include <algorithm>
#include <vector>

#include "nids/error.hpp"

namespace nids {

KnnModel fit_k_neighbors(const Matrix& u, const IntVector& y, int n_classes,
                         const KNeighborsParams& params) {
  KnnModel model;
  model.train_points = u;
  model.train_labels = y;
  model.k = std::min<int>(params.k, static_cast<int>(u.cols()));
  model.n_classes = n_classes;
  return model;
}

namespace {

struct Neighbor {
  double dist_sq;
  int index;

  bool closer_than(const Neighbor& other) const {
    return dist_sq < other.dist_sq ||
           (dist_sq == other.dist_sq && index < other.index);
  }
};

}  // namespace

IntVector predict(const KnnModel& model, const Matrix& u) {
  if (u.rows() != model.train_points.rows()) {
    throw Error(errc::dimension_mismatch,
                "knn fitted on K=" + std::to_string(model.train_points.rows()) +
                    ", got K=" + std::to_string(u.rows()));
  }
  const Index n_train = model.train_points.cols();
  const Index n_test = u.cols();
  const int k = model.k;

  const Vector train_sq = model.train_points.colwise().squaredNorm();

  IntVector labels(n_test);
  Matrix dots(n_train, std::min<Index>(kKnnPredictBlock, std::max<Index>(n_test, 1)));
  std::vector<Neighbor> heap(static_cast<std::size_t>(k));
  std::vector<int> votes(static_cast<std::size_t>(model.n_classes));

  for (Index j0 = 0; j0 < n_test; j0 += kKnnPredictBlock) {
    const Index width = std::min<Index>(kKnnPredictBlock, n_test - j0);
    dots.leftCols(width).noalias() =
        model.train_points.transpose() * u.middleCols(j0, width);

    for (Index b = 0; b < width; ++b) {
      const double query_sq = u.col(j0 + b).squaredNorm();
      int filled = 0;
      // Worst kept neighbor sits at heap[filled - 1]; the array stays sorted
      // by (distance, index), so equal distances keep the earliest index.
      for (Index t = 0; t < n_train; ++t) {
        const Neighbor cand{train_sq(t) + query_sq - 2.0 * dots(t, j0 + b),
                            static_cast<int>(t)};
        if (filled < k) {
          int pos = filled++;
          while (pos > 0 && cand.closer_than(heap[static_cast<std::size_t>(pos - 1)])) {
            heap[static_cast<std::size_t>(pos)] = heap[static_cast<std::size_t>(pos - 1)];
            --pos;
          }
          heap[static_cast<std::size_t>(pos)] = cand;
        } else if (cand.closer_than(heap[static_cast<std::size_t>(k - 1)])) {
          int pos = k - 1;
          while (pos > 0 && cand.closer_than(heap[static_cast<std::size_t>(pos - 1)])) {
            heap[static_cast<std::size_t>(pos)] = heap[static_cast<std::size_t>(pos - 1)];
            --pos;
          }
          heap[static_cast<std::size_t>(pos)] = cand;
        }
      }

      std::fill(votes.begin(), votes.end(), 0);
      for (int i = 0; i < filled; ++i) {
        ++votes[static_cast<std::size_t>(
            model.train_labels(heap[static_cast<std::size_t>(i)].index))];
      }
      int best = 0;
      for (int c = 1; c < model.n_classes; ++c) {
        if (votes[static_cast<std::size_t>(c)] > votes[static_cast<std::size_t>(best)]) {
          best = c;
        }
      }
      labels(j0 + b) = best;
    }
  }
  return labels;
}

}  // namespace nids
