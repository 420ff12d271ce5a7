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

#include "nids/classifiers/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "nids/error.hpp"

namespace nids {

namespace {

double gini(const std::vector<int>& counts, int n) {
  double sum_sq = 0.0;
  for (int c : counts) {
    const double p = static_cast<double>(c) / static_cast<double>(n);
    sum_sq += p * p;
  }
  return 1.0 - sum_sq;
}

int majority_label(const std::vector<int>& counts) {
  int best = 0;
  for (int c = 1; c < static_cast<int>(counts.size()); ++c) {
    if (counts[static_cast<std::size_t>(c)] > counts[static_cast<std::size_t>(best)]) {
      best = c;  // ties keep the lowest class id
    }
  }
  return best;
}

struct TreeBuilder {
  const Matrix& u;
  const IntVector& y;
  int n_classes;
  int max_depth;          // 0 = unbounded
  int features_per_split; // 0 = all
  Rng* rng;               // only used when sampling features
  TreeModel* out;

  std::vector<int> sample_features() {
    std::vector<int> all(static_cast<std::size_t>(u.rows()));
    std::iota(all.begin(), all.end(), 0);
    if (features_per_split == 0 ||
        features_per_split >= static_cast<int>(all.size())) {
      return all;
    }
    // Partial Fisher-Yates, then ascending order so the lowest-feature
    // tie rule is independent of draw order.
    for (int i = 0; i < features_per_split; ++i) {
      const auto j = static_cast<std::size_t>(
          i + static_cast<int>(rng->next_below(all.size() - static_cast<std::size_t>(i))));
      std::swap(all[static_cast<std::size_t>(i)], all[j]);
    }
    all.resize(static_cast<std::size_t>(features_per_split));
    std::sort(all.begin(), all.end());
    return all;
  }

  int build(std::vector<int>& indices, int depth) {
    std::vector<int> counts(static_cast<std::size_t>(n_classes), 0);
    for (int idx : indices) {
      ++counts[static_cast<std::size_t>(y(idx))];
    }
    const int label = majority_label(counts);
    const bool pure =
        counts[static_cast<std::size_t>(label)] == static_cast<int>(indices.size());

    const int node_id = static_cast<int>(out->nodes.size());
    out->nodes.emplace_back();
    out->nodes.back().label = label;

    if (pure || indices.size() < 2 || (max_depth > 0 && depth >= max_depth)) {
      return node_id;
    }

    const std::vector<int> features = sample_features();
    const auto split = best_gini_split(u, y, n_classes, indices, features);
    if (!split.has_value()) {
      return node_id;
    }

    std::vector<int> left, right;
    left.reserve(indices.size());
    for (int idx : indices) {
      (u(split->feature, idx) <= split->threshold ? left : right).push_back(idx);
    }
    indices.clear();
    indices.shrink_to_fit();

    const int left_id = build(left, depth + 1);
    const int right_id = build(right, depth + 1);
    TreeNode& node = out->nodes[static_cast<std::size_t>(node_id)];
    node.feature = split->feature;
    node.threshold = split->threshold;
    node.left = left_id;
    node.right = right_id;
    return node_id;
  }
};

}  // namespace

std::optional<SplitChoice> best_gini_split(const Matrix& u, const IntVector& y,
                                           int n_classes,
                                           std::span<const int> sample_indices,
                                           std::span<const int> features) {
  const int n = static_cast<int>(sample_indices.size());
  if (n < 2) {
    return std::nullopt;
  }

  std::vector<int> parent_counts(static_cast<std::size_t>(n_classes), 0);
  for (int idx : sample_indices) {
    ++parent_counts[static_cast<std::size_t>(y(idx))];
  }
  const double parent_gini = gini(parent_counts, n);

  std::optional<SplitChoice> best;
  std::vector<std::pair<double, int>> ordered(static_cast<std::size_t>(n));
  std::vector<int> left_counts(static_cast<std::size_t>(n_classes));

  for (int feature : features) {
    for (int i = 0; i < n; ++i) {
      const int idx = sample_indices[static_cast<std::size_t>(i)];
      ordered[static_cast<std::size_t>(i)] = {u(feature, idx), y(idx)};
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::fill(left_counts.begin(), left_counts.end(), 0);
    int n_left = 0;
    for (int i = 0; i + 1 < n; ++i) {
      ++left_counts[static_cast<std::size_t>(ordered[static_cast<std::size_t>(i)].second)];
      ++n_left;
      const double value = ordered[static_cast<std::size_t>(i)].first;
      const double next = ordered[static_cast<std::size_t>(i + 1)].first;
      if (value == next) {
        continue;
      }

      double sum_sq_left = 0.0, sum_sq_right = 0.0;
      for (int c = 0; c < n_classes; ++c) {
        const double cl = left_counts[static_cast<std::size_t>(c)];
        const double cr = parent_counts[static_cast<std::size_t>(c)] - cl;
        sum_sq_left += cl * cl;
        sum_sq_right += cr * cr;
      }
      const int n_right = n - n_left;
      const double gini_left = 1.0 - sum_sq_left / (static_cast<double>(n_left) * n_left);
      const double gini_right =
          1.0 - sum_sq_right / (static_cast<double>(n_right) * n_right);
      const double decrease =
          parent_gini -
          (n_left * gini_left + n_right * gini_right) / static_cast<double>(n);
      if (decrease <= 0.0) {
        continue;
      }

      double threshold = 0.5 * (value + next);
      if (threshold >= next) {
        threshold = value;  // midpoint rounded up to the next distinct value
      }
      // Strict improvement wins; ascending feature/threshold order settles ties.
      if (!best.has_value() || decrease > best->decrease) {
        best = SplitChoice{feature, threshold, decrease};
      }
    }
  }
  return best;
}

TreeModel fit_decision_tree(const Matrix& u, const IntVector& y, int n_classes,
                            const DecisionTreeParams& params) {
  TreeModel model;
  model.input_dim = static_cast<int>(u.rows());
  model.n_classes = n_classes;

  std::vector<int> indices(static_cast<std::size_t>(u.cols()));
  std::iota(indices.begin(), indices.end(), 0);
  TreeBuilder builder{u, y, n_classes, params.max_depth, 0, nullptr, &model};
  builder.build(indices, 0);
  return model;
}

ForestModel fit_random_forest(const Matrix& u, const IntVector& y, int n_classes,
                              const RandomForestParams& params,
                              std::uint64_t seed) {
  ForestModel forest;
  forest.input_dim = static_cast<int>(u.rows());
  forest.n_classes = n_classes;
  forest.trees.reserve(static_cast<std::size_t>(params.n_trees));

  const int k = static_cast<int>(u.rows());
  const int features_per_split =
      params.sqrt_features ? std::max(1, static_cast<int>(std::sqrt(static_cast<double>(k))))
                           : 0;
  const auto n = static_cast<std::size_t>(u.cols());

  for (int t = 0; t < params.n_trees; ++t) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
    std::vector<int> indices;
    indices.reserve(n);
    if (params.bootstrap) {
      for (std::size_t i = 0; i < n; ++i) {
        indices.push_back(static_cast<int>(rng.next_below(n)));
      }
    } else {
      indices.resize(n);
      std::iota(indices.begin(), indices.end(), 0);
    }

    TreeModel tree;
    tree.input_dim = forest.input_dim;
    tree.n_classes = n_classes;
    TreeBuilder builder{u, y, n_classes, params.max_depth, features_per_split,
                        &rng, &tree};
    builder.build(indices, 0);
    forest.trees.push_back(std::move(tree));
  }
  return forest;
}

int predict_one(const TreeModel& tree, const Eigen::Ref<const Vector>& x) {
  int node = 0;
  while (!tree.nodes[static_cast<std::size_t>(node)].is_leaf()) {
    const TreeNode& n = tree.nodes[static_cast<std::size_t>(node)];
    node = x(n.feature) <= n.threshold ? n.left : n.right;
  }
  return tree.nodes[static_cast<std::size_t>(node)].label;
}

IntVector predict(const TreeModel& tree, const Matrix& u) {
  IntVector labels(u.cols());
  for (Index j = 0; j < u.cols(); ++j) {
    labels(j) = predict_one(tree, u.col(j));
  }
  return labels;
}

IntVector predict(const ForestModel& forest, const Matrix& u) {
  IntVector labels(u.cols());
  std::vector<int> votes(static_cast<std::size_t>(forest.n_classes));
  for (Index j = 0; j < u.cols(); ++j) {
    std::fill(votes.begin(), votes.end(), 0);
    for (const TreeModel& tree : forest.trees) {
      ++votes[static_cast<std::size_t>(predict_one(tree, u.col(j)))];
    }
    labels(j) = majority_label(votes);
  }
  return labels;
}

}  // namespace nids
