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

#include "nids/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nids/error.hpp"

namespace nids {

SelectionModel select_features(const CorrelationStats& stats,
                               const SelectionCriterion& criterion) {
  const Index d = stats.averages.size();

  std::vector<int> ranked(static_cast<std::size_t>(d));
  std::iota(ranked.begin(), ranked.end(), 0);
  std::sort(ranked.begin(), ranked.end(), [&](int lhs, int rhs) {
    if (stats.averages(lhs) != stats.averages(rhs)) {
      return stats.averages(lhs) > stats.averages(rhs);
    }
    return stats.feature_names[static_cast<std::size_t>(lhs)] <
           stats.feature_names[static_cast<std::size_t>(rhs)];
  });

  SelectionModel model;
  model.input_dim = static_cast<int>(d);

  if (const auto* threshold = std::get_if<ThresholdCriterion>(&criterion)) {
    if (!std::isfinite(threshold->value)) {
      throw Error(errc::bad_config, "selection threshold must be finite");
    }
    model.threshold = threshold->value;
    for (int index : ranked) {
      if (stats.averages(index) > threshold->value) {
        model.selected.push_back(index);
      }
    }
    if (model.selected.empty()) {
      throw Error(errc::empty_selection, "threshold excludes every feature");
    }
  } else {
    const int k = std::get<TopKCriterion>(criterion).k;
    if (k < 1 || k > d) {
      throw Error(errc::bad_config,
                  "top_k must be in [1, " + std::to_string(d) + "]");
    }
    model.selected.assign(ranked.begin(), ranked.begin() + k);
  }

  model.k = static_cast<int>(model.selected.size());
  model.selected_names.reserve(model.selected.size());
  for (int index : model.selected) {
    model.selected_names.push_back(
        stats.feature_names[static_cast<std::size_t>(index)]);
  }
  return model;
}

DesignMatrix apply_selection(const SelectionModel& model, const DesignMatrix& x) {
  if (x.dim() != model.input_dim) {
    throw Error(errc::dimension_mismatch,
                "selection fitted on D=" + std::to_string(model.input_dim) +
                    ", got D=" + std::to_string(x.dim()));
  }
  DesignMatrix out;
  out.values.resize(model.k, x.samples());
  for (int r = 0; r < model.k; ++r) {
    out.values.row(r) = x.values.row(model.selected[static_cast<std::size_t>(r)]);
  }
  out.feature_names = model.selected_names;
  out.labels_binary = x.labels_binary;
  out.labels_multiclass = x.labels_multiclass;
  return out;
}

}  // namespace nids
