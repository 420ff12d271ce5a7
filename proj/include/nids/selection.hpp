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

#ifndef NIDS_SELECTION_HPP_
#define NIDS_SELECTION_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nids/correlation.hpp"
#include "nids/types.hpp"

namespace nids {

struct ThresholdCriterion {
  double value = 0.0;
};

struct TopKCriterion {
  int k = 0;
};

using SelectionCriterion = std::variant<ThresholdCriterion, TopKCriterion>;

/// Ordered feature subset. `selected` is ranked by descending average
/// correlation, ties by ascending feature name.
struct SelectionModel {
  std::vector<int> selected;
  std::vector<std::string> selected_names;
  std::optional<double> threshold;  // set in threshold mode
  int k = 0;                        // |selected|
  int input_dim = 0;
};

/// Threshold mode keeps features whose average correlation is strictly above
/// the threshold (equal averages at the boundary stay together); top-k mode
/// keeps the k largest averages, boundary ties broken by ascending name.
///
/// Errors: empty_selection (threshold excludes everything), bad_config
/// (top_k outside [1, D] or non-finite threshold).
SelectionModel select_features(const CorrelationStats& stats,
                               const SelectionCriterion& criterion);

/// Pure row gather: copies the selected feature rows, in model order, into a
/// K x N matrix. No arithmetic touches the values. Labels pass through.
///
/// Errors: dimension_mismatch.
DesignMatrix apply_selection(const SelectionModel& model, const DesignMatrix& x);

}  // namespace nids

#endif  // NIDS_SELECTION_HPP_
