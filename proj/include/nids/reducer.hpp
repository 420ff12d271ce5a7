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

#ifndef NIDS_REDUCER_HPP_
#define NIDS_REDUCER_HPP_

#include <optional>
#include <string>
#include <variant>

#include "nids/correlation.hpp"
#include "nids/pca.hpp"
#include "nids/selection.hpp"
#include "nids/types.hpp"

namespace nids {

enum class ReducerKind { selection, extraction, none };

std::string to_string(ReducerKind kind);
ReducerKind reducer_kind_from_string(const std::string& name);

struct ReducerConfig {
  ReducerKind kind = ReducerKind::none;
  int k = 0;                        // top_k / number of components
  std::optional<double> threshold;  // selection threshold mode, overrides k
  CorrelationAveraging averaging = CorrelationAveraging::signed_values;
};

struct NoReduction {
  int input_dim = 0;
};

/// Both reducers (and the identity) behind one fit/transform contract.
using Reducer = std::variant<SelectionModel, ExtractionModel, NoReduction>;

/// Fits on a training matrix. Selection fits the correlation statistics and
/// ranks features; extraction fits the PCA projection. The identity reducer
/// just records D.
Reducer fit_reducer(const ReducerConfig& cfg, const DesignMatrix& train);

/// Transforms any matrix with the same D the reducer was fitted on.
DesignMatrix apply_reducer(const Reducer& reducer, const DesignMatrix& x);

int reducer_output_dim(const Reducer& reducer);
int reducer_input_dim(const Reducer& reducer);

/// Short label for file names and report rows, e.g. "selection_top8",
/// "selection_thr0.0137", "extraction_k4", "none".
std::string reducer_label(const ReducerConfig& cfg);

}  // namespace nids

#endif  // NIDS_REDUCER_HPP_
