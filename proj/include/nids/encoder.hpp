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

#ifndef NIDS_ENCODER_HPP_
#define NIDS_ENCODER_HPP_

#include <string>
#include <utility>
#include <vector>

#include "nids/feature_table.hpp"
#include "nids/types.hpp"

namespace nids {

/// Immutable encoding recipe fitted on training data only. Applying it to
/// the training table and to any test table yields matrices with the same
/// feature rows in the same order.
struct EncoderSpec {
  struct NominalMap {
    std::string column;
    std::vector<std::string> categories;  // unique, sorted lexicographically
  };

  std::vector<std::string> dropped_columns;       // always contains id, attack_cat
  std::vector<NominalMap> onehot_maps;            // in fitted column order
  bool apply_minmax = false;
  std::vector<std::pair<double, double>> minmax_bounds;  // per output feature
  std::vector<std::string> output_features;       // D names, fit-time order
  Schema fitted_schema;                           // for compatibility checks
};

/// Fits the recipe: drops {id, attack_cat}, collects one-hot category maps
/// for the nominal columns (which must be exactly proto/service/state), and,
/// when `apply_minmax`, records per-output-feature training bounds.
///
/// Errors: empty_file (no rows), unexpected_nominal_column.
EncoderSpec fit_encoder(const FeatureTable& train, bool apply_minmax);

/// Encodes a table with a fitted spec. Categories unseen at fit time encode
/// as all-zero indicator blocks. Min-max, when enabled, maps a training
/// feature onto [0,1], sends constant features to 0.0, and clamps test
/// values into [0,1]. Label columns become the matrix's label vectors.
///
/// Errors: missing_column, unexpected_column.
DesignMatrix apply_encoder(const EncoderSpec& spec, const FeatureTable& table);

}  // namespace nids

#endif  // NIDS_ENCODER_HPP_
