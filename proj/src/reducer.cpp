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

#include "nids/reducer.hpp"

#include <sstream>

#include "nids/error.hpp"

namespace nids {

std::string to_string(ReducerKind kind) {
  switch (kind) {
    case ReducerKind::selection:
      return "selection";
    case ReducerKind::extraction:
      return "extraction";
    case ReducerKind::none:
      return "none";
  }
  return "none";
}

ReducerKind reducer_kind_from_string(const std::string& name) {
  if (name == "selection") return ReducerKind::selection;
  if (name == "extraction") return ReducerKind::extraction;
  if (name == "none") return ReducerKind::none;
  throw Error(errc::bad_config, "unknown reducer: " + name);
}

Reducer fit_reducer(const ReducerConfig& cfg, const DesignMatrix& train) {
  switch (cfg.kind) {
    case ReducerKind::selection: {
      const CorrelationStats stats = correlation_matrix(train, cfg.averaging);
      const SelectionCriterion criterion =
          cfg.threshold.has_value()
              ? SelectionCriterion(ThresholdCriterion{*cfg.threshold})
              : SelectionCriterion(TopKCriterion{cfg.k});
      return select_features(stats, criterion);
    }
    case ReducerKind::extraction:
      return pca_fit(train, cfg.k);
    case ReducerKind::none:
      return NoReduction{static_cast<int>(train.dim())};
  }
  throw Error(errc::bad_config, "invalid reducer kind");
}

DesignMatrix apply_reducer(const Reducer& reducer, const DesignMatrix& x) {
  if (const auto* selection = std::get_if<SelectionModel>(&reducer)) {
    return apply_selection(*selection, x);
  }
  if (const auto* extraction = std::get_if<ExtractionModel>(&reducer)) {
    return pca_transform(*extraction, x);
  }
  const auto& none = std::get<NoReduction>(reducer);
  if (x.dim() != none.input_dim) {
    throw Error(errc::dimension_mismatch,
                "identity reducer fitted on D=" + std::to_string(none.input_dim) +
                    ", got D=" + std::to_string(x.dim()));
  }
  return x;
}

int reducer_output_dim(const Reducer& reducer) {
  if (const auto* selection = std::get_if<SelectionModel>(&reducer)) {
    return selection->k;
  }
  if (const auto* extraction = std::get_if<ExtractionModel>(&reducer)) {
    return static_cast<int>(extraction->k());
  }
  return std::get<NoReduction>(reducer).input_dim;
}

int reducer_input_dim(const Reducer& reducer) {
  if (const auto* selection = std::get_if<SelectionModel>(&reducer)) {
    return selection->input_dim;
  }
  if (const auto* extraction = std::get_if<ExtractionModel>(&reducer)) {
    return static_cast<int>(extraction->input_dim());
  }
  return std::get<NoReduction>(reducer).input_dim;
}

std::string reducer_label(const ReducerConfig& cfg) {
  std::ostringstream out;
  switch (cfg.kind) {
    case ReducerKind::selection:
      out << "selection_";
      if (cfg.threshold.has_value()) {
        out << "thr" << *cfg.threshold;
      } else {
        out << "top" << cfg.k;
      }
      if (cfg.averaging == CorrelationAveraging::absolute_values) {
        out << "_abs";
      }
      break;
    case ReducerKind::extraction:
      out << "extraction_k" << cfg.k;
      break;
    case ReducerKind::none:
      out << "none";
      break;
  }
  return out.str();
}

}  // namespace nids
