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

#include "nids/encoder.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "nids/error.hpp"

namespace nids {

namespace {

const std::unordered_set<std::string>& allowed_nominals() {
  static const std::unordered_set<std::string> allowed = {"proto", "service",
                                                          "state"};
  return allowed;
}

bool is_dropped(const EncoderSpec& spec, const std::string& name) {
  return std::find(spec.dropped_columns.begin(), spec.dropped_columns.end(),
                   name) != spec.dropped_columns.end();
}

}  // namespace

EncoderSpec fit_encoder(const FeatureTable& train, bool apply_minmax) {
  if (train.n_rows == 0) {
    throw Error(errc::empty_file, "cannot fit an encoder on an empty table");
  }

  EncoderSpec spec;
  spec.apply_minmax = apply_minmax;
  spec.dropped_columns = {"id", "attack_cat"};
  for (const auto& column : train.columns) {
    spec.fitted_schema.push_back({column.name, column.kind});
  }

  for (const auto& column : train.columns) {
    if (column.kind != ColumnKind::nominal || is_dropped(spec, column.name)) {
      continue;
    }
    if (!allowed_nominals().count(column.name)) {
      throw Error(errc::unexpected_nominal_column,
                  "unexpected nominal column: '" + column.name + "'");
    }
    std::set<std::string> categories(column.nominal.begin(), column.nominal.end());
    spec.onehot_maps.push_back(
        {column.name, std::vector<std::string>(categories.begin(), categories.end())});
  }

  for (const auto& column : train.columns) {
    if (is_dropped(spec, column.name) || column.kind == ColumnKind::label_binary ||
        column.kind == ColumnKind::label_category) {
      continue;
    }
    if (column.kind == ColumnKind::numeric) {
      spec.output_features.push_back(column.name);
      if (apply_minmax) {
        const auto [lo, hi] =
            std::minmax_element(column.numeric.begin(), column.numeric.end());
        spec.minmax_bounds.emplace_back(*lo, *hi);
      }
    } else {
      const auto map_it =
          std::find_if(spec.onehot_maps.begin(), spec.onehot_maps.end(),
                       [&](const auto& m) { return m.column == column.name; });
      for (const std::string& category : map_it->categories) {
        spec.output_features.push_back(column.name + "_" + category);
        if (apply_minmax) {
          const std::size_t count = static_cast<std::size_t>(
              std::count(column.nominal.begin(), column.nominal.end(), category));
          const double lo = count == train.n_rows ? 1.0 : 0.0;
          spec.minmax_bounds.emplace_back(lo, 1.0);
        }
      }
    }
  }
  return spec;
}

DesignMatrix apply_encoder(const EncoderSpec& spec, const FeatureTable& table) {
  // The table must present exactly the fitted schema (by name and kind).
  for (const auto& fitted : spec.fitted_schema) {
    const FeatureTable::Column* column = table.find(fitted.name);
    if (column == nullptr || column->kind != fitted.kind) {
      throw Error(errc::missing_column,
                  "table lacks fitted column '" + fitted.name + "'");
    }
  }
  for (const auto& column : table.columns) {
    const bool known = std::any_of(
        spec.fitted_schema.begin(), spec.fitted_schema.end(),
        [&](const ColumnSpec& c) { return c.name == column.name; });
    if (!known) {
      throw Error(errc::unexpected_column,
                  "column not seen at fit time: '" + column.name + "'");
    }
  }

  const Index n = static_cast<Index>(table.n_rows);
  const Index d = static_cast<Index>(spec.output_features.size());

  DesignMatrix out;
  out.feature_names = spec.output_features;
  out.values.setZero(d, n);

  Index row = 0;
  for (const auto& fitted : spec.fitted_schema) {
    if (is_dropped(spec, fitted.name) || fitted.kind == ColumnKind::label_binary ||
        fitted.kind == ColumnKind::label_category) {
      continue;
    }
    const FeatureTable::Column& column = *table.find(fitted.name);
    if (fitted.kind == ColumnKind::numeric) {
      for (Index j = 0; j < n; ++j) {
        out.values(row, j) = column.numeric[static_cast<std::size_t>(j)];
      }
      ++row;
    } else {
      const auto map_it =
          std::find_if(spec.onehot_maps.begin(), spec.onehot_maps.end(),
                       [&](const auto& m) { return m.column == fitted.name; });
      const auto& categories = map_it->categories;
      const Index block = static_cast<Index>(categories.size());
      for (Index j = 0; j < n; ++j) {
        const std::string& value = column.nominal[static_cast<std::size_t>(j)];
        const auto it = std::lower_bound(categories.begin(), categories.end(), value);
        // Unseen categories leave the whole indicator block at zero.
        if (it != categories.end() && *it == value) {
          out.values(row + (it - categories.begin()), j) = 1.0;
        }
      }
      row += block;
    }
  }

  if (spec.apply_minmax) {
    for (Index r = 0; r < d; ++r) {
      const auto [lo, hi] = spec.minmax_bounds[static_cast<std::size_t>(r)];
      if (hi == lo) {
        out.values.row(r).setZero();  // constant feature maps to 0
      } else {
        // Division keeps the endpoints exact: (hi-lo)/(hi-lo) == 1.0.
        out.values.row(r) = ((out.values.row(r).array() - lo) / (hi - lo))
                                .cwiseMax(0.0)
                                .cwiseMin(1.0);
      }
    }
  }

  const FeatureTable::Column* binary = nullptr;
  const FeatureTable::Column* category = nullptr;
  for (const auto& column : table.columns) {
    if (column.kind == ColumnKind::label_binary) binary = &column;
    if (column.kind == ColumnKind::label_category) category = &column;
  }
  if (binary != nullptr) {
    out.labels_binary.resize(n);
    for (Index j = 0; j < n; ++j) {
      out.labels_binary(j) = static_cast<int>(binary->numeric[static_cast<std::size_t>(j)]);
    }
  }
  if (category != nullptr) {
    const auto& classes = category_class_names();
    out.labels_multiclass.resize(n);
    for (Index j = 0; j < n; ++j) {
      const std::string& name = category->nominal[static_cast<std::size_t>(j)];
      const auto it = std::find(classes.begin(), classes.end(), name);
      out.labels_multiclass(j) = static_cast<int>(it - classes.begin());
    }
  }
  return out;
}

}  // namespace nids
