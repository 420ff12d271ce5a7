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

#ifndef NIDS_FEATURE_TABLE_HPP_
#define NIDS_FEATURE_TABLE_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace nids {

enum class ColumnKind { numeric, nominal, label_binary, label_category };

struct ColumnSpec {
  std::string name;
  ColumnKind kind;
};

using Schema = std::vector<ColumnSpec>;

/// Column layout of the UNSW-NB15 10% train/test CSV files: 45 columns, of
/// which `proto`, `service`, `state` are nominal, `label` is the 0/1 target
/// and `attack_cat` the ten-way category target.
const Schema& unsw_nb15_schema();

/// Raw mixed-type flow records, stored by column. Numeric columns (and the
/// 0/1 label) live in `numeric`, nominal columns (and the category label) in
/// `nominal`. Nominal nulls ("" or "-") have already been replaced by
/// "other" at load time, so every nominal cell is a non-empty string.
struct FeatureTable {
  struct Column {
    std::string name;
    ColumnKind kind = ColumnKind::numeric;
    std::vector<double> numeric;
    std::vector<std::string> nominal;
  };

  std::vector<Column> columns;
  std::size_t n_rows = 0;
  std::string source;

  const Column* find(const std::string& name) const;
};

/// Parses a CSV with a header row into a FeatureTable, validating it against
/// `expected`: every expected column must be present by name (the file may
/// order them freely), unknown columns are rejected, numeric cells must be
/// finite, the binary label must be 0/1 and the category label one of the
/// ten class names.
///
/// Errors: empty_file, missing_column, unexpected_column, unparseable_cell.
FeatureTable load_csv(const std::string& path, const Schema& expected);

}  // namespace nids

#endif  // NIDS_FEATURE_TABLE_HPP_
