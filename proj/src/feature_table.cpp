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

#include "nids/feature_table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <unordered_map>

#include "nids/csv.hpp"
#include "nids/error.hpp"
#include "nids/types.hpp"

namespace nids {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) {
    return "";
  }
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

bool is_nominal_null(const std::string& s) { return s.empty() || s == "-"; }

double parse_numeric(const std::string& raw, std::size_t row,
                     const std::string& column) {
  const std::string s = trimmed(raw);
  if (s.empty()) {
    throw Error(errc::unparseable_cell, "row " + std::to_string(row) +
                                            ", column " + column +
                                            ": empty numeric cell");
  }
  char* end = nullptr;
  const double value = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(value)) {
    throw Error(errc::unparseable_cell, "row " + std::to_string(row) +
                                            ", column " + column +
                                            ": not a finite number: '" + s + "'");
  }
  return value;
}

}  // namespace

const Schema& unsw_nb15_schema() {
  static const Schema schema = [] {
    Schema s;
    auto num = [&s](const char* name) { s.push_back({name, ColumnKind::numeric}); };
    auto nom = [&s](const char* name) { s.push_back({name, ColumnKind::nominal}); };
    num("id");
    num("dur");
    nom("proto");
    nom("service");
    nom("state");
    for (const char* name :
         {"spkts", "dpkts", "sbytes", "dbytes", "rate", "sttl", "dttl", "sload",
          "dload", "sloss", "dloss", "sinpkt", "dinpkt", "sjit", "djit", "swin",
          "stcpb", "dtcpb", "dwin", "tcprtt", "synack", "ackdat", "smean",
          "dmean", "trans_depth", "response_body_len", "ct_srv_src",
          "ct_state_ttl", "ct_dst_ltm", "ct_src_dport_ltm", "ct_dst_sport_ltm",
          "ct_dst_src_ltm", "is_ftp_login", "ct_ftp_cmd", "ct_flw_http_mthd",
          "ct_src_ltm", "ct_srv_dst", "is_sm_ips_ports"}) {
      num(name);
    }
    s.push_back({"attack_cat", ColumnKind::label_category});
    s.push_back({"label", ColumnKind::label_binary});
    return s;
  }();
  return schema;
}

const FeatureTable::Column* FeatureTable::find(const std::string& name) const {
  for (const auto& column : columns) {
    if (column.name == name) {
      return &column;
    }
  }
  return nullptr;
}

FeatureTable load_csv(const std::string& path, const Schema& expected) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(errc::io_error, "cannot open file: " + path);
  }
  CsvReader reader(in);
  std::vector<std::string> fields;
  if (!reader.next_record(fields) ||
      (fields.size() == 1 && trimmed(fields[0]).empty())) {
    throw Error(errc::empty_file, "no header row in " + path);
  }

  std::unordered_map<std::string, std::size_t> expected_index;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    expected_index.emplace(expected[i].name, i);
  }

  // Column order follows the file; presence is validated by name.
  std::vector<std::size_t> field_to_spec(fields.size());
  std::vector<bool> seen(expected.size(), false);
  for (std::size_t f = 0; f < fields.size(); ++f) {
    const std::string name = trimmed(fields[f]);
    auto it = expected_index.find(name);
    if (it == expected_index.end()) {
      throw Error(errc::unexpected_column, "column not in schema: '" + name + "'");
    }
    if (seen[it->second]) {
      throw Error(errc::unexpected_column, "duplicate column: '" + name + "'");
    }
    seen[it->second] = true;
    field_to_spec[f] = it->second;
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (!seen[i]) {
      throw Error(errc::missing_column, "missing column: '" + expected[i].name + "'");
    }
  }

  FeatureTable table;
  table.source = path;
  table.columns.resize(fields.size());
  for (std::size_t f = 0; f < fields.size(); ++f) {
    const ColumnSpec& spec = expected[field_to_spec[f]];
    table.columns[f].name = spec.name;
    table.columns[f].kind = spec.kind;
  }

  const std::size_t n_columns = fields.size();
  const auto& categories = category_class_names();
  std::size_t row = 0;
  while (reader.next_record(fields)) {
    ++row;
    if (fields.size() == 1 && trimmed(fields[0]).empty()) {
      continue;  // stray blank line
    }
    if (fields.size() != n_columns) {
      throw Error(errc::unparseable_cell,
                  "row " + std::to_string(row) + ": expected " +
                      std::to_string(n_columns) + " fields, got " +
                      std::to_string(fields.size()));
    }
    for (std::size_t f = 0; f < n_columns; ++f) {
      FeatureTable::Column& column = table.columns[f];
      switch (column.kind) {
        case ColumnKind::numeric:
          column.numeric.push_back(parse_numeric(fields[f], row, column.name));
          break;
        case ColumnKind::label_binary: {
          const double value = parse_numeric(fields[f], row, column.name);
          if (value != 0.0 && value != 1.0) {
            throw Error(errc::unparseable_cell,
                        "row " + std::to_string(row) + ", column " + column.name +
                            ": binary label must be 0 or 1");
          }
          column.numeric.push_back(value);
          break;
        }
        case ColumnKind::nominal: {
          std::string value = trimmed(fields[f]);
          if (is_nominal_null(value)) {
            value = "other";
          }
          column.nominal.push_back(std::move(value));
          break;
        }
        case ColumnKind::label_category: {
          const std::string value = trimmed(fields[f]);
          if (std::find(categories.begin(), categories.end(), value) ==
              categories.end()) {
            throw Error(errc::unparseable_cell,
                        "row " + std::to_string(row) + ", column " + column.name +
                            ": unknown class '" + value + "'");
          }
          column.nominal.push_back(value);
          break;
        }
      }
    }
  }
  if (row == 0) {
    throw Error(errc::empty_file, "no data rows in " + path);
  }
  table.n_rows = row;
  return table;
}

}  // namespace nids
