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

#include "nids/csv.hpp"

#include <fstream>

#include "nids/error.hpp"

namespace nids {

CsvReader::CsvReader(std::istream& in) : in_(in) {}

bool CsvReader::next_record(std::vector<std::string>& fields) {
  fields.clear();
  if (first_record_) {
    first_record_ = false;
    // UTF-8 BOM
    if (in_.peek() == 0xEF) {
      char bom[3];
      in_.read(bom, 3);
      if (in_.gcount() != 3 || bom[1] != char(0xBB) || bom[2] != char(0xBF)) {
        throw Error(errc::bad_format, "malformed byte-order mark");
      }
    }
  }

  int c = in_.get();
  if (c == EOF) {
    return false;
  }

  std::string field;
  bool quoted = false;
  bool any = false;
  while (true) {
    if (quoted) {
      if (c == EOF) {
        throw Error(errc::bad_format, "unterminated quoted field");
      }
      if (c == '"') {
        const int peeked = in_.peek();
        if (peeked == '"') {
          in_.get();
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        field.push_back(static_cast<char>(c));
      }
    } else {
      if (c == EOF || c == '\n') {
        break;
      }
      if (c == '\r' && in_.peek() == '\n') {
        in_.get();
        break;
      }
      if (c == ',') {
        fields.push_back(std::move(field));
        field.clear();
      } else if (c == '"' && field.empty()) {
        quoted = true;
        any = true;
      } else {
        field.push_back(static_cast<char>(c));
      }
    }
    c = in_.get();
  }
  fields.push_back(std::move(field));
  (void)any;
  return true;
}

std::vector<std::vector<std::string>> read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(errc::io_error, "cannot open file: " + path);
  }
  CsvReader reader(in);
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> fields;
  while (reader.next_record(fields)) {
    records.push_back(fields);
  }
  return records;
}

}  // namespace nids
