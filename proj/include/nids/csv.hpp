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

#ifndef NIDS_CSV_HPP_
#define NIDS_CSV_HPP_

#include <istream>
#include <string>
#include <vector>

namespace nids {

/// Pull parser for RFC-4180-style CSV: comma separated, double-quote quoting
/// with "" escapes, CR/LF or LF record ends, embedded newlines inside quoted
/// fields. A UTF-8 BOM at the start of the stream is skipped.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in);

  /// Reads one record into `fields` (reused between calls).
  /// Returns false at end of input.
  bool next_record(std::vector<std::string>& fields);

 private:
  std::istream& in_;
  bool first_record_ = true;
};

/// Whole-file convenience wrapper used by tests and table parse-back.
std::vector<std::vector<std::string>> read_csv_file(const std::string& path);

}  // namespace nids

#endif  // NIDS_CSV_HPP_
