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

#ifndef NIDS_ERROR_HPP_
#define NIDS_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace nids {

/// Exception carrying a stable machine-readable code next to the human
/// message. The CLI serializes these as JSON lines on stderr.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

namespace errc {
inline constexpr const char* empty_file = "empty_file";
inline constexpr const char* missing_column = "missing_column";
inline constexpr const char* unexpected_column = "unexpected_column";
inline constexpr const char* unparseable_cell = "unparseable_cell";
inline constexpr const char* unexpected_nominal_column = "unexpected_nominal_column";
inline constexpr const char* dimension_mismatch = "dimension_mismatch";
inline constexpr const char* empty_selection = "empty_selection";
inline constexpr const char* not_symmetric = "not_symmetric";
inline constexpr const char* no_convergence = "no_convergence";
inline constexpr const char* single_class_input = "single_class_input";
inline constexpr const char* non_finite_feature = "non_finite_feature";
inline constexpr const char* length_mismatch = "length_mismatch";
inline constexpr const char* unknown_label = "unknown_label";
inline constexpr const char* no_reports = "no_reports";
inline constexpr const char* mixed_task_reports = "mixed_task_reports";
inline constexpr const char* insufficient_coverage = "insufficient_coverage";
inline constexpr const char* io_error = "io_error";
inline constexpr const char* bad_format = "bad_format";
inline constexpr const char* bad_config = "bad_config";
}  // namespace errc

}  // namespace nids

#endif  // NIDS_ERROR_HPP_
