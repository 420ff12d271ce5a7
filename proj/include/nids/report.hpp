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

#ifndef NIDS_REPORT_HPP_
#define NIDS_REPORT_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nids/metrics.hpp"
#include "nids/types.hpp"

namespace nids {

/// Everything one experiment produced. Percentages are kept at full
/// precision in memory and rounded to two decimals only when emitted.
struct EvalReport {
  std::string task;          // "binary" | "multiclass"
  std::string reducer_kind;  // "selection" | "extraction" | "none"
  int k = 0;                 // reduced dimensionality (D for "none")
  std::string classifier;

  double precision = 0.0;  // percent
  double recall = 0.0;     // percent
  double f1 = 0.0;         // percent
  std::string averaging = "weighted";
  std::vector<double> per_class_accuracy;  // percent, NaN = no true samples
  std::vector<std::string> classes;
  Eigen::MatrixXi confusion;

  Timing timing;
  int repeat = 1;
  std::uint64_t seed = 0;

  std::string fingerprint;  // hash of resolved config + dataset checksums
  std::string train_checksum;
  std::string test_checksum;
  std::size_t n_train = 0;
  std::size_t n_test = 0;
  std::map<std::string, std::string> config;  // resolved flat config
};

double round2(double value);

/// Metric and config fields only; timing excluded. Two reports from
/// identical (config, data, seed) compare equal through this view even
/// though their wall-clock timings differ.
nlohmann::json metric_fields_json(const EvalReport& report);

nlohmann::json report_to_json(const EvalReport& report);
EvalReport report_from_json(const nlohmann::json& j);

void write_reports_jsonl(const std::vector<EvalReport>& reports,
                         const std::string& path);
std::vector<EvalReport> read_reports_jsonl(const std::string& path);

}  // namespace nids

#endif  // NIDS_REPORT_HPP_
