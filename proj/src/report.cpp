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

#include "nids/report.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "nids/error.hpp"

namespace nids {

using nlohmann::json;

double round2(double value) { return std::round(value * 100.0) / 100.0; }

namespace {

json percent_list(const std::vector<double>& values) {
  json out = json::array();
  for (double v : values) {
    if (std::isnan(v)) {
      out.push_back(nullptr);
    } else {
      out.push_back(round2(v));
    }
  }
  return out;
}

std::vector<double> percent_list_from(const json& j) {
  std::vector<double> out;
  for (const auto& v : j) {
    out.push_back(v.is_null() ? std::numeric_limits<double>::quiet_NaN()
                              : v.get<double>());
  }
  return out;
}

json confusion_to_json(const Eigen::MatrixXi& counts) {
  json rows = json::array();
  for (Index i = 0; i < counts.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < counts.cols(); ++j) {
      row.push_back(counts(i, j));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXi confusion_from_json(const json& rows) {
  const auto r = static_cast<Index>(rows.size());
  const auto c = r > 0 ? static_cast<Index>(rows.at(0).size()) : 0;
  Eigen::MatrixXi counts(r, c);
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < c; ++j) {
      counts(i, j) = rows.at(static_cast<std::size_t>(i))
                         .at(static_cast<std::size_t>(j))
                         .get<int>();
    }
  }
  return counts;
}

}  // namespace

json metric_fields_json(const EvalReport& report) {
  json j;
  j["task"] = report.task;
  j["reducer"] = report.reducer_kind;
  j["k"] = report.k;
  j["classifier"] = report.classifier;
  j["precision"] = round2(report.precision);
  j["recall"] = round2(report.recall);
  j["f1"] = round2(report.f1);
  j["averaging"] = report.averaging;
  j["per_class_accuracy"] = percent_list(report.per_class_accuracy);
  j["classes"] = report.classes;
  j["confusion"] = confusion_to_json(report.confusion);
  j["seed"] = report.seed;
  j["fingerprint"] = report.fingerprint;
  j["train_checksum"] = report.train_checksum;
  j["test_checksum"] = report.test_checksum;
  j["n_train"] = report.n_train;
  j["n_test"] = report.n_test;
  j["config"] = report.config;
  return j;
}

json report_to_json(const EvalReport& report) {
  json j = metric_fields_json(report);
  j["timing"] = {{"fit_reducer_s", report.timing.fit_reducer_s},
                 {"fit_model_s", report.timing.fit_model_s},
                 {"transform_reducer_s", report.timing.transform_reducer_s},
                 {"predict_model_s", report.timing.predict_model_s},
                 {"training_time_s", report.timing.training_time_s},
                 {"inference_us_per_sample", report.timing.inference_us_per_sample}};
  j["repeat"] = report.repeat;
  return j;
}

EvalReport report_from_json(const json& j) {
  EvalReport r;
  r.task = j.at("task").get<std::string>();
  r.reducer_kind = j.at("reducer").get<std::string>();
  r.k = j.at("k").get<int>();
  r.classifier = j.at("classifier").get<std::string>();
  r.precision = j.at("precision").get<double>();
  r.recall = j.at("recall").get<double>();
  r.f1 = j.at("f1").get<double>();
  r.averaging = j.at("averaging").get<std::string>();
  r.per_class_accuracy = percent_list_from(j.at("per_class_accuracy"));
  r.classes = j.at("classes").get<std::vector<std::string>>();
  r.confusion = confusion_from_json(j.at("confusion"));
  r.seed = j.at("seed").get<std::uint64_t>();
  r.fingerprint = j.at("fingerprint").get<std::string>();
  r.train_checksum = j.at("train_checksum").get<std::string>();
  r.test_checksum = j.at("test_checksum").get<std::string>();
  r.n_train = j.at("n_train").get<std::size_t>();
  r.n_test = j.at("n_test").get<std::size_t>();
  r.config = j.at("config").get<std::map<std::string, std::string>>();
  if (j.contains("timing")) {
    const json& t = j.at("timing");
    r.timing.fit_reducer_s = t.at("fit_reducer_s").get<double>();
    r.timing.fit_model_s = t.at("fit_model_s").get<double>();
    r.timing.transform_reducer_s = t.at("transform_reducer_s").get<double>();
    r.timing.predict_model_s = t.at("predict_model_s").get<double>();
    r.timing.training_time_s = t.at("training_time_s").get<double>();
    r.timing.inference_us_per_sample = t.at("inference_us_per_sample").get<double>();
  }
  r.repeat = j.value("repeat", 1);
  return r;
}

void write_reports_jsonl(const std::vector<EvalReport>& reports,
                         const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw Error(errc::io_error, "cannot write " + path);
  }
  for (const EvalReport& report : reports) {
    out << report_to_json(report).dump() << '\n';
  }
}

std::vector<EvalReport> read_reports_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(errc::io_error, "cannot open " + path);
  }
  std::vector<EvalReport> reports;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    const json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      throw Error(errc::bad_format, "malformed report line in " + path);
    }
    reports.push_back(report_from_json(j));
  }
  return reports;
}

}  // namespace nids
