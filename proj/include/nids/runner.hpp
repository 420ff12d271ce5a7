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

#ifndef NIDS_RUNNER_HPP_
#define NIDS_RUNNER_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nids/classifiers/classifier.hpp"
#include "nids/reducer.hpp"
#include "nids/report.hpp"
#include "nids/types.hpp"

namespace nids {

struct RunConfig {
  std::string train_path;
  std::string test_path;
  Task task = Task::binary;
  ReducerConfig reducer;
  ClassifierSpec classifier;
  std::uint64_t seed = 42;
  int repeat = 3;  // timed passes; the median of each component is reported
  std::string output_dir = "out";
  bool write_report = true;      // persist one JSON-lines file per run
  bool use_disk_cache = false;   // reuse serialized reducers across processes
  bool save_model = false;       // serialize the fitted classifier under <out>/models
};

/// Shares loaded tables, fitted encoders and fitted reducers between grid
/// cells of one process. Encoded matrices are keyed by the min-max flag,
/// reducers by their full config; reducer fit timings are attributed to
/// every cell that reuses the fit.
class PipelineCache;
std::shared_ptr<PipelineCache> make_pipeline_cache();

/// Ingest -> reduce -> fit -> predict -> metrics for one configuration.
/// Timing components are medians over `repeat` timed passes; the metrics
/// come from the first pass (later passes are bit-identical by
/// construction). Fit-side reducer time includes transforming the training
/// set; test-side transform time is measured separately from prediction.
EvalReport run_experiment(const RunConfig& cfg,
                          const std::shared_ptr<PipelineCache>& cache = nullptr);

struct GridFailure {
  std::string cell;
  std::string code;
  std::string message;
};

struct GridResult {
  std::vector<EvalReport> reports;
  std::vector<GridFailure> failures;
};

/// Cartesian product of tasks x reducers x classifiers over the base config.
/// Encoders and reducers are fitted once per distinct configuration and
/// reused. A failing cell is recorded and the grid continues. `on_report`,
/// when set, fires after each completed cell.
GridResult run_grid(const RunConfig& base, const std::vector<Task>& tasks,
                    const std::vector<ReducerConfig>& reducers,
                    const std::vector<ClassifierSpec>& classifiers,
                    const std::function<void(const EvalReport&)>& on_report = {});

enum class TableFormat { csv, markdown };

std::string to_string(TableFormat format);
TableFormat table_format_from_string(const std::string& name);

/// One method-versus-method table for reports sharing (task, K): five
/// classifier rows, P/R/F1/training/inference columns per reducer.
/// Errors: no_reports, mixed_task_reports.
std::string render_method_table(const std::vector<EvalReport>& reports,
                                TableFormat format);

/// Writes every (task, K) table plus per-class accuracy tables (best
/// classifier per reducer at each K) under out_dir. Returns written paths.
std::vector<std::string> emit_tables(const std::vector<EvalReport>& reports,
                                     TableFormat format,
                                     const std::string& out_dir);

/// Method-versus-method flags recomputed from the reports, never hand-set.
struct ComparisonSummary {
  struct MethodAtK {
    double best_f1 = 0.0;
    std::string best_classifier;
  };
  struct TaskSummary {
    std::map<int, MethodAtK> selection;   // keyed by K
    std::map<int, MethodAtK> extraction;
    std::map<int, std::string> f1_winner;  // "selection" | "extraction" | "tie"
    double selection_f1_range = 0.0;    // max - min of best F1 across K
    double extraction_f1_range = 0.0;
    std::string less_sensitive;          // method with the smaller range
    double selection_median_training_s = 0.0;
    double extraction_median_training_s = 0.0;
    double selection_median_inference_us = 0.0;
    double extraction_median_inference_us = 0.0;
    std::string lower_training_time;
    std::string lower_inference_time;
    std::string best_classifier_selection;   // by best F1 over all K
    std::string best_classifier_extraction;
  };
  std::map<std::string, TaskSummary> tasks;  // keyed by task name
};

/// Requires reports covering both reducers at two or more shared K values
/// per task (Error insufficient_coverage otherwise).
ComparisonSummary compare_runs(const std::vector<EvalReport>& reports);

nlohmann::json summary_to_json(const ComparisonSummary& summary);
std::string summary_to_markdown(const ComparisonSummary& summary);

}  // namespace nids

#endif  // NIDS_RUNNER_HPP_
