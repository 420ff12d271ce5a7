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

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "nids/error.hpp"
#include "nids/runner.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommonArgs {
  std::string train;
  std::string test;
  std::string out = "out";
  std::uint64_t seed = 42;
  int repeat = 3;
  bool cache = false;
};

void add_common(CLI::App* cmd, CommonArgs* args) {
  cmd->add_option("--train", args->train, "training CSV path")->required();
  cmd->add_option("--test", args->test, "testing CSV path")->required();
  cmd->add_option("--out", args->out, "output directory");
  cmd->add_option("--seed", args->seed, "RNG seed");
  cmd->add_option("--repeat", args->repeat, "timed passes per component (median reported)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--cache", args->cache, "reuse serialized reducers under <out>/cache");
  cmd->set_config("--config", "", "flat key=value config file; flags override");
}

nids::RunConfig base_config(const CommonArgs& args) {
  nids::RunConfig cfg;
  cfg.train_path = args.train;
  cfg.test_path = args.test;
  cfg.output_dir = args.out;
  cfg.seed = args.seed;
  cfg.repeat = args.repeat;
  cfg.use_disk_cache = args.cache;
  return cfg;
}

void print_report_line(const nids::EvalReport& r) {
  std::printf("%-10s %-22s %-14s P=%6.2f R=%6.2f F1=%6.2f train=%9.3fs infer=%10.3fus\n",
              r.task.c_str(),
              (r.reducer_kind + "(k=" + std::to_string(r.k) + ")").c_str(),
              r.classifier.c_str(), nids::round2(r.precision),
              nids::round2(r.recall), nids::round2(r.f1),
              r.timing.training_time_s, r.timing.inference_us_per_sample);
}

std::vector<nids::EvalReport> load_report_inputs(const std::vector<std::string>& inputs) {
  std::vector<nids::EvalReport> reports;
  for (const std::string& input : inputs) {
    if (fs::is_directory(input)) {
      std::vector<std::string> files;
      for (const auto& entry : fs::recursive_directory_iterator(input)) {
        if (entry.is_regular_file() && entry.path().extension() == ".jsonl") {
          files.push_back(entry.path().string());
        }
      }
      std::sort(files.begin(), files.end());
      for (const std::string& file : files) {
        for (nids::EvalReport& r : nids::read_reports_jsonl(file)) {
          reports.push_back(std::move(r));
        }
      }
    } else {
      for (nids::EvalReport& r : nids::read_reports_jsonl(input)) {
        reports.push_back(std::move(r));
      }
    }
  }
  return reports;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw nids::Error(nids::errc::io_error, "cannot write " + path);
  }
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"feature selection vs PCA extraction benchmark for UNSW-NB15-style flow data"};
  app.require_subcommand(1);

  // run
  auto* run_cmd = app.add_subcommand("run", "execute one experiment cell");
  CommonArgs run_args;
  add_common(run_cmd, &run_args);
  std::string run_task = "binary";
  std::string run_reducer = "none";
  std::string run_classifier = "decision_tree";
  int run_k = 8;
  double run_threshold = std::numeric_limits<double>::quiet_NaN();
  bool run_abs_corr = false;
  bool run_save_model = false;
  run_cmd->add_option("--task", run_task, "binary | multiclass")
      ->check(CLI::IsMember({"binary", "multiclass"}));
  run_cmd->add_option("--reducer", run_reducer, "selection | extraction | none")
      ->check(CLI::IsMember({"selection", "extraction", "none"}));
  run_cmd->add_option("--k", run_k, "reduced feature count (top-k / components)");
  run_cmd->add_option("--threshold", run_threshold,
                      "selection by average-correlation threshold instead of top-k");
  run_cmd->add_flag("--abs-corr", run_abs_corr,
                    "rank by average absolute correlation");
  run_cmd->add_option("--classifier", run_classifier,
                      "decision_tree | random_forest | k_neighbors | mlp | bernoulli_nb");
  run_cmd->add_flag("--save-model", run_save_model,
                    "serialize the fitted classifier under <out>/models");

  // grid
  auto* grid_cmd = app.add_subcommand("grid", "execute an experiment grid and emit tables");
  CommonArgs grid_args;
  add_common(grid_cmd, &grid_args);
  std::vector<std::string> grid_tasks = {"binary", "multiclass"};
  std::vector<std::string> grid_reducers = {"selection", "extraction"};
  std::vector<int> grid_ks = {4, 8, 16};
  std::vector<std::string> grid_classifiers;
  std::string grid_format = "both";
  bool grid_abs_corr = false;
  grid_cmd->add_option("--task", grid_tasks, "tasks to cover")
      ->check(CLI::IsMember({"binary", "multiclass"}));
  grid_cmd->add_option("--reducer", grid_reducers, "reducers to cover")
      ->check(CLI::IsMember({"selection", "extraction", "none"}));
  grid_cmd->add_option("--k", grid_ks, "reduced feature counts");
  grid_cmd->add_option("--classifier", grid_classifiers,
                       "classifiers to cover (default: all five)");
  grid_cmd->add_option("--format", grid_format, "csv | markdown | both")
      ->check(CLI::IsMember({"csv", "markdown", "both"}));
  grid_cmd->add_flag("--abs-corr", grid_abs_corr,
                     "rank by average absolute correlation");

  // report
  auto* report_cmd = app.add_subcommand("report", "render tables from stored reports");
  std::vector<std::string> report_inputs;
  std::string report_out = "out/tables";
  std::string report_format = "both";
  report_cmd->add_option("--in", report_inputs, "report JSONL files or directories")
      ->required();
  report_cmd->add_option("--out", report_out, "table output directory");
  report_cmd->add_option("--format", report_format, "csv | markdown | both")
      ->check(CLI::IsMember({"csv", "markdown", "both"}));

  // compare
  auto* compare_cmd =
      app.add_subcommand("compare", "method-vs-method summary from stored reports");
  std::vector<std::string> compare_inputs;
  std::string compare_out;
  compare_cmd->add_option("--in", compare_inputs, "report JSONL files or directories")
      ->required();
  compare_cmd->add_option("--out", compare_out,
                          "directory for comparison.json / comparison.md");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << json{{"error", "bad_arguments"}, {"message", e.what()}}.dump()
              << std::endl;
    return 2;
  }

  try {
    if (run_cmd->parsed()) {
      nids::RunConfig cfg = base_config(run_args);
      cfg.task = nids::task_from_string(run_task);
      cfg.reducer.kind = nids::reducer_kind_from_string(run_reducer);
      cfg.reducer.k = run_k;
      if (!std::isnan(run_threshold)) {
        if (cfg.reducer.kind != nids::ReducerKind::selection) {
          throw nids::Error(nids::errc::bad_config,
                            "--threshold applies to the selection reducer only");
        }
        cfg.reducer.threshold = run_threshold;
      }
      cfg.reducer.averaging = run_abs_corr
                                  ? nids::CorrelationAveraging::absolute_values
                                  : nids::CorrelationAveraging::signed_values;
      cfg.classifier.kind = nids::classifier_from_string(run_classifier);

      cfg.save_model = run_save_model;
      const nids::EvalReport report = nids::run_experiment(cfg);
      print_report_line(report);
      return 0;
    }

    if (grid_cmd->parsed()) {
      nids::RunConfig base = base_config(grid_args);

      std::vector<nids::Task> tasks;
      for (const std::string& t : grid_tasks) {
        tasks.push_back(nids::task_from_string(t));
      }
      std::vector<nids::ReducerConfig> reducers;
      for (const std::string& r : grid_reducers) {
        const nids::ReducerKind kind = nids::reducer_kind_from_string(r);
        if (kind == nids::ReducerKind::none) {
          reducers.push_back({kind, 0, std::nullopt,
                              nids::CorrelationAveraging::signed_values});
          continue;
        }
        for (int k : grid_ks) {
          nids::ReducerConfig rc;
          rc.kind = kind;
          rc.k = k;
          rc.averaging = grid_abs_corr
                             ? nids::CorrelationAveraging::absolute_values
                             : nids::CorrelationAveraging::signed_values;
          reducers.push_back(rc);
        }
      }
      std::vector<nids::ClassifierSpec> classifiers;
      const std::vector<std::string> classifier_names =
          grid_classifiers.empty()
              ? std::vector<std::string>{"decision_tree", "random_forest",
                                         "k_neighbors", "mlp", "bernoulli_nb"}
              : grid_classifiers;
      for (const std::string& name : classifier_names) {
        nids::ClassifierSpec spec;
        spec.kind = nids::classifier_from_string(name);
        classifiers.push_back(spec);
      }

      const nids::GridResult result =
          nids::run_grid(base, tasks, reducers, classifiers, print_report_line);

      for (const nids::GridFailure& failure : result.failures) {
        std::cerr << json{{"error", failure.code},
                          {"cell", failure.cell},
                          {"message", failure.message}}
                         .dump()
                  << std::endl;
      }
      if (result.reports.empty()) {
        throw nids::Error(nids::errc::no_reports, "every grid cell failed");
      }

      fs::create_directories(base.output_dir);
      nids::write_reports_jsonl(result.reports, base.output_dir + "/reports.jsonl");
      const std::string table_dir = base.output_dir + "/tables";
      if (grid_format == "csv" || grid_format == "both") {
        nids::emit_tables(result.reports, nids::TableFormat::csv, table_dir);
      }
      if (grid_format == "markdown" || grid_format == "both") {
        nids::emit_tables(result.reports, nids::TableFormat::markdown, table_dir);
      }
      try {
        const nids::ComparisonSummary summary = nids::compare_runs(result.reports);
        write_text(base.output_dir + "/comparison.json",
                   nids::summary_to_json(summary).dump(2) + "\n");
        write_text(base.output_dir + "/comparison.md",
                   nids::summary_to_markdown(summary));
      } catch (const nids::Error& e) {
        if (e.code() != nids::errc::insufficient_coverage) {
          throw;
        }
        // A partial grid has no comparison; reports and tables still land.
      }
      std::printf("wrote %zu reports to %s\n", result.reports.size(),
                  (base.output_dir + "/reports.jsonl").c_str());
      return 0;
    }

    if (report_cmd->parsed()) {
      const std::vector<nids::EvalReport> reports = load_report_inputs(report_inputs);
      std::vector<std::string> written;
      if (report_format == "csv" || report_format == "both") {
        auto paths = nids::emit_tables(reports, nids::TableFormat::csv, report_out);
        written.insert(written.end(), paths.begin(), paths.end());
      }
      if (report_format == "markdown" || report_format == "both") {
        auto paths = nids::emit_tables(reports, nids::TableFormat::markdown, report_out);
        written.insert(written.end(), paths.begin(), paths.end());
      }
      for (const std::string& path : written) {
        std::printf("%s\n", path.c_str());
      }
      return 0;
    }

    if (compare_cmd->parsed()) {
      const std::vector<nids::EvalReport> reports = load_report_inputs(compare_inputs);
      const nids::ComparisonSummary summary = nids::compare_runs(reports);
      const std::string markdown = nids::summary_to_markdown(summary);
      std::cout << markdown;
      if (!compare_out.empty()) {
        fs::create_directories(compare_out);
        write_text(compare_out + "/comparison.json",
                   nids::summary_to_json(summary).dump(2) + "\n");
        write_text(compare_out + "/comparison.md", markdown);
      }
      return 0;
    }
  } catch (const nids::Error& e) {
    std::cerr << json{{"error", e.code()}, {"message", e.what()}}.dump() << std::endl;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal_error"}, {"message", e.what()}}.dump()
              << std::endl;
    return 1;
  }
  return 0;
}
