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

#include "nids/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "nids/encoder.hpp"
#include "nids/error.hpp"
#include "nids/hash.hpp"
#include "nids/model_io.hpp"

namespace nids {

namespace fs = std::filesystem;

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::string classifier_display_name(const std::string& kind) {
  if (kind == "decision_tree") return "Decision Tree";
  if (kind == "random_forest") return "Random Forest";
  if (kind == "k_neighbors") return "KNeighbors";
  if (kind == "mlp") return "MLP";
  if (kind == "bernoulli_nb") return "Naive Bayes";
  return kind;
}

std::string format2(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", round2(value));
  return std::string(buf);
}

}  // namespace

std::string to_string(TableFormat format) {
  return format == TableFormat::csv ? "csv" : "markdown";
}

TableFormat table_format_from_string(const std::string& name) {
  if (name == "csv") return TableFormat::csv;
  if (name == "markdown" || name == "md") return TableFormat::markdown;
  throw Error(errc::bad_config, "unknown table format: " + name);
}

// ---------------------------------------------------------------------------
// Pipeline cache

class PipelineCache {
 public:
  struct EncodedPair {
    DesignMatrix train;
    DesignMatrix test;
    std::string train_checksum;
    std::string test_checksum;
  };

  struct FittedReducer {
    Reducer reducer;
    DesignMatrix train_reduced;
    double fit_seconds_median = 0.0;
    int repeat = 1;
  };

  std::unordered_map<std::string, std::shared_ptr<const EncodedPair>> encoded;
  std::unordered_map<std::string, std::shared_ptr<const FittedReducer>> reducers;
};

std::shared_ptr<PipelineCache> make_pipeline_cache() {
  return std::make_shared<PipelineCache>();
}

namespace {

std::map<std::string, std::string> resolved_config(const RunConfig& cfg) {
  std::map<std::string, std::string> config;
  config["train"] = cfg.train_path;
  config["test"] = cfg.test_path;
  config["task"] = to_string(cfg.task);
  config["reducer"] = to_string(cfg.reducer.kind);
  if (cfg.reducer.kind != ReducerKind::none) {
    if (cfg.reducer.kind == ReducerKind::selection && cfg.reducer.threshold) {
      std::ostringstream t;
      t << *cfg.reducer.threshold;
      config["threshold"] = t.str();
    } else {
      config["k"] = std::to_string(cfg.reducer.k);
    }
  }
  if (cfg.reducer.kind == ReducerKind::selection) {
    config["averaging"] = to_string(cfg.reducer.averaging);
  }
  config["minmax"] = cfg.reducer.kind == ReducerKind::extraction ? "1" : "0";
  config["classifier"] = to_string(cfg.classifier.kind);
  switch (cfg.classifier.kind) {
    case ClassifierKind::decision_tree:
      config["tree_max_depth"] = std::to_string(cfg.classifier.tree.max_depth);
      break;
    case ClassifierKind::random_forest:
      config["forest_n_trees"] = std::to_string(cfg.classifier.forest.n_trees);
      config["forest_max_depth"] = std::to_string(cfg.classifier.forest.max_depth);
      config["forest_bootstrap"] = cfg.classifier.forest.bootstrap ? "1" : "0";
      config["forest_sqrt_features"] = cfg.classifier.forest.sqrt_features ? "1" : "0";
      break;
    case ClassifierKind::k_neighbors:
      config["knn_k"] = std::to_string(cfg.classifier.knn.k);
      config["knn_predict_block"] = std::to_string(kKnnPredictBlock);
      break;
    case ClassifierKind::mlp:
      config["mlp_hidden_units"] = std::to_string(cfg.classifier.mlp.hidden_units);
      config["mlp_max_epochs"] = std::to_string(cfg.classifier.mlp.max_epochs);
      config["mlp_batch_size"] = std::to_string(cfg.classifier.mlp.batch_size);
      break;
    case ClassifierKind::bernoulli_nb: {
      std::ostringstream a;
      a << cfg.classifier.nb.alpha << "/" << cfg.classifier.nb.binarize_threshold;
      config["nb_alpha_binarize"] = a.str();
      break;
    }
  }
  config["seed"] = std::to_string(cfg.seed);
  config["repeat"] = std::to_string(cfg.repeat);
  return config;
}

std::string config_fingerprint(const std::map<std::string, std::string>& config,
                               const std::string& train_checksum,
                               const std::string& test_checksum) {
  std::string blob;
  for (const auto& [key, value] : config) {
    blob += key;
    blob += '=';
    blob += value;
    blob += ';';
  }
  blob += train_checksum;
  blob += ';';
  blob += test_checksum;
  return to_hex(fnv1a64(blob));
}

std::shared_ptr<const PipelineCache::EncodedPair> encoded_pair(
    PipelineCache& cache, const RunConfig& cfg, bool minmax) {
  const std::string key =
      cfg.train_path + "|" + cfg.test_path + "|" + (minmax ? "minmax" : "raw");
  if (auto it = cache.encoded.find(key); it != cache.encoded.end()) {
    return it->second;
  }
  auto pair = std::make_shared<PipelineCache::EncodedPair>();
  pair->train_checksum = file_checksum(cfg.train_path);
  pair->test_checksum = file_checksum(cfg.test_path);
  const FeatureTable train_table = load_csv(cfg.train_path, unsw_nb15_schema());
  const FeatureTable test_table = load_csv(cfg.test_path, unsw_nb15_schema());
  const EncoderSpec spec = fit_encoder(train_table, minmax);
  pair->train = apply_encoder(spec, train_table);
  pair->test = apply_encoder(spec, test_table);
  cache.encoded.emplace(key, pair);
  return pair;
}

std::shared_ptr<const PipelineCache::FittedReducer> fitted_reducer(
    PipelineCache& cache, const RunConfig& cfg, const DesignMatrix& train,
    const std::string& data_key) {
  const std::string key = reducer_label(cfg.reducer) + "|" + data_key;
  if (auto it = cache.reducers.find(key); it != cache.reducers.end()) {
    return it->second;
  }

  auto fitted = std::make_shared<PipelineCache::FittedReducer>();
  fitted->repeat = cfg.repeat;

  const std::string cache_file =
      cfg.output_dir + "/cache/" + reducer_label(cfg.reducer) + "_" +
      to_hex(fnv1a64(data_key)) + ".bin";
  if (cfg.use_disk_cache && fs::exists(cache_file)) {
    std::map<std::string, std::string> meta;
    fitted->reducer = load_reducer(cache_file, &meta);
    fitted->train_reduced = apply_reducer(fitted->reducer, train);
    fitted->fit_seconds_median = std::stod(meta.at("fit_seconds_median"));
  } else {
    std::vector<double> fit_seconds;
    for (int pass = 0; pass < cfg.repeat; ++pass) {
      const Stopwatch sw;
      Reducer reducer = fit_reducer(cfg.reducer, train);
      DesignMatrix reduced = apply_reducer(reducer, train);
      fit_seconds.push_back(sw.seconds());
      if (pass == 0) {
        fitted->reducer = std::move(reducer);
        fitted->train_reduced = std::move(reduced);
      }
    }
    fitted->fit_seconds_median = median(fit_seconds);
    if (cfg.use_disk_cache) {
      fs::create_directories(fs::path(cache_file).parent_path());
      char seconds[32];
      std::snprintf(seconds, sizeof(seconds), "%.17g", fitted->fit_seconds_median);
      save_reducer(fitted->reducer, cache_file,
                   {{"fit_seconds_median", seconds},
                    {"label", reducer_label(cfg.reducer)}});
    }
  }
  cache.reducers.emplace(key, fitted);
  return fitted;
}

}  // namespace

EvalReport run_experiment(const RunConfig& cfg,
                          const std::shared_ptr<PipelineCache>& cache) {
  const std::shared_ptr<PipelineCache> local =
      cache != nullptr ? cache : make_pipeline_cache();

  const bool minmax = cfg.reducer.kind == ReducerKind::extraction;
  const auto encoded = encoded_pair(*local, cfg, minmax);
  const std::string data_key = cfg.train_path + "|" + cfg.test_path + "|" +
                               (minmax ? "minmax" : "raw") + "|" +
                               encoded->train_checksum;

  // Reducer fit (plus training-set transform), median over timed passes.
  const auto reducer = fitted_reducer(*local, cfg, encoded->train, data_key);

  ClassifierSpec spec = cfg.classifier;
  spec.seed = cfg.seed;

  const IntVector& y_train = labels_for(reducer->train_reduced, cfg.task);
  std::vector<double> fit_seconds;
  TrainedModel model;
  for (int pass = 0; pass < cfg.repeat; ++pass) {
    const Stopwatch sw;
    TrainedModel fitted =
        fit_classifier(spec, reducer->train_reduced.values, y_train,
                       static_cast<int>(class_names(cfg.task).size()));
    fit_seconds.push_back(sw.seconds());
    if (pass == 0) {
      model = std::move(fitted);
    }
  }

  std::vector<double> transform_seconds;
  DesignMatrix u_test;
  for (int pass = 0; pass < cfg.repeat; ++pass) {
    const Stopwatch sw;
    DesignMatrix transformed = apply_reducer(reducer->reducer, encoded->test);
    transform_seconds.push_back(sw.seconds());
    if (pass == 0) {
      u_test = std::move(transformed);
    }
  }

  std::vector<double> predict_seconds;
  IntVector predictions;
  for (int pass = 0; pass < cfg.repeat; ++pass) {
    const Stopwatch sw;
    IntVector predicted = predict(model, u_test.values);
    predict_seconds.push_back(sw.seconds());
    if (pass == 0) {
      predictions = std::move(predicted);
    }
  }

  const IntVector& y_test = labels_for(u_test, cfg.task);
  const ConfusionMatrix cm = confusion(y_test, predictions, class_names(cfg.task));
  const Prf prf = aggregate_prf(cm, Averaging::weighted);
  const Vector per_class = per_class_accuracy(cm);

  EvalReport report;
  report.task = to_string(cfg.task);
  report.reducer_kind = to_string(cfg.reducer.kind);
  report.k = reducer_output_dim(reducer->reducer);
  report.classifier = to_string(cfg.classifier.kind);
  report.precision = prf.precision;
  report.recall = prf.recall;
  report.f1 = prf.f1;
  report.averaging = to_string(Averaging::weighted);
  report.per_class_accuracy.assign(per_class.data(), per_class.data() + per_class.size());
  report.classes = cm.classes;
  report.confusion = cm.counts;
  report.timing =
      compose_timing(reducer->fit_seconds_median, median(fit_seconds),
                     median(transform_seconds), median(predict_seconds),
                     u_test.samples());
  report.repeat = cfg.repeat;
  report.seed = cfg.seed;
  report.train_checksum = encoded->train_checksum;
  report.test_checksum = encoded->test_checksum;
  report.n_train = static_cast<std::size_t>(encoded->train.samples());
  report.n_test = static_cast<std::size_t>(u_test.samples());
  report.config = resolved_config(cfg);
  report.fingerprint = config_fingerprint(report.config, report.train_checksum,
                                          report.test_checksum);

  if (cfg.write_report) {
    const fs::path dir = fs::path(cfg.output_dir) / "runs";
    fs::create_directories(dir);
    const std::string name = "run_" + report.task + "_" +
                             reducer_label(cfg.reducer) + "_" + report.classifier +
                             "_" + report.fingerprint + ".jsonl";
    write_reports_jsonl({report}, (dir / name).string());
  }
  if (cfg.save_model) {
    const fs::path dir = fs::path(cfg.output_dir) / "models";
    fs::create_directories(dir);
    const std::string name = "model_" + report.task + "_" +
                             reducer_label(cfg.reducer) + "_" + report.classifier +
                             "_" + report.fingerprint + ".bin";
    save_model(model, (dir / name).string(),
               {{"fingerprint", report.fingerprint}, {"task", report.task}});
  }
  return report;
}

GridResult run_grid(const RunConfig& base, const std::vector<Task>& tasks,
                    const std::vector<ReducerConfig>& reducers,
                    const std::vector<ClassifierSpec>& classifiers,
                    const std::function<void(const EvalReport&)>& on_report) {
  if (tasks.empty() || reducers.empty() || classifiers.empty()) {
    throw Error(errc::bad_config, "grid axes must be non-empty");
  }
  GridResult result;
  auto cache = make_pipeline_cache();
  for (const Task task : tasks) {
    for (const ReducerConfig& reducer : reducers) {
      for (const ClassifierSpec& classifier : classifiers) {
        RunConfig cfg = base;
        cfg.task = task;
        cfg.reducer = reducer;
        cfg.classifier = classifier;
        const std::string cell = to_string(task) + "/" + reducer_label(reducer) +
                                 "/" + to_string(classifier.kind);
        try {
          result.reports.push_back(run_experiment(cfg, cache));
          if (on_report) {
            on_report(result.reports.back());
          }
        } catch (const Error& e) {
          result.failures.push_back({cell, e.code(), e.what()});
        } catch (const std::exception& e) {
          result.failures.push_back({cell, "internal_error", e.what()});
        }
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Tables

namespace {

const EvalReport* find_cell(const std::vector<EvalReport>& reports,
                            const std::string& reducer_kind,
                            const std::string& classifier) {
  for (const EvalReport& r : reports) {
    if (r.reducer_kind == reducer_kind && r.classifier == classifier) {
      return &r;
    }
  }
  return nullptr;
}

void append_metric_cells(std::vector<std::string>& cells, const EvalReport* r) {
  if (r == nullptr) {
    cells.insert(cells.end(), 5, "n/a");
    return;
  }
  cells.push_back(format2(r->precision));
  cells.push_back(format2(r->recall));
  cells.push_back(format2(r->f1));
  cells.push_back(format2(r->timing.training_time_s));
  cells.push_back(format2(r->timing.inference_us_per_sample));
}

std::string render_rows(const std::vector<std::vector<std::string>>& rows,
                        TableFormat format) {
  std::ostringstream out;
  if (format == TableFormat::csv) {
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i > 0 ? "," : "") << row[i];
      }
      out << '\n';
    }
  } else {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      out << "| ";
      for (std::size_t i = 0; i < rows[r].size(); ++i) {
        out << (i > 0 ? " | " : "") << rows[r][i];
      }
      out << " |\n";
      if (r == 0) {
        out << "|";
        for (std::size_t i = 0; i < rows[0].size(); ++i) {
          out << "---|";
        }
        out << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace

std::string render_method_table(const std::vector<EvalReport>& reports,
                                TableFormat format) {
  if (reports.empty()) {
    throw Error(errc::no_reports, "no reports to tabulate");
  }
  for (const EvalReport& r : reports) {
    if (r.task != reports.front().task || r.k != reports.front().k) {
      throw Error(errc::mixed_task_reports,
                  "reports mix tasks or K values in one table");
    }
  }

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"Models", "FE P", "FE R", "FE F1", "FE training (s)",
                  "FE inference (us)", "FS P", "FS R", "FS F1", "FS training (s)",
                  "FS inference (us)"});
  for (const ClassifierKind kind : all_classifier_kinds()) {
    const std::string name = to_string(kind);
    std::vector<std::string> cells{classifier_display_name(name)};
    append_metric_cells(cells, find_cell(reports, "extraction", name));
    append_metric_cells(cells, find_cell(reports, "selection", name));
    rows.push_back(std::move(cells));
  }
  return render_rows(rows, format);
}

namespace {

struct BestCell {
  const EvalReport* report = nullptr;
};

// Best-F1 report per (reducer, k); F1 ties resolve by classifier list order.
const EvalReport* best_report(const std::vector<const EvalReport*>& cell_reports) {
  const EvalReport* best = nullptr;
  for (const ClassifierKind kind : all_classifier_kinds()) {
    for (const EvalReport* r : cell_reports) {
      if (r->classifier != to_string(kind)) {
        continue;
      }
      if (best == nullptr || r->f1 > best->f1) {
        best = r;
      }
    }
  }
  return best;
}

std::string per_class_value(const EvalReport& r, std::size_t class_index) {
  const double v = r.per_class_accuracy[class_index];
  return std::isnan(v) ? "n/a" : format2(v);
}

}  // namespace

std::vector<std::string> emit_tables(const std::vector<EvalReport>& reports,
                                     TableFormat format,
                                     const std::string& out_dir) {
  if (reports.empty()) {
    throw Error(errc::no_reports, "no reports to tabulate");
  }
  fs::create_directories(out_dir);
  const std::string ext = format == TableFormat::csv ? ".csv" : ".md";
  std::vector<std::string> written;

  std::map<std::pair<std::string, int>, std::vector<EvalReport>> groups;
  for (const EvalReport& r : reports) {
    if (r.reducer_kind == "none") {
      continue;
    }
    groups[{r.task, r.k}].push_back(r);
  }

  for (const auto& [key, group] : groups) {
    const auto& [task, k] = key;
    const std::string path =
        out_dir + "/" + task + "_k" + std::to_string(k) + ext;
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
      throw Error(errc::io_error, "cannot write " + path);
    }
    out << render_method_table(group, format);
    written.push_back(path);
  }

  // Per-class accuracy of the best classifier per (reducer, K).
  std::map<std::string, std::map<std::pair<std::string, int>, const EvalReport*>> best;
  for (const auto& [key, group] : groups) {
    const auto& [task, k] = key;
    for (const std::string method : {"extraction", "selection"}) {
      std::vector<const EvalReport*> cell_reports;
      for (const EvalReport& r : group) {
        if (r.reducer_kind == method) {
          cell_reports.push_back(&r);
        }
      }
      if (!cell_reports.empty()) {
        best[task][{method, k}] = best_report(cell_reports);
      }
    }
  }

  for (const auto& [task, cells] : best) {
    const std::vector<std::string>& classes =
        cells.begin()->second->classes;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"Class"};
    for (const auto& [method_k, report] : cells) {
      header.push_back(method_k.first + " K=" + std::to_string(method_k.second) +
                       " (" + classifier_display_name(report->classifier) + ")");
    }
    rows.push_back(std::move(header));
    for (std::size_t c = 0; c < classes.size(); ++c) {
      std::vector<std::string> row{classes[c]};
      for (const auto& [method_k, report] : cells) {
        row.push_back(per_class_value(*report, c));
      }
      rows.push_back(std::move(row));
    }
    std::vector<std::string> avg{"Average"};
    for (const auto& [method_k, report] : cells) {
      avg.push_back(format2(report->recall));
    }
    rows.push_back(std::move(avg));

    const std::string path = out_dir + "/per_class_" + task + ext;
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
      throw Error(errc::io_error, "cannot write " + path);
    }
    out << render_rows(rows, format);
    written.push_back(path);
  }
  return written;
}

// ---------------------------------------------------------------------------
// Comparison

ComparisonSummary compare_runs(const std::vector<EvalReport>& reports) {
  std::map<std::string, std::vector<const EvalReport*>> by_task;
  for (const EvalReport& r : reports) {
    if (r.reducer_kind == "selection" || r.reducer_kind == "extraction") {
      by_task[r.task].push_back(&r);
    }
  }
  if (by_task.empty()) {
    throw Error(errc::insufficient_coverage, "no selection/extraction reports");
  }

  ComparisonSummary summary;
  for (const auto& [task, task_reports] : by_task) {
    ComparisonSummary::TaskSummary ts;

    std::map<std::pair<std::string, int>, std::vector<const EvalReport*>> cells;
    for (const EvalReport* r : task_reports) {
      cells[{r->reducer_kind, r->k}].push_back(r);
    }

    std::vector<int> shared_ks;
    for (const auto& [key, cell] : cells) {
      if (key.first == "selection" && cells.count({"extraction", key.second})) {
        shared_ks.push_back(key.second);
      }
    }
    if (shared_ks.size() < 2) {
      throw Error(errc::insufficient_coverage,
                  "task " + task + " needs both reducers at two or more K values");
    }

    for (const int k : shared_ks) {
      const EvalReport* sel = best_report(cells[{"selection", k}]);
      const EvalReport* ext = best_report(cells[{"extraction", k}]);
      ts.selection[k] = {sel->f1, sel->classifier};
      ts.extraction[k] = {ext->f1, ext->classifier};
      ts.f1_winner[k] = sel->f1 == ext->f1 ? "tie"
                        : sel->f1 > ext->f1 ? "selection"
                                            : "extraction";
    }

    auto f1_range = [](const std::map<int, ComparisonSummary::MethodAtK>& per_k) {
      double lo = per_k.begin()->second.best_f1;
      double hi = lo;
      for (const auto& [k, at_k] : per_k) {
        lo = std::min(lo, at_k.best_f1);
        hi = std::max(hi, at_k.best_f1);
      }
      return hi - lo;
    };
    ts.selection_f1_range = f1_range(ts.selection);
    ts.extraction_f1_range = f1_range(ts.extraction);
    ts.less_sensitive = ts.extraction_f1_range == ts.selection_f1_range ? "tie"
                        : ts.extraction_f1_range < ts.selection_f1_range
                            ? "extraction"
                            : "selection";

    std::vector<double> sel_train, ext_train, sel_infer, ext_infer;
    const EvalReport* best_sel = nullptr;
    const EvalReport* best_ext = nullptr;
    for (const EvalReport* r : task_reports) {
      if (r->reducer_kind == "selection") {
        sel_train.push_back(r->timing.training_time_s);
        sel_infer.push_back(r->timing.inference_us_per_sample);
        if (best_sel == nullptr || r->f1 > best_sel->f1 ||
            (r->f1 == best_sel->f1 && r->classifier < best_sel->classifier)) {
          best_sel = r;
        }
      } else {
        ext_train.push_back(r->timing.training_time_s);
        ext_infer.push_back(r->timing.inference_us_per_sample);
        if (best_ext == nullptr || r->f1 > best_ext->f1 ||
            (r->f1 == best_ext->f1 && r->classifier < best_ext->classifier)) {
          best_ext = r;
        }
      }
    }
    ts.selection_median_training_s = median(sel_train);
    ts.extraction_median_training_s = median(ext_train);
    ts.selection_median_inference_us = median(sel_infer);
    ts.extraction_median_inference_us = median(ext_infer);
    ts.lower_training_time =
        ts.selection_median_training_s == ts.extraction_median_training_s ? "tie"
        : ts.selection_median_training_s < ts.extraction_median_training_s
            ? "selection"
            : "extraction";
    ts.lower_inference_time =
        ts.selection_median_inference_us == ts.extraction_median_inference_us
            ? "tie"
        : ts.selection_median_inference_us < ts.extraction_median_inference_us
            ? "selection"
            : "extraction";
    ts.best_classifier_selection = best_sel->classifier;
    ts.best_classifier_extraction = best_ext->classifier;

    summary.tasks.emplace(task, std::move(ts));
  }
  return summary;
}

nlohmann::json summary_to_json(const ComparisonSummary& summary) {
  nlohmann::json j;
  for (const auto& [task, ts] : summary.tasks) {
    nlohmann::json t;
    for (const auto& [k, at_k] : ts.selection) {
      const std::string key = std::to_string(k);
      t["per_k"][key]["selection_best_f1"] = round2(at_k.best_f1);
      t["per_k"][key]["selection_best_classifier"] = at_k.best_classifier;
      t["per_k"][key]["extraction_best_f1"] = round2(ts.extraction.at(k).best_f1);
      t["per_k"][key]["extraction_best_classifier"] =
          ts.extraction.at(k).best_classifier;
      t["per_k"][key]["f1_winner"] = ts.f1_winner.at(k);
    }
    t["selection_f1_range"] = round2(ts.selection_f1_range);
    t["extraction_f1_range"] = round2(ts.extraction_f1_range);
    t["less_sensitive_to_k"] = ts.less_sensitive;
    t["selection_median_training_s"] = ts.selection_median_training_s;
    t["extraction_median_training_s"] = ts.extraction_median_training_s;
    t["selection_median_inference_us"] = ts.selection_median_inference_us;
    t["extraction_median_inference_us"] = ts.extraction_median_inference_us;
    t["lower_training_time"] = ts.lower_training_time;
    t["lower_inference_time"] = ts.lower_inference_time;
    t["best_classifier_selection"] = ts.best_classifier_selection;
    t["best_classifier_extraction"] = ts.best_classifier_extraction;
    j[task] = std::move(t);
  }
  return j;
}

std::string summary_to_markdown(const ComparisonSummary& summary) {
  std::ostringstream out;
  for (const auto& [task, ts] : summary.tasks) {
    out << "## " << task << "\n\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"K", "extraction best F1 (classifier)",
                    "selection best F1 (classifier)", "winner"});
    for (const auto& [k, at_k] : ts.selection) {
      rows.push_back({std::to_string(k),
                      format2(ts.extraction.at(k).best_f1) + " (" +
                          classifier_display_name(ts.extraction.at(k).best_classifier) + ")",
                      format2(at_k.best_f1) + " (" +
                          classifier_display_name(at_k.best_classifier) + ")",
                      ts.f1_winner.at(k)});
    }
    out << render_rows(rows, TableFormat::markdown) << '\n';
    out << "- best F1 range across K: extraction " << format2(ts.extraction_f1_range)
        << ", selection " << format2(ts.selection_f1_range)
        << " (less sensitive: " << ts.less_sensitive << ")\n";
    out << "- median training time: extraction "
        << format2(ts.extraction_median_training_s) << " s, selection "
        << format2(ts.selection_median_training_s) << " s (lower: "
        << ts.lower_training_time << ")\n";
    out << "- median inference time: extraction "
        << format2(ts.extraction_median_inference_us) << " us, selection "
        << format2(ts.selection_median_inference_us) << " us (lower: "
        << ts.lower_inference_time << ")\n";
    out << "- best classifier: extraction "
        << classifier_display_name(ts.best_classifier_extraction) << ", selection "
        << classifier_display_name(ts.best_classifier_selection) << "\n\n";
  }
  return out.str();
}

}  // namespace nids
