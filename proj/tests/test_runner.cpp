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

#include <doctest.h>

#include <chrono>
#include <cstdlib>

#include "nids/csv.hpp"
#include "nids/encoder.hpp"
#include "nids/error.hpp"
#include "nids/runner.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace nids;

namespace {

RunConfig fixture_config(const std::string& out_dir) {
  RunConfig cfg;
  cfg.train_path = testing::fixture_csv();
  cfg.test_path = testing::fixture_csv();
  cfg.output_dir = out_dir;
  cfg.repeat = 1;
  cfg.write_report = false;
  return cfg;
}

EvalReport synthetic_report(const std::string& task, const std::string& reducer,
                            int k, const std::string& classifier, double f1,
                            double training_s, double inference_us) {
  EvalReport r;
  r.task = task;
  r.reducer_kind = reducer;
  r.k = k;
  r.classifier = classifier;
  r.precision = f1;
  r.recall = f1;
  r.f1 = f1;
  r.classes = {"Normal", "Abnormal"};
  r.confusion = Eigen::MatrixXi::Identity(2, 2);
  r.per_class_accuracy = {100.0, 100.0};
  r.timing.training_time_s = training_s;
  r.timing.fit_model_s = training_s;
  r.timing.inference_us_per_sample = inference_us;
  r.timing.predict_model_s = inference_us * 1e-6;
  r.n_test = 1;
  return r;
}

double parse_double(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

}  // namespace

TEST_SUITE("runner") {
  TEST_CASE("end-to-end fixture run beats the majority baseline") {
    testing::TempDir dir("runner_e2e");
    RunConfig cfg = fixture_config(dir.str());
    cfg.task = Task::binary;
    cfg.reducer.kind = ReducerKind::none;
    cfg.classifier.kind = ClassifierKind::decision_tree;

    const EvalReport report = run_experiment(cfg);

    // majority baseline: predict the majority class everywhere
    const FeatureTable table = load_csv(cfg.train_path, unsw_nb15_schema());
    const auto* label = table.find("label");
    IntVector y(static_cast<Index>(label->numeric.size()));
    for (Index i = 0; i < y.size(); ++i) y(i) = static_cast<int>(label->numeric[static_cast<std::size_t>(i)]);
    const oracles::MajorityBaseline baseline = oracles::majority_class(y, 2);
    IntVector constant = IntVector::Constant(y.size(), baseline.label);
    const Prf base_prf =
        aggregate_prf(confusion(y, constant, binary_class_names()), Averaging::weighted);

    CHECK(report.f1 > base_prf.f1);
    CHECK(report.n_train == 200);
    CHECK(report.n_test == 200);
    CHECK(report.k == 56);  // encoded fixture dimensionality
  }

  TEST_CASE("metric fields are a pure function of config, data and seed") {
    testing::TempDir dir("runner_det");
    RunConfig cfg = fixture_config(dir.str());
    cfg.task = Task::multiclass;
    cfg.reducer.kind = ReducerKind::extraction;
    cfg.reducer.k = 8;
    cfg.classifier.kind = ClassifierKind::mlp;
    cfg.classifier.mlp.max_epochs = 10;

    const EvalReport a = run_experiment(cfg);
    const EvalReport b = run_experiment(cfg);
    CHECK(metric_fields_json(a) == metric_fields_json(b));
    CHECK(metric_fields_json(a).dump() == metric_fields_json(b).dump());
  }

  TEST_CASE("singleton grid equals the single experiment") {
    testing::TempDir dir("runner_singleton");
    RunConfig cfg = fixture_config(dir.str());
    cfg.task = Task::binary;
    cfg.reducer.kind = ReducerKind::selection;
    cfg.reducer.k = 4;
    cfg.classifier.kind = ClassifierKind::bernoulli_nb;

    const EvalReport single = run_experiment(cfg);
    const GridResult grid =
        run_grid(cfg, {Task::binary}, {cfg.reducer}, {cfg.classifier});
    REQUIRE(grid.reports.size() == 1);
    CHECK(grid.failures.empty());
    CHECK(metric_fields_json(grid.reports[0]) == metric_fields_json(single));
  }

  TEST_CASE("the full fixture grid yields sixty reports") {
    testing::TempDir dir("runner_grid");
    RunConfig base = fixture_config(dir.str());
    base.write_report = true;
    base.classifier.mlp.max_epochs = 15;  // fixture-size fits stay quick

    std::vector<ReducerConfig> reducers;
    for (const ReducerKind kind : {ReducerKind::selection, ReducerKind::extraction}) {
      for (int k : {4, 8, 16}) {
        ReducerConfig rc;
        rc.kind = kind;
        rc.k = k;
        reducers.push_back(rc);
      }
    }
    std::vector<ClassifierSpec> classifiers;
    for (const ClassifierKind kind : all_classifier_kinds()) {
      ClassifierSpec spec;
      spec.kind = kind;
      classifiers.push_back(spec);
    }

    const GridResult grid =
        run_grid(base, {Task::binary, Task::multiclass}, reducers, classifiers);
    CHECK(grid.reports.size() == 60);
    CHECK(grid.failures.empty());

    // one report file per run landed under <out>/runs
    std::size_t files = 0;
    for (const auto& entry :
         std::filesystem::directory_iterator(dir.path() / "runs")) {
      files += entry.path().extension() == ".jsonl" ? 1 : 0;
    }
    CHECK(files == 60);

    SUBCASE("reports round-trip through jsonl") {
      const std::string path = dir.str() + "/reports.jsonl";
      write_reports_jsonl(grid.reports, path);
      const std::vector<EvalReport> loaded = read_reports_jsonl(path);
      REQUIRE(loaded.size() == 60);
      for (std::size_t i = 0; i < 60; ++i) {
        CHECK(report_to_json(loaded[i]) == report_to_json(grid.reports[i]));
      }
    }

    SUBCASE("tables parse back to the emitted values") {
      const auto paths = emit_tables(grid.reports, TableFormat::csv, dir.str() + "/t");
      CHECK(paths.size() == 8);  // six (task, K) tables + two per-class tables

      const auto rows = read_csv_file(dir.str() + "/t/binary_k8.csv");
      REQUIRE(rows.size() == 6);  // header + five classifiers
      REQUIRE(rows[0].size() == 11);
      for (std::size_t row = 1; row < rows.size(); ++row) {
        const std::string kind = [&] {
          for (const ClassifierKind k : all_classifier_kinds()) {
            std::string display = rows[row][0];
            if ((display == "Decision Tree" && k == ClassifierKind::decision_tree) ||
                (display == "Random Forest" && k == ClassifierKind::random_forest) ||
                (display == "KNeighbors" && k == ClassifierKind::k_neighbors) ||
                (display == "MLP" && k == ClassifierKind::mlp) ||
                (display == "Naive Bayes" && k == ClassifierKind::bernoulli_nb)) {
              return to_string(k);
            }
          }
          return std::string();
        }();
        for (const EvalReport& r : grid.reports) {
          if (r.task == "binary" && r.k == 8 && r.classifier == kind) {
            const std::size_t base_col = r.reducer_kind == "extraction" ? 1 : 6;
            CHECK(parse_double(rows[row][base_col + 0]) == round2(r.precision));
            CHECK(parse_double(rows[row][base_col + 1]) == round2(r.recall));
            CHECK(parse_double(rows[row][base_col + 2]) == round2(r.f1));
            CHECK(parse_double(rows[row][base_col + 3]) ==
                  round2(r.timing.training_time_s));
            CHECK(parse_double(rows[row][base_col + 4]) ==
                  round2(r.timing.inference_us_per_sample));
          }
        }
      }
    }

    SUBCASE("markdown and csv hold the same numbers") {
      emit_tables(grid.reports, TableFormat::csv, dir.str() + "/fmt");
      emit_tables(grid.reports, TableFormat::markdown, dir.str() + "/fmt");
      const auto csv_rows = read_csv_file(dir.str() + "/fmt/multiclass_k4.csv");

      std::ifstream md(dir.str() + "/fmt/multiclass_k4.md");
      std::vector<std::vector<std::string>> md_rows;
      std::string line;
      while (std::getline(md, line)) {
        if (line.rfind("|---", 0) == 0) continue;
        std::vector<std::string> cells;
        std::size_t pos = 1;
        while (pos < line.size()) {
          const std::size_t next = line.find(" | ", pos);
          if (next == std::string::npos) {
            cells.push_back(line.substr(pos + 1, line.size() - pos - 3));
            break;
          }
          cells.push_back(line.substr(pos + 1, next - pos - 1));
          pos = next + 2;
        }
        md_rows.push_back(cells);
      }
      REQUIRE(md_rows.size() == csv_rows.size());
      for (std::size_t r = 1; r < csv_rows.size(); ++r) {
        for (std::size_t c = 1; c < csv_rows[r].size(); ++c) {
          CHECK(parse_double(md_rows[r][c]) == parse_double(csv_rows[r][c]));
        }
      }
    }

    SUBCASE("comparison summary comes out of the reports") {
      const ComparisonSummary summary = compare_runs(grid.reports);
      REQUIRE(summary.tasks.count("binary") == 1);
      REQUIRE(summary.tasks.count("multiclass") == 1);
      const auto& binary = summary.tasks.at("binary");
      CHECK(binary.selection.size() == 3);
      CHECK(binary.extraction.size() == 3);
      for (const auto& [k, winner] : binary.f1_winner) {
        CHECK((winner == "selection" || winner == "extraction" || winner == "tie"));
      }
    }
  }

  TEST_CASE("render_method_table validates its input") {
    CHECK_THROWS_AS(render_method_table({}, TableFormat::csv), Error);

    std::vector<EvalReport> mixed = {
        synthetic_report("binary", "selection", 8, "mlp", 80, 1, 1),
        synthetic_report("multiclass", "selection", 8, "mlp", 80, 1, 1)};
    try {
      render_method_table(mixed, TableFormat::csv);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == errc::mixed_task_reports);
    }
  }

  TEST_CASE("compare_runs reproduces a hand-evaluated comparison") {
    std::vector<EvalReport> reports;
    // selection: best F1 88 at K=8 (tree), 84 at K=4; extraction: 86 and 85
    reports.push_back(synthetic_report("binary", "selection", 4, "decision_tree", 84, 10, 1));
    reports.push_back(synthetic_report("binary", "selection", 4, "mlp", 70, 100, 30));
    reports.push_back(synthetic_report("binary", "selection", 8, "decision_tree", 88, 11, 1));
    reports.push_back(synthetic_report("binary", "selection", 8, "mlp", 71, 110, 31));
    reports.push_back(synthetic_report("binary", "extraction", 4, "k_neighbors", 85, 20, 40));
    reports.push_back(synthetic_report("binary", "extraction", 4, "mlp", 80, 200, 50));
    reports.push_back(synthetic_report("binary", "extraction", 8, "k_neighbors", 86, 21, 44));
    reports.push_back(synthetic_report("binary", "extraction", 8, "mlp", 81, 210, 52));

    const ComparisonSummary summary = compare_runs(reports);
    const auto& ts = summary.tasks.at("binary");
    CHECK(ts.f1_winner.at(4) == "extraction");
    CHECK(ts.f1_winner.at(8) == "selection");
    CHECK(ts.selection.at(8).best_classifier == "decision_tree");
    CHECK(ts.extraction.at(4).best_classifier == "k_neighbors");
    CHECK(ts.selection_f1_range == doctest::Approx(4.0));
    CHECK(ts.extraction_f1_range == doctest::Approx(1.0));
    CHECK(ts.less_sensitive == "extraction");
    // medians: selection training {10,100,11,110} -> 55.5; extraction {20,200,21,210} -> 110.5
    CHECK(ts.selection_median_training_s == doctest::Approx(55.5));
    CHECK(ts.extraction_median_training_s == doctest::Approx(110.5));
    CHECK(ts.lower_training_time == "selection");
    CHECK(ts.lower_inference_time == "selection");
    CHECK(ts.best_classifier_selection == "decision_tree");
    CHECK(ts.best_classifier_extraction == "k_neighbors");
  }

  TEST_CASE("identical methods tie everywhere") {
    std::vector<EvalReport> reports;
    for (const std::string method : {"selection", "extraction"}) {
      for (int k : {4, 8}) {
        reports.push_back(synthetic_report("binary", method, k, "decision_tree", 80, 5, 2));
      }
    }
    const ComparisonSummary summary = compare_runs(reports);
    const auto& ts = summary.tasks.at("binary");
    CHECK(ts.f1_winner.at(4) == "tie");
    CHECK(ts.f1_winner.at(8) == "tie");
    CHECK(ts.less_sensitive == "tie");
    CHECK(ts.lower_training_time == "tie");
    CHECK(ts.lower_inference_time == "tie");
  }

  TEST_CASE("insufficient coverage is rejected") {
    std::vector<EvalReport> reports = {
        synthetic_report("binary", "selection", 4, "mlp", 80, 1, 1),
        synthetic_report("binary", "extraction", 8, "mlp", 80, 1, 1)};
    try {
      compare_runs(reports);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == errc::insufficient_coverage);
    }
  }

  TEST_CASE("selection transform does no arithmetic and outruns projection") {
    Rng rng(59);
    const DesignMatrix x =
        testing::make_design(testing::random_matrix(rng, 200, 20000, 0.0, 1.0));

    SelectionModel gather;
    gather.input_dim = 200;
    gather.k = 16;
    for (int i = 0; i < 16; ++i) {
      gather.selected.push_back(i * 12);
      gather.selected_names.push_back(x.feature_names[static_cast<std::size_t>(i * 12)]);
    }
    const ExtractionModel projection = pca_fit(x, 16);

    auto time_best_of = [](int repeats, auto&& fn) {
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < repeats; ++i) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        best = std::min(best, std::chrono::duration<double>(
                                  std::chrono::steady_clock::now() - start)
                                  .count());
      }
      return best;
    };

    const double gather_s =
        time_best_of(3, [&] { (void)apply_selection(gather, x); });
    const double project_s =
        time_best_of(3, [&] { (void)pca_transform(projection, x); });
    CHECK(gather_s < project_s);
  }

  TEST_CASE("fingerprints bind config and data") {
    testing::TempDir dir("runner_fp");
    RunConfig cfg = fixture_config(dir.str());
    cfg.task = Task::binary;
    cfg.reducer.kind = ReducerKind::selection;
    cfg.reducer.k = 4;
    cfg.classifier.kind = ClassifierKind::bernoulli_nb;

    const EvalReport a = run_experiment(cfg);
    const EvalReport b = run_experiment(cfg);
    CHECK(a.fingerprint == b.fingerprint);
    CHECK(a.train_checksum == b.train_checksum);

    cfg.seed = 43;
    const EvalReport c = run_experiment(cfg);
    CHECK(c.fingerprint != a.fingerprint);
  }

  TEST_CASE("disk-cached reducers reproduce the run") {
    testing::TempDir dir("runner_cache");
    RunConfig cfg = fixture_config(dir.str());
    cfg.task = Task::binary;
    cfg.reducer.kind = ReducerKind::extraction;
    cfg.reducer.k = 4;
    cfg.classifier.kind = ClassifierKind::decision_tree;
    cfg.use_disk_cache = true;

    const EvalReport first = run_experiment(cfg);
    REQUIRE(std::filesystem::exists(dir.path() / "cache"));
    const EvalReport second = run_experiment(cfg);  // fresh pipeline, cache hit
    CHECK(metric_fields_json(first) == metric_fields_json(second));
    CHECK(second.timing.fit_reducer_s == first.timing.fit_reducer_s);
  }
}
