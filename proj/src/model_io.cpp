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

#include "nids/model_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include <nlohmann/json.hpp>

#include "nids/error.hpp"

namespace nids {

namespace {

using nlohmann::json;

constexpr char kMagic[8] = {'N', 'I', 'D', 'S', 'A', 'R', 'T', '1'};
constexpr int kFormatVersion = 1;

static_assert(std::endian::native == std::endian::little,
              "artifact container assumes a little-endian host");

struct TensorRef {
  std::string name;
  const Matrix* matrix = nullptr;
  const Vector* vector = nullptr;
};

void write_container(const std::string& path, json header,
                     const std::vector<TensorRef>& tensors,
                     const std::map<std::string, std::string>& meta) {
  header["format_version"] = kFormatVersion;
  header["meta"] = meta;
  json shapes = json::array();
  for (const TensorRef& t : tensors) {
    const Index rows = t.matrix != nullptr ? t.matrix->rows() : t.vector->size();
    const Index cols = t.matrix != nullptr ? t.matrix->cols() : 1;
    shapes.push_back({{"name", t.name}, {"rows", rows}, {"cols", cols}});
  }
  header["tensors"] = shapes;

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(errc::io_error, "cannot write " + path);
  }
  out.write(kMagic, sizeof(kMagic));
  const std::string head = header.dump();
  const auto head_len = static_cast<std::uint32_t>(head.size());
  out.write(reinterpret_cast<const char*>(&head_len), sizeof(head_len));
  out.write(head.data(), static_cast<std::streamsize>(head.size()));

  std::vector<double> row_major;
  for (const TensorRef& t : tensors) {
    if (t.matrix != nullptr) {
      row_major.resize(static_cast<std::size_t>(t.matrix->size()));
      Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
          row_major.data(), t.matrix->rows(), t.matrix->cols()) = *t.matrix;
      out.write(reinterpret_cast<const char*>(row_major.data()),
                static_cast<std::streamsize>(row_major.size() * sizeof(double)));
    } else {
      out.write(reinterpret_cast<const char*>(t.vector->data()),
                static_cast<std::streamsize>(
                    static_cast<std::size_t>(t.vector->size()) * sizeof(double)));
    }
  }
  if (!out) {
    throw Error(errc::io_error, "short write to " + path);
  }
}

struct Container {
  json header;
  std::map<std::string, Matrix> tensors;
};

Container read_container(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(errc::io_error, "cannot open " + path);
  }
  char magic[8];
  in.read(magic, sizeof(magic));
  if (in.gcount() != sizeof(magic) || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw Error(errc::bad_format, "not an artifact container: " + path);
  }
  std::uint32_t head_len = 0;
  in.read(reinterpret_cast<char*>(&head_len), sizeof(head_len));
  std::string head(head_len, '\0');
  in.read(head.data(), static_cast<std::streamsize>(head_len));
  if (!in) {
    throw Error(errc::bad_format, "truncated header in " + path);
  }

  Container c;
  c.header = json::parse(head, nullptr, false);
  if (c.header.is_discarded()) {
    throw Error(errc::bad_format, "malformed header in " + path);
  }
  if (c.header.value("format_version", -1) != kFormatVersion) {
    throw Error(errc::bad_format, "unsupported container version in " + path);
  }

  for (const json& shape : c.header.at("tensors")) {
    const auto rows = shape.at("rows").get<Index>();
    const auto cols = shape.at("cols").get<Index>();
    std::vector<double> row_major(static_cast<std::size_t>(rows * cols));
    in.read(reinterpret_cast<char*>(row_major.data()),
            static_cast<std::streamsize>(row_major.size() * sizeof(double)));
    if (!in) {
      throw Error(errc::bad_format, "truncated payload in " + path);
    }
    Matrix m(rows, cols);
    m = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                       Eigen::RowMajor>>(row_major.data(), rows, cols);
    c.tensors.emplace(shape.at("name").get<std::string>(), std::move(m));
  }
  return c;
}

json tree_to_json(const TreeModel& tree) {
  json nodes = json::array();
  for (const TreeNode& n : tree.nodes) {
    nodes.push_back({n.feature, n.threshold, n.left, n.right, n.label});
  }
  return nodes;
}

TreeModel tree_from_json(const json& nodes, int input_dim, int n_classes) {
  TreeModel tree;
  tree.input_dim = input_dim;
  tree.n_classes = n_classes;
  for (const json& n : nodes) {
    tree.nodes.push_back(TreeNode{n.at(0).get<int>(), n.at(1).get<double>(),
                                  n.at(2).get<int>(), n.at(3).get<int>(),
                                  n.at(4).get<int>()});
  }
  return tree;
}

IntVector int_vector_from_json(const json& j) {
  IntVector v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i) {
    v(i) = j.at(static_cast<std::size_t>(i)).get<int>();
  }
  return v;
}

json int_vector_to_json(const IntVector& v) {
  json j = json::array();
  for (Index i = 0; i < v.size(); ++i) {
    j.push_back(v(i));
  }
  return j;
}

void load_meta(const Container& c, std::map<std::string, std::string>* meta) {
  if (meta != nullptr) {
    *meta = c.header.value("meta", std::map<std::string, std::string>{});
  }
}

}  // namespace

void save_reducer(const Reducer& reducer, const std::string& path,
                  const std::map<std::string, std::string>& meta) {
  json header;
  std::vector<TensorRef> tensors;
  if (const auto* s = std::get_if<SelectionModel>(&reducer)) {
    header["kind"] = "selection";
    header["selected"] = s->selected;
    header["selected_names"] = s->selected_names;
    if (s->threshold.has_value()) {
      header["threshold"] = *s->threshold;
    }
    header["k"] = s->k;
    header["input_dim"] = s->input_dim;
  } else if (const auto* e = std::get_if<ExtractionModel>(&reducer)) {
    header["kind"] = "extraction";
    header["input_features"] = e->input_features;
    header["rank_deficient"] = e->rank_deficient;
    tensors.push_back({"projection", &e->projection, nullptr});
    tensors.push_back({"mean", nullptr, &e->mean});
    tensors.push_back({"eigenvalues", nullptr, &e->eigenvalues});
  } else {
    header["kind"] = "none";
    header["input_dim"] = std::get<NoReduction>(reducer).input_dim;
  }
  write_container(path, std::move(header), tensors, meta);
}

Reducer load_reducer(const std::string& path,
                     std::map<std::string, std::string>* meta) {
  const Container c = read_container(path);
  load_meta(c, meta);
  const std::string kind = c.header.at("kind").get<std::string>();
  if (kind == "selection") {
    SelectionModel s;
    s.selected = c.header.at("selected").get<std::vector<int>>();
    s.selected_names = c.header.at("selected_names").get<std::vector<std::string>>();
    if (c.header.contains("threshold")) {
      s.threshold = c.header.at("threshold").get<double>();
    }
    s.k = c.header.at("k").get<int>();
    s.input_dim = c.header.at("input_dim").get<int>();
    return s;
  }
  if (kind == "extraction") {
    ExtractionModel e;
    e.projection = c.tensors.at("projection");
    e.mean = c.tensors.at("mean").col(0);
    e.eigenvalues = c.tensors.at("eigenvalues").col(0);
    e.input_features = c.header.at("input_features").get<std::vector<std::string>>();
    e.rank_deficient = c.header.at("rank_deficient").get<bool>();
    return e;
  }
  if (kind == "none") {
    return NoReduction{c.header.at("input_dim").get<int>()};
  }
  throw Error(errc::bad_format, "unknown reducer kind in " + path);
}

void save_model(const TrainedModel& model, const std::string& path,
                const std::map<std::string, std::string>& meta) {
  json header;
  std::vector<TensorRef> tensors;
  if (const auto* tree = std::get_if<TreeModel>(&model)) {
    header["kind"] = "decision_tree";
    header["input_dim"] = tree->input_dim;
    header["n_classes"] = tree->n_classes;
    header["nodes"] = tree_to_json(*tree);
  } else if (const auto* forest = std::get_if<ForestModel>(&model)) {
    header["kind"] = "random_forest";
    header["input_dim"] = forest->input_dim;
    header["n_classes"] = forest->n_classes;
    json trees = json::array();
    for (const TreeModel& tree : forest->trees) {
      trees.push_back(tree_to_json(tree));
    }
    header["trees"] = std::move(trees);
  } else if (const auto* knn = std::get_if<KnnModel>(&model)) {
    header["kind"] = "k_neighbors";
    header["k"] = knn->k;
    header["n_classes"] = knn->n_classes;
    header["labels"] = int_vector_to_json(knn->train_labels);
    tensors.push_back({"train_points", &knn->train_points, nullptr});
  } else if (const auto* mlp = std::get_if<MlpModel>(&model)) {
    header["kind"] = "mlp";
    tensors.push_back({"hidden_weights", &mlp->hidden_weights, nullptr});
    tensors.push_back({"hidden_bias", nullptr, &mlp->hidden_bias});
    tensors.push_back({"output_weights", &mlp->output_weights, nullptr});
    tensors.push_back({"output_bias", nullptr, &mlp->output_bias});
  } else {
    const auto& nb = std::get<NbModel>(model);
    header["kind"] = "bernoulli_nb";
    header["binarize_threshold"] = nb.binarize_threshold;
    tensors.push_back({"class_log_prior", nullptr, &nb.class_log_prior});
    tensors.push_back({"feature_log_on", &nb.feature_log_on, nullptr});
    tensors.push_back({"feature_log_off", &nb.feature_log_off, nullptr});
  }
  write_container(path, std::move(header), tensors, meta);
}

TrainedModel load_model(const std::string& path,
                        std::map<std::string, std::string>* meta) {
  const Container c = read_container(path);
  load_meta(c, meta);
  const std::string kind = c.header.at("kind").get<std::string>();
  if (kind == "decision_tree") {
    return tree_from_json(c.header.at("nodes"), c.header.at("input_dim").get<int>(),
                          c.header.at("n_classes").get<int>());
  }
  if (kind == "random_forest") {
    ForestModel forest;
    forest.input_dim = c.header.at("input_dim").get<int>();
    forest.n_classes = c.header.at("n_classes").get<int>();
    for (const json& tree : c.header.at("trees")) {
      forest.trees.push_back(tree_from_json(tree, forest.input_dim, forest.n_classes));
    }
    return forest;
  }
  if (kind == "k_neighbors") {
    KnnModel knn;
    knn.train_points = c.tensors.at("train_points");
    knn.train_labels = int_vector_from_json(c.header.at("labels"));
    knn.k = c.header.at("k").get<int>();
    knn.n_classes = c.header.at("n_classes").get<int>();
    return knn;
  }
  if (kind == "mlp") {
    MlpModel mlp;
    mlp.hidden_weights = c.tensors.at("hidden_weights");
    mlp.hidden_bias = c.tensors.at("hidden_bias").col(0);
    mlp.output_weights = c.tensors.at("output_weights");
    mlp.output_bias = c.tensors.at("output_bias").col(0);
    return mlp;
  }
  if (kind == "bernoulli_nb") {
    NbModel nb;
    nb.class_log_prior = c.tensors.at("class_log_prior").col(0);
    nb.feature_log_on = c.tensors.at("feature_log_on");
    nb.feature_log_off = c.tensors.at("feature_log_off");
    nb.binarize_threshold = c.header.at("binarize_threshold").get<double>();
    return nb;
  }
  throw Error(errc::bad_format, "unknown model kind in " + path);
}

}  // namespace nids
