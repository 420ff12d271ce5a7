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

#ifndef NIDS_TESTS_TEST_SUPPORT_HPP_
#define NIDS_TESTS_TEST_SUPPORT_HPP_

#include <filesystem>
#include <fstream>
#include <string>

#include "nids/rng.hpp"
#include "nids/types.hpp"

namespace testing {

inline std::string fixture_csv() { return NIDS_FIXTURE_CSV; }

inline nids::Matrix random_matrix(nids::Rng& rng, Eigen::Index rows,
                                  Eigen::Index cols, double lo = -1.0,
                                  double hi = 1.0) {
  nids::Matrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      m(i, j) = rng.next_uniform(lo, hi);
    }
  }
  return m;
}

inline nids::Matrix random_symmetric(nids::Rng& rng, Eigen::Index n) {
  const nids::Matrix b = random_matrix(rng, n, n);
  return 0.5 * (b + b.transpose());
}

inline nids::IntVector random_labels(nids::Rng& rng, Eigen::Index n, int n_classes) {
  nids::IntVector y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    y(i) = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n_classes)));
  }
  return y;
}

inline nids::DesignMatrix make_design(nids::Matrix values,
                                      std::vector<std::string> names = {}) {
  nids::DesignMatrix x;
  if (names.empty()) {
    for (Eigen::Index i = 0; i < values.rows(); ++i) {
      names.push_back("f" + std::to_string(i));
    }
  }
  x.values = std::move(values);
  x.feature_names = std::move(names);
  return x;
}

// Unique scratch directory under the build tree, wiped on construction.
class TempDir {
 public:
  explicit TempDir(const std::string& name)
      : path_(std::filesystem::temp_directory_path() / ("nidsbench_" + name)) {
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string str() const { return path_.string(); }
  std::filesystem::path path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc | std::ios::binary);
  out << text;
}

}  // namespace testing

#endif  // NIDS_TESTS_TEST_SUPPORT_HPP_
