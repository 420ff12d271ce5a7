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

#include "nids/correlation.hpp"

#include <cmath>

#include "nids/error.hpp"

namespace nids {

std::string to_string(CorrelationAveraging averaging) {
  return averaging == CorrelationAveraging::signed_values ? "signed" : "absolute";
}

CorrelationStats correlation_matrix(const DesignMatrix& x,
                                    CorrelationAveraging averaging) {
  const Index d = x.dim();
  const Index n = x.samples();
  if (n < 2) {
    throw Error(errc::bad_config, "correlation needs at least 2 samples");
  }

  // Feature means with Neumaier-compensated accumulation.
  Vector sum = Vector::Zero(d);
  Vector comp = Vector::Zero(d);
  Vector lo = x.values.col(0);
  Vector hi = x.values.col(0);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < d; ++i) {
      const double v = x.values(i, j);
      const double t = sum(i) + v;
      if (std::abs(sum(i)) >= std::abs(v)) {
        comp(i) += (sum(i) - t) + v;
      } else {
        comp(i) += (v - t) + sum(i);
      }
      sum(i) = t;
      lo(i) = std::min(lo(i), v);
      hi(i) = std::max(hi(i), v);
    }
  }
  const Vector mean = (sum + comp) / static_cast<double>(n);

  // Centered cross products, accumulated block by block.
  Matrix s = Matrix::Zero(d, d);
  const Index block = 8192;
  Matrix centered(d, std::min(block, n));
  for (Index j0 = 0; j0 < n; j0 += block) {
    const Index width = std::min(block, n - j0);
    centered.leftCols(width) = x.values.middleCols(j0, width).colwise() - mean;
    s.selfadjointView<Eigen::Lower>().rankUpdate(centered.leftCols(width), 1.0);
  }

  CorrelationStats stats;
  stats.feature_names = x.feature_names;
  stats.averaging = averaging;
  stats.degenerate.assign(static_cast<std::size_t>(d), 0);
  for (Index i = 0; i < d; ++i) {
    if (lo(i) == hi(i)) {
      stats.degenerate[static_cast<std::size_t>(i)] = 1;
    }
  }

  stats.matrix.resize(d, d);
  for (Index i = 0; i < d; ++i) {
    stats.matrix(i, i) = 1.0;  // self correlation, by definition
    for (Index j = 0; j < i; ++j) {
      double c = 0.0;
      if (!stats.degenerate[static_cast<std::size_t>(i)] &&
          !stats.degenerate[static_cast<std::size_t>(j)]) {
        const double denom = std::sqrt(s(i, i)) * std::sqrt(s(j, j));
        c = denom > 0.0 ? s(i, j) / denom : 0.0;
      }
      stats.matrix(i, j) = c;
      stats.matrix(j, i) = c;
    }
  }

  stats.averages.resize(d);
  for (Index i = 0; i < d; ++i) {
    double acc = 0.0;
    for (Index j = 0; j < d; ++j) {
      const double c = stats.matrix(i, j);
      acc += averaging == CorrelationAveraging::absolute_values ? std::abs(c) : c;
    }
    stats.averages(i) = acc / static_cast<double>(d);
  }
  return stats;
}

}  // namespace nids
