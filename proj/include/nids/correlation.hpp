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

#ifndef NIDS_CORRELATION_HPP_
#define NIDS_CORRELATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "nids/types.hpp"

namespace nids {

/// How per-feature averages fold the off-diagonal coefficients: the signed
/// values as the formula is written, or their absolute values for the
/// sensitivity variant.
enum class CorrelationAveraging { signed_values, absolute_values };

std::string to_string(CorrelationAveraging averaging);

/// Pairwise Pearson coefficients of all feature rows plus the per-feature
/// average used to rank features for selection.
struct CorrelationStats {
  Matrix matrix;                         // D x D, symmetric, unit diagonal
  Vector averages;                       // row means including the diagonal
  std::vector<std::string> feature_names;
  std::vector<std::uint8_t> degenerate;  // 1 = zero-variance feature
  CorrelationAveraging averaging = CorrelationAveraging::signed_values;
};

/// Computes the D x D correlation matrix over the N training samples and the
/// length-D averages (sum of row / D, diagonal included).
///
/// Numerics: feature means are accumulated with Neumaier-compensated sums,
/// then cross products are taken on centered blocks, so large raw scales
/// (byte counters around 1e9 over 1.7e5 samples) do not lose the small
/// variances to cancellation. Zero-variance features get coefficient 0.0
/// against everything, keep the 1.0 diagonal, and are flagged in
/// `degenerate`; they rank at the bottom naturally.
///
/// Requires N >= 2.
CorrelationStats correlation_matrix(
    const DesignMatrix& x,
    CorrelationAveraging averaging = CorrelationAveraging::signed_values);

}  // namespace nids

#endif  // NIDS_CORRELATION_HPP_
