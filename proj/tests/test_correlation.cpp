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

#include <numeric>

#include "nids/correlation.hpp"
#include "nids/error.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace nids;

namespace {

std::vector<int> ranking(const Vector& averages, const std::vector<std::string>& names) {
  std::vector<int> order(static_cast<std::size_t>(averages.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (averages(a) != averages(b)) return averages(a) > averages(b);
    return names[static_cast<std::size_t>(a)] < names[static_cast<std::size_t>(b)];
  });
  return order;
}

}  // namespace

TEST_SUITE("correlation") {
  TEST_CASE("self correlation is exactly one") {
    Rng rng(11);
    const DesignMatrix x = testing::make_design(testing::random_matrix(rng, 4, 12));
    const CorrelationStats stats = correlation_matrix(x);
    for (Index i = 0; i < 4; ++i) {
      CHECK(stats.matrix(i, i) == 1.0);
    }
  }

  TEST_CASE("a feature against its negation gives minus one") {
    Matrix m(2, 5);
    m.row(0) << 1, 2, 3, 4, 5;
    m.row(1) = -m.row(0);
    const CorrelationStats stats = correlation_matrix(testing::make_design(m));
    CHECK(stats.matrix(0, 1) == doctest::Approx(-1.0).epsilon(1e-12));
  }

  TEST_CASE("hand-computed 3x5 case") {
    Matrix m(3, 5);
    m.row(0) << 1, 2, 3, 4, 5;
    m.row(1) << 2, 4, 6, 8, 10;
    m.row(2) << 5, 3, 4, 1, 2;
    const CorrelationStats stats = correlation_matrix(testing::make_design(m));
    // row 2 centered is (2,0,1,-2,-1); dot with centered row 0 = -8, norms 10
    CHECK(stats.matrix(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(stats.matrix(0, 2) == doctest::Approx(-0.8).epsilon(1e-12));
    CHECK(stats.matrix(1, 2) == doctest::Approx(-0.8).epsilon(1e-12));
    CHECK(stats.averages(0) == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(stats.averages(1) == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(stats.averages(2) == doctest::Approx(-0.2).epsilon(1e-12));
  }

  TEST_CASE("matches the brute-force formula on random instances") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      const Index d = 2 + static_cast<Index>(rng.next_below(7));
      const Index n = 2 + static_cast<Index>(rng.next_below(29));
      const DesignMatrix x =
          testing::make_design(testing::random_matrix(rng, d, n, -50.0, 50.0));
      const CorrelationStats stats = correlation_matrix(x);
      const oracles::CorrelationResult ref = oracles::correlation(x.values);
      CHECK((stats.matrix - ref.matrix).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK((stats.averages - ref.averages).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }

  TEST_CASE("stays accurate when features carry huge offsets") {
    Rng rng(31);
    Matrix m = testing::random_matrix(rng, 3, 400, 0.0, 1.0);
    m.row(0) = m.row(0).array() + 1e9;  // byte-counter scale
    m.row(1) = m.row(1).array() * 1e6 + 5e8;
    const CorrelationStats stats = correlation_matrix(testing::make_design(m));
    const oracles::CorrelationResult ref = oracles::correlation(m);
    CHECK((stats.matrix - ref.matrix).cwiseAbs().maxCoeff() <= 1e-9);
    for (Index i = 0; i < 3; ++i) {
      for (Index j = 0; j < 3; ++j) {
        if (i != j) CHECK(std::abs(stats.matrix(i, j)) <= 1.0 + 1e-12);
      }
    }
  }

  TEST_CASE("zero-variance feature gets zero coefficients and a flag") {
    Matrix m(3, 6);
    m.row(0).setConstant(5.0);
    m.row(1) << 1, 2, 3, 4, 5, 6;
    m.row(2) << 2, 1, 4, 3, 6, 5;
    const CorrelationStats stats = correlation_matrix(testing::make_design(m));
    CHECK(stats.degenerate[0] == 1);
    CHECK(stats.degenerate[1] == 0);
    CHECK(stats.matrix(0, 0) == 1.0);
    CHECK(stats.matrix(0, 1) == 0.0);
    CHECK(stats.matrix(0, 2) == 0.0);
    // the degenerate feature ranks at the bottom
    CHECK(stats.averages(0) == doctest::Approx(1.0 / 3.0));
  }

  TEST_CASE("matrix is exactly symmetric and averages include the diagonal") {
    Rng rng(7);
    const DesignMatrix x = testing::make_design(testing::random_matrix(rng, 6, 40));
    const CorrelationStats stats = correlation_matrix(x);
    CHECK(stats.matrix == stats.matrix.transpose().eval());
    for (Index i = 0; i < 6; ++i) {
      CHECK(stats.averages(i) ==
            doctest::Approx(stats.matrix.row(i).sum() / 6.0).epsilon(1e-15));
    }
  }

  TEST_CASE("affine feature scaling leaves the matrix unchanged") {
    Rng rng(17);
    Matrix m = testing::random_matrix(rng, 5, 60);
    const CorrelationStats before = correlation_matrix(testing::make_design(m));
    m.row(2) = m.row(2).array() * 37.5 + 11.0;  // positive scale plus offset
    const CorrelationStats after = correlation_matrix(testing::make_design(m));
    CHECK((before.matrix - after.matrix).cwiseAbs().maxCoeff() <= 1e-10);
  }

  TEST_CASE("the diagonal contribution shifts every average equally") {
    Rng rng(29);
    const DesignMatrix x = testing::make_design(testing::random_matrix(rng, 7, 50));
    const CorrelationStats stats = correlation_matrix(x);

    Matrix zero_diag = stats.matrix;
    zero_diag.diagonal().setZero();
    Vector shifted(7);
    for (Index i = 0; i < 7; ++i) shifted(i) = zero_diag.row(i).sum() / 7.0;

    CHECK(ranking(stats.averages, x.feature_names) ==
          ranking(shifted, x.feature_names));
    for (Index i = 0; i < 7; ++i) {
      CHECK(stats.averages(i) - shifted(i) == doctest::Approx(1.0 / 7.0).epsilon(1e-12));
    }
  }

  TEST_CASE("absolute averaging folds signs") {
    Matrix m(2, 5);
    m.row(0) << 1, 2, 3, 4, 5;
    m.row(1) << 5, 4, 3, 2, 1;  // perfectly anti-correlated
    const CorrelationStats s = correlation_matrix(
        testing::make_design(m), CorrelationAveraging::absolute_values);
    CHECK(s.averages(0) == doctest::Approx(1.0).epsilon(1e-12));
    const CorrelationStats plain = correlation_matrix(testing::make_design(m));
    CHECK(plain.averages(0) == doctest::Approx(0.0).epsilon(1e-12));
  }

  TEST_CASE("a single sample is rejected") {
    Matrix m(2, 1);
    m << 1, 2;
    CHECK_THROWS_AS(correlation_matrix(testing::make_design(m)), Error);
  }
}
