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

#include "nids/eigh.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace nids;

TEST_SUITE("eigh") {
  TEST_CASE("identity matrix") {
    const Matrix a = Matrix::Identity(3, 3);
    const EighResult<double> r = eigh_symmetric<double>(a);
    for (int i = 0; i < 3; ++i) {
      CHECK(r.eigenvalues(i) == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK((r.eigenvectors * r.eigenvectors.transpose() - Matrix::Identity(3, 3))
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
  }

  TEST_CASE("diagonal matrix keeps axis-aligned eigenvectors") {
    Matrix a = Matrix::Zero(3, 3);
    a.diagonal() << 4.0, 1.0, 0.0;
    const EighResult<double> r = eigh_symmetric<double>(a);
    CHECK(r.eigenvalues(0) == doctest::Approx(4.0));
    CHECK(r.eigenvalues(1) == doctest::Approx(1.0));
    CHECK(r.eigenvalues(2) == doctest::Approx(0.0));
    CHECK(r.eigenvectors(0, 0) == doctest::Approx(1.0));
    CHECK(r.eigenvectors(1, 1) == doctest::Approx(1.0));
    CHECK(r.eigenvectors(2, 2) == doctest::Approx(1.0));
  }

  TEST_CASE("random symmetric matrices reconstruct and stay orthonormal") {
    Rng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
      const Index n = 2 + static_cast<Index>(rng.next_below(9));
      const Matrix a = testing::random_symmetric(rng, n);
      const EighResult<double> r = eigh_symmetric<double>(a);

      const Matrix reconstructed =
          r.eigenvectors * r.eigenvalues.asDiagonal() * r.eigenvectors.transpose();
      CHECK((reconstructed - a).cwiseAbs().maxCoeff() <= 1e-8 * a.norm());
      CHECK((r.eigenvectors.transpose() * r.eigenvectors - Matrix::Identity(n, n))
                .cwiseAbs()
                .maxCoeff() <= 1e-10);
      for (Index i = 0; i + 1 < n; ++i) {
        CHECK(r.eigenvalues(i) >= r.eigenvalues(i + 1));
      }
    }
  }

  TEST_CASE("eigenvector equation holds column by column") {
    Rng rng(43);
    const Matrix a = testing::random_symmetric(rng, 8);
    const EighResult<double> r = eigh_symmetric<double>(a);
    for (Index i = 0; i < 8; ++i) {
      const Vector residual =
          a * r.eigenvectors.col(i) - r.eigenvalues(i) * r.eigenvectors.col(i);
      CHECK(residual.cwiseAbs().maxCoeff() <= 1e-8 * a.norm());
    }
  }

  TEST_CASE("top eigenpair matches a power-iteration oracle") {
    Rng rng(47);
    Matrix a = testing::random_symmetric(rng, 8);
    // Shift to make the matrix positive definite so power iteration finds
    // the eigenvalue that is largest in magnitude and in value at once.
    a += 10.0 * Matrix::Identity(8, 8);
    const EighResult<double> r = eigh_symmetric<double>(a);
    const oracles::TopEigenpair top = oracles::power_iteration(a);
    CHECK(r.eigenvalues(0) == doctest::Approx(top.value).epsilon(1e-8));
    CHECK(std::abs(top.vector.dot(r.eigenvectors.col(0))) ==
          doctest::Approx(1.0).epsilon(1e-8));
  }

  TEST_CASE("sign convention puts the largest entry positive") {
    Rng rng(53);
    const Matrix a = testing::random_symmetric(rng, 6);
    const EighResult<double> r = eigh_symmetric<double>(a);
    for (Index j = 0; j < 6; ++j) {
      Index arg = 0;
      r.eigenvectors.col(j).cwiseAbs().maxCoeff(&arg);
      CHECK(r.eigenvectors(arg, j) > 0.0);
    }
  }

  TEST_CASE("asymmetry beyond tolerance is rejected") {
    Matrix a(2, 2);
    a << 1.0, 2.0, 2.5, 1.0;
    try {
      eigh_symmetric<double>(a);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == errc::not_symmetric);
    }
  }

  TEST_CASE("non-square input is rejected") {
    const Matrix a = Matrix::Zero(2, 3);
    CHECK_THROWS_AS(eigh_symmetric<double>(a), Error);
  }

  TEST_CASE("zero matrix converges immediately") {
    const Matrix a = Matrix::Zero(4, 4);
    const EighResult<double> r = eigh_symmetric<double>(a);
    CHECK(r.eigenvalues.cwiseAbs().maxCoeff() == 0.0);
    CHECK(r.sweeps == 0);
  }

  TEST_CASE("works for float scalars too") {
    using MatrixF = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic>;
    MatrixF a(2, 2);
    a << 2.0f, 1.0f, 1.0f, 2.0f;
    EighOptions<float> opts;
    opts.off_diagonal_tol = 1e-6f;
    const EighResult<float> r = eigh_symmetric<float>(a, opts);
    CHECK(r.eigenvalues(0) == doctest::Approx(3.0f).epsilon(1e-5));
    CHECK(r.eigenvalues(1) == doctest::Approx(1.0f).epsilon(1e-5));
  }
}
