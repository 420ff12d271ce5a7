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

#ifndef NIDS_EIGH_HPP_
#define NIDS_EIGH_HPP_

#include <Eigen/Core>

#include <cmath>
#include <numeric>
#include <vector>

#include "nids/error.hpp"

namespace nids {

template <typename Scalar>
struct EighOptions {
  int max_sweeps = 100;
  Scalar off_diagonal_tol = Scalar(1e-12);  // relative to ||A||_F
  Scalar symmetry_tol = Scalar(1e-9);
};

template <typename Scalar>
struct EighResult {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> eigenvalues;               // descending
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> eigenvectors; // orthonormal columns
  int sweeps = 0;
};

/// Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps visit every (p, q) pair in row order and stop once the
/// off-diagonal Frobenius norm falls below `off_diagonal_tol` times the
/// Frobenius norm of the input, or after `max_sweeps` sweeps
/// (Error no_convergence). Input asymmetry beyond `symmetry_tol`, measured
/// against the largest entry magnitude, raises Error not_symmetric; smaller
/// asymmetry is symmetrized away before iterating.
///
/// The output is deterministic: eigenvalues sorted descending, each
/// eigenvector flipped so its largest-magnitude entry (lowest index on
/// magnitude ties) is positive, and exact eigenvalue ties ordered by the
/// lexicographic order of the sign-normalized vectors.
template <typename Scalar>
EighResult<Scalar> eigh_symmetric(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
    const EighOptions<Scalar>& opts = EighOptions<Scalar>{}) {
  using MatrixS = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using VectorS = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  if (a.rows() != a.cols()) {
    throw Error(errc::not_symmetric, "matrix is not square");
  }
  const Eigen::Index n = a.rows();
  if (n == 0) {
    throw Error(errc::not_symmetric, "matrix is empty");
  }

  const Scalar max_abs = a.cwiseAbs().maxCoeff();
  const Scalar asym = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (asym > opts.symmetry_tol * std::max(Scalar(1), max_abs)) {
    throw Error(errc::not_symmetric, "matrix asymmetry exceeds tolerance");
  }

  MatrixS s = ((a + a.transpose()) / Scalar(2)).eval();
  MatrixS v = MatrixS::Identity(n, n);
  const Scalar frob = s.norm();
  const Scalar off_target = opts.off_diagonal_tol * frob;

  auto off_diagonal_norm = [&]() {
    Scalar sum = Scalar(0);
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        sum += s(p, q) * s(p, q);
      }
    }
    return std::sqrt(Scalar(2) * sum);
  };

  int sweeps = 0;
  bool converged = (n == 1) || (off_diagonal_norm() <= off_target);
  while (!converged) {
    if (sweeps >= opts.max_sweeps) {
      throw Error(errc::no_convergence, "jacobi sweep cap reached");
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = s(p, q);
        if (apq == Scalar(0)) {
          continue;
        }
        const Scalar theta = (s(q, q) - s(p, p)) / (Scalar(2) * apq);
        Scalar t;
        if (std::abs(theta) > Scalar(1e154)) {
          t = Scalar(1) / (Scalar(2) * theta);  // avoids theta^2 overflow
        } else {
          t = std::copysign(Scalar(1), theta) /
              (std::abs(theta) + std::sqrt(theta * theta + Scalar(1)));
        }
        const Scalar c = Scalar(1) / std::sqrt(t * t + Scalar(1));
        const Scalar sn = t * c;
        const Scalar tau = sn / (Scalar(1) + c);

        const Scalar app = s(p, p);
        const Scalar aqq = s(q, q);
        s(p, p) = app - t * apq;
        s(q, q) = aqq + t * apq;
        s(p, q) = Scalar(0);
        s(q, p) = Scalar(0);
        for (Eigen::Index r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const Scalar arp = s(r, p);
            const Scalar arq = s(r, q);
            s(r, p) = arp - sn * (arq + tau * arp);
            s(p, r) = s(r, p);
            s(r, q) = arq + sn * (arp - tau * arq);
            s(q, r) = s(r, q);
          }
          const Scalar vrp = v(r, p);
          const Scalar vrq = v(r, q);
          v(r, p) = vrp - sn * (vrq + tau * vrp);
          v(r, q) = vrq + sn * (vrp - tau * vrq);
        }
      }
    }
    ++sweeps;
    converged = off_diagonal_norm() <= off_target;
  }

  // Sign convention: largest-magnitude entry of each eigenvector positive.
  for (Eigen::Index j = 0; j < n; ++j) {
    Eigen::Index arg = 0;
    Scalar best = std::abs(v(0, j));
    for (Eigen::Index i = 1; i < n; ++i) {
      const Scalar m = std::abs(v(i, j));
      if (m > best) {
        best = m;
        arg = i;
      }
    }
    if (v(arg, j) < Scalar(0)) {
      v.col(j) = -v.col(j);
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  auto lex_less = [&](Eigen::Index lhs, Eigen::Index rhs) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (v(i, lhs) != v(i, rhs)) {
        return v(i, lhs) < v(i, rhs);
      }
    }
    return false;
  };
  std::sort(order.begin(), order.end(), [&](Eigen::Index lhs, Eigen::Index rhs) {
    if (s(lhs, lhs) != s(rhs, rhs)) {
      return s(lhs, lhs) > s(rhs, rhs);
    }
    return lex_less(lhs, rhs);
  });

  EighResult<Scalar> result;
  result.eigenvalues = VectorS(n);
  result.eigenvectors = MatrixS(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    result.eigenvalues(j) = s(order[static_cast<std::size_t>(j)],
                              order[static_cast<std::size_t>(j)]);
    result.eigenvectors.col(j) = v.col(order[static_cast<std::size_t>(j)]);
  }
  result.sweeps = sweeps;
  return result;
}

}  // namespace nids

#endif  // NIDS_EIGH_HPP_
