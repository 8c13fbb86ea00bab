// Copyright 2026 The qoptics Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>

#include <Eigen/Eigenvalues>

#include "qoptics/types.hpp"

namespace qoptics {

/// Gaussian state of `Modes` modes in quadrature form. Ordering is
/// (X_1, P_1, X_2, P_2, ...); the vacuum has cov = I/4.
template <typename Scalar, int Modes>
struct BasicGaussianState {
  static constexpr int kModes = Modes;
  static constexpr int kDim = 2 * Modes;
  using Vector = Eigen::Matrix<Scalar, kDim, 1>;
  using Matrix = Eigen::Matrix<Scalar, kDim, kDim>;

  Vector mean = Vector::Zero();
  Matrix cov = Matrix::Identity() * Scalar(kVacuumVariance);

  static BasicGaussianState vacuum() { return {}; }

  Eigen::Matrix<Scalar, 2, 2> mode_cov(int mode) const {
    return cov.template block<2, 2>(2 * mode, 2 * mode);
  }
  Eigen::Matrix<Scalar, 2, 1> mode_mean(int mode) const {
    return mean.template segment<2>(2 * mode);
  }

  /// Symmetric, positive definite, and each reduced mode obeys
  /// det(cov_mode) >= 1/16 (Heisenberg).
  void validate(Scalar tol = Scalar(1e-12)) const {
    require(mean.allFinite() && cov.allFinite(), "Gaussian state has non-finite entries");
    require((cov - cov.transpose()).cwiseAbs().maxCoeff() <= tol,
            "covariance must be symmetric");
    Eigen::SelfAdjointEigenSolver<Matrix> eig(cov);
    require(eig.eigenvalues().minCoeff() > 0, "covariance must be positive definite");
    for (int m = 0; m < Modes; ++m)
      require(mode_cov(m).determinant() >= Scalar(1.0 / 16) - tol,
              "covariance violates the uncertainty relation det >= 1/16");
  }
};

using GaussianState = BasicGaussianState<Real, 1>;
using TwoModeGaussianState = BasicGaussianState<Real, 2>;

/// Variance of X cos(theta) + P sin(theta) for mode `mode`.
template <typename Scalar, int Modes>
Scalar rotated_variance(const BasicGaussianState<Scalar, Modes>& s, Scalar theta, int mode = 0) {
  const Eigen::Matrix<Scalar, 2, 1> u(std::cos(theta), std::sin(theta));
  return u.dot(s.mode_cov(mode) * u);
}

template <typename Scalar, int Modes>
Scalar rotated_mean(const BasicGaussianState<Scalar, Modes>& s, Scalar theta, int mode = 0) {
  return std::cos(theta) * s.mean[2 * mode] + std::sin(theta) * s.mean[2 * mode + 1];
}

/// Affine quadrature map: mean -> S mean + d, cov -> S cov S^T + noise.
template <typename Scalar, int Modes>
BasicGaussianState<Scalar, Modes> transform(
    const BasicGaussianState<Scalar, Modes>& s,
    const typename BasicGaussianState<Scalar, Modes>::Matrix& S,
    const typename BasicGaussianState<Scalar, Modes>::Matrix& noise =
        BasicGaussianState<Scalar, Modes>::Matrix::Zero()) {
  BasicGaussianState<Scalar, Modes> out;
  out.mean = S * s.mean;
  out.cov = S * s.cov * S.transpose() + noise;
  return out;
}

template <typename Scalar>
BasicGaussianState<Scalar, 2> tensor(const BasicGaussianState<Scalar, 1>& a,
                                     const BasicGaussianState<Scalar, 1>& b) {
  BasicGaussianState<Scalar, 2> out;
  out.mean << a.mean, b.mean;
  out.cov.setZero();
  out.cov.template block<2, 2>(0, 0) = a.cov;
  out.cov.template block<2, 2>(2, 2) = b.cov;
  return out;
}

template <typename Scalar>
BasicGaussianState<Scalar, 1> reduce(const BasicGaussianState<Scalar, 2>& s, int mode) {
  BasicGaussianState<Scalar, 1> out;
  out.mean = s.mode_mean(mode);
  out.cov = s.mode_cov(mode);
  return out;
}

}  // namespace qoptics
