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

// Single-mode states in Fock and Gaussian form and their phase-space
// distributions. Quadratures are X = (a + a^dag)/2, P = (a - a^dag)/2i with
// alpha = X + iP; every distribution is a density over dX dP.

#pragma once

#include <string_view>
#include <variant>

#include "qoptics/gaussian_state.hpp"

namespace qoptics {

inline constexpr int kDefaultTruncation = 64;

/// Truncated pure state sum_n c_n |n>, n = 0..truncation().
struct FockVector {
  VectorXc amps;

  int truncation() const { return static_cast<int>(amps.size()) - 1; }
  /// Throws DomainError unless the norm is 1 within 1e-10.
  void validate() const;
};

struct PhotonDistribution {
  VectorXr probs;

  Real mean() const;
  Real variance() const;
  void validate() const;
};

using State = std::variant<GaussianState, FockVector>;

/// W(X, P) on a rectangular grid; values(i, j) sits at (x_axis[i], p_axis[j]).
struct WignerGrid {
  VectorXr x_axis;
  VectorXr p_axis;
  MatrixXr values;

  Real dx() const { return x_axis[1] - x_axis[0]; }
  Real dp() const { return p_axis[1] - p_axis[0]; }
  /// Trapezoid integral over the grid.
  Real integral() const;
  /// Bilinear interpolation; zero outside the grid.
  Real at(Real x, Real p) const;
};

enum class StateKind { kVacuum, kCoherent, kThermal, kSqueezedVacuum, kFock, kCat, kAdmixture };

struct StateSpec {
  StateKind kind = StateKind::kVacuum;
  Complex alpha{0, 0};
  Real nbar = 0;
  Real epsilon = 1;
  int n = 0;
  bool even = true;
  int admix_level = 1;
  int truncation = kDefaultTruncation;
};

/// Parses vacuum, coherent:RE[,IM], thermal:NBAR, squeezed:EPS, fock:N,
/// cat:ALPHA[,odd], admix1:EPS, admix2:EPS.
StateSpec parse_state_spec(std::string_view text);

/// Gaussian kinds return GaussianState, the others a normalised FockVector.
/// squeezed_vacuum(eps) has cov = diag(eps/4, 1/(4 eps)).
State make_state(const StateSpec& spec);

/// Coherent amplitudes e^{-|a|^2/2} a^n / sqrt(n!), n <= truncation; throws
/// if the tail beyond the truncation exceeds 1e-10.
FockVector coherent_fock(Complex alpha, int truncation = kDefaultTruncation);

/// Annihilation operator on span{|0>, ..., |truncation>}.
MatrixXc annihilation(int truncation);

/// Displacement exp(beta a^dag - beta^* a) restricted to the first
/// truncation + 1 levels (computed in an enlarged space).
MatrixXc displacement_matrix(Complex beta, int truncation);

/// Density matrix of a single-mode Gaussian state on levels 0..truncation,
/// built as D(alpha) R(phi) S(r) rho_thermal S^dag R^dag D^dag.
MatrixXc density_matrix(const GaussianState& state, int truncation);

/// Mean and covariance of (X, P) for a Fock vector, from ladder matrices.
GaussianState quadrature_moments(const FockVector& state);

WignerGrid wigner(const State& state, const VectorXr& x_axis, const VectorXr& p_axis);

/// Single-point Wigner value (no normalisation check).
Real wigner_at(const State& state, Real x, Real p);

/// Axis pair covering 5 standard deviations around the mean with `points`
/// samples per axis (odd, so the mean is a node when it is 0).
std::pair<VectorXr, VectorXr> default_axes(const State& state, int points = 201);

struct Marginal {
  Real theta = 0;
  VectorXr x;
  VectorXr density;
};

/// Radon projection onto X_theta = X cos(theta) + P sin(theta).
Marginal marginal(const WignerGrid& grid, Real theta);

/// Husimi Q on the grid: Gaussian states analytically (cov + I/4), Fock
/// states from Q(alpha) = |<alpha|psi>|^2 / pi.
WignerGrid to_husimi(const State& state, const VectorXr& x_axis, const VectorXr& p_axis);

/// Discrete convolution of a grid with the vacuum Wigner function.
WignerGrid convolve_with_vacuum(const WignerGrid& grid);

struct GaussianPFunction {
  bool classical = false;
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();
  Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
};

/// cov_P = cov - I/4 when positive semidefinite; otherwise classical=false.
GaussianPFunction gaussian_p_function(const GaussianState& state);

/// (2/pi) sum (-1)^n p_n; throws when the distribution misses more than
/// 1e-8 of probability.
Real parity_wigner_origin(const PhotonDistribution& pd);

State displace(const State& state, Complex beta);

/// Fock: |c_n|^2. Gaussian: diagonal of the density matrix, truncated
/// adaptively until the tail is below 1e-12.
PhotonDistribution photon_distribution(const State& state);

}  // namespace qoptics
