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

// Ideal detectors (unit efficiency, strong local oscillator) and
// filtered back-projection tomography.

#pragma once

#include <cstdint>
#include <vector>

#include "qoptics/phase_space.hpp"

namespace qoptics {

struct QuadratureSamples {
  Real theta = 0;
  VectorXr values;
};

struct TomographyDataset {
  std::vector<QuadratureSamples> angles;

  /// At least 8 distinct angles in [0, pi) and 1000 finite samples each.
  void validate() const;
};

using HeterodyneSamples = Eigen::Matrix<Real, Eigen::Dynamic, 2>;

/// Photon counts drawn from photon_distribution(state).
Eigen::VectorXi sample_direct(const State& state, int shots, std::uint64_t seed);

/// Outcomes of X cos(theta) + P sin(theta). Gaussian states use the exact
/// normal law; Fock states invert the CDF of the Wigner-grid marginal.
QuadratureSamples sample_homodyne(const State& state, Real theta, int shots, std::uint64_t seed);

/// (X, P) pairs drawn from the Husimi Q density; for Gaussian states the
/// covariance is cov + I/4.
HeterodyneSamples sample_heterodyne(const State& state, int shots, std::uint64_t seed);

/// Homodyne data at angles k pi / count, k = 0..count-1.
TomographyDataset simulate_tomography(const State& state, int angle_count, int shots,
                                      std::uint64_t seed);

struct TomographyResult {
  WignerGrid grid;
  /// Integral of the raw back-projection before renormalisation.
  Real scale = 1;
  /// Ramp cutoff used per angle, in cycles per quadrature unit.
  VectorXr cutoffs;
};

enum class RampWindow { kRectangular, kHann };

struct TomographyOptions {
  /// Ramp cutoff never exceeds this fraction of the histogram Nyquist
  /// frequency.
  Real nyquist_fraction = 0.8;
  /// The cutoff also stops at the last frequency where |phi(f)|^2 of the
  /// empirical characteristic function exceeds noise_floor / shots.
  Real noise_floor = 12;
  RampWindow window = RampWindow::kRectangular;
  /// Filtered projections are interpolated linearly in angle onto this many
  /// back-projection angles per measured angle.
  int angular_upsampling = 8;
};

/// Filtered back-projection of per-angle histograms (Freedman-Diaconis
/// bins) with a band-limited ramp filter.
TomographyResult reconstruct_wigner(const TomographyDataset& data, const VectorXr& x_axis,
                                    const VectorXr& p_axis,
                                    const TomographyOptions& options = {});

/// Square axes wide enough for the spread seen in the data.
std::pair<VectorXr, VectorXr> tomography_axes(const TomographyDataset& data, int points = 121);

/// Mean and covariance of a gridded quasi-probability by trapezoid moments.
GaussianState grid_moments(const WignerGrid& grid);

/// Sum |a - b| dX dP on a common grid.
Real l1_distance(const WignerGrid& a, const WignerGrid& b);

}  // namespace qoptics
