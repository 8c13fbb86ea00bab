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

// Symmetric (Weyl) versus normal ordering of photon-number powers and the
// zero-delay intensity correlation g2(0).

#pragma once

#include "qoptics/phase_space.hpp"

namespace qoptics {

/// Expectations of n and n^2 alongside their symmetrically ordered forms.
/// Entries a partial computation does not fill are NaN.
struct OrderingMoments {
  Real sym_n = 0;
  Real sym_n2 = 0;
  Real n = 0;
  Real n2 = 0;

  /// Fill the normally ordered entries from the symmetric ones.
  static OrderingMoments from_symmetric(Real sym_n, Real sym_n2);
  /// Fill the symmetric entries from <n> and <n^2>.
  static OrderingMoments from_number(Real n, Real n2);
};

/// Wigner averages of X^2 + P^2 (k = 1) and, for k = 2, of (X^2 + P^2)^2
/// by Gaussian moment factorization including the mean.
OrderingMoments sym_moments_gaussian(const GaussianState& state, int k = 2);
/// Always throws DomainError: the ordering calculus is single-mode.
OrderingMoments sym_moments_gaussian(const TwoModeGaussianState& state, int k = 2);

OrderingMoments number_moments(const PhotonDistribution& pd);

/// (sym_n2 - 2 sym_n + 1/2) / (sym_n - 1/2)^2; throws for the vacuum.
Real g2_zero(const OrderingMoments& moments);

/// sum n(n-1) p_n / (sum n p_n)^2.
Real g2_zero_fock(const PhotonDistribution& pd);
Real g2_zero_fock(const FockVector& state);

/// <n^2>/<n>^2 without normal ordering; exceeds g2(0) by 1/<n>.
Real g2_unordered(const OrderingMoments& moments);

struct OrderingEnergies {
  Real normal = 0;
  Real symmetric = 0;
  Real antinormal = 0;
};

/// Mean of a^dagger a in normal, symmetric and antinormal ordering for |n>.
OrderingEnergies ordering_energy_table(int n);

}  // namespace qoptics
