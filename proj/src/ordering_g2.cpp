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

#include "qoptics/ordering_g2.hpp"

#include <cmath>
#include <limits>

namespace qoptics {

namespace {

constexpr Real kNaN = std::numeric_limits<Real>::quiet_NaN();

Real weighted_sum(const PhotonDistribution& pd, int power) {
  Real s = 0;
  for (Eigen::Index n = 0; n < pd.probs.size(); ++n)
    s += std::pow(static_cast<Real>(n), power) * pd.probs[n];
  return s;
}

}  // namespace

OrderingMoments OrderingMoments::from_symmetric(Real sym_n, Real sym_n2) {
  OrderingMoments m;
  m.sym_n = sym_n;
  m.sym_n2 = sym_n2;
  m.n = sym_n - 0.5;
  m.n2 = sym_n2 - m.n - 0.5;
  return m;
}

OrderingMoments OrderingMoments::from_number(Real n, Real n2) {
  OrderingMoments m;
  m.n = n;
  m.n2 = n2;
  m.sym_n = n + 0.5;
  m.sym_n2 = n2 + n + 0.5;
  return m;
}

OrderingMoments sym_moments_gaussian(const GaussianState& state, int k) {
  require(k == 1 || k == 2, "only symmetric powers k = 1 and k = 2 are supported");
  state.validate();
  const auto& m = state.mean;
  const auto& c = state.cov;
  const Real m2 = m.squaredNorm();
  const Real tr = c.trace();
  const Real sym_n = m2 + tr;
  if (k == 1) {
    OrderingMoments out = OrderingMoments::from_symmetric(sym_n, kNaN);
    out.n2 = kNaN;
    return out;
  }
  const Real sym_n2 = m2 * m2 + 2 * m2 * tr + 4 * m.dot(c * m) + tr * tr + 2 * (c * c).trace();
  return OrderingMoments::from_symmetric(sym_n, sym_n2);
}

OrderingMoments sym_moments_gaussian(const TwoModeGaussianState&, int) {
  throw DomainError("ordering moments need a single-mode state; reduce the two-mode state first");
}

OrderingMoments number_moments(const PhotonDistribution& pd) {
  return OrderingMoments::from_number(weighted_sum(pd, 1), weighted_sum(pd, 2));
}

Real g2_zero(const OrderingMoments& moments) {
  const Real n = moments.sym_n - 0.5;
  if (!(std::abs(n) > 1e-12)) throw DomainError("g2(0) is undefined for vacuum");
  require(std::isfinite(moments.sym_n2), "g2(0) needs the second symmetric moment");
  return (moments.sym_n2 - 2 * moments.sym_n + 0.5) / (n * n);
}

Real g2_zero_fock(const PhotonDistribution& pd) {
  const Real n = weighted_sum(pd, 1);
  if (!(n > 1e-12)) throw DomainError("g2(0) needs a nonzero mean photon number");
  return (weighted_sum(pd, 2) - n) / (n * n);
}

Real g2_zero_fock(const FockVector& state) {
  state.validate();
  return g2_zero_fock(PhotonDistribution{state.amps.cwiseAbs2()});
}

Real g2_unordered(const OrderingMoments& moments) {
  if (!(std::abs(moments.n) > 1e-12)) throw DomainError("undefined for vacuum");
  return moments.n2 / (moments.n * moments.n);
}

OrderingEnergies ordering_energy_table(int n) {
  require(n >= 0, "photon number must be >= 0");
  const auto v = static_cast<Real>(n);
  return {v, v + 0.5, v + 1};
}

}  // namespace qoptics
