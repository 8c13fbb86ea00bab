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

#include <array>
#include <cmath>

#include <fmt/format.h>

#include "doctest.h"
#include "qoptics/ordering_g2.hpp"

using namespace qoptics;

namespace {

GaussianState gaussian(std::string_view text) {
  return std::get<GaussianState>(make_state(parse_state_spec(text)));
}

GaussianState displaced_squeezed(Real eps, Real phi, Real x0, Real p0) {
  GaussianState s;
  const Eigen::Matrix2d d = Eigen::Vector2d(eps / 4, 1 / (4 * eps)).asDiagonal();
  const Eigen::Matrix2d r = Eigen::Rotation2D<Real>(phi).toRotationMatrix();
  s.cov = r * d * r.transpose();
  s.mean << x0, p0;
  return s;
}

// Wigner averages by trapezoid integration over a wide grid.
std::array<Real, 2> grid_averages(const GaussianState& s) {
  const auto [x, p] = default_axes(State{s}, 401);
  const auto w = wigner(State{s}, x, p);
  WignerGrid a = w, b = w;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    for (Eigen::Index j = 0; j < p.size(); ++j) {
      const Real r2 = x[i] * x[i] + p[j] * p[j];
      a.values(i, j) *= r2;
      b.values(i, j) *= r2 * r2;
    }
  return {a.integral(), b.integral()};
}

// Fully symmetrized products of a^dagger a and (a^dagger a)^2 from ladder matrices.
std::array<Real, 2> ladder_symmetric(const VectorXc& amps) {
  const int n = static_cast<int>(amps.size()) + 3;
  VectorXc psi = VectorXc::Zero(n + 1);
  psi.head(amps.size()) = amps;
  const MatrixXc a = annihilation(n);
  const MatrixXc ad = a.adjoint();
  const MatrixXc sym1 = 0.5 * (ad * a + a * ad);
  const std::array<const MatrixXc*, 2> ops{&ad, &a};
  MatrixXc sym2 = MatrixXc::Zero(n + 1, n + 1);
  int count = 0;
  for (int mask = 0; mask < 16; ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != 2) continue;
    MatrixXc prod = MatrixXc::Identity(n + 1, n + 1);
    for (int bit = 0; bit < 4; ++bit) prod = prod * *ops[(mask >> bit) & 1];
    sym2 += prod;
    ++count;
  }
  sym2 /= count;
  return {psi.dot(sym1 * psi).real(), psi.dot(sym2 * psi).real()};
}

}  // namespace

TEST_CASE("symmetric moments of reference Gaussian states") {
  const auto vac = sym_moments_gaussian(gaussian("vacuum"));
  CHECK(vac.sym_n == doctest::Approx(0.5));
  CHECK(vac.sym_n2 == doctest::Approx(0.5));
  CHECK(vac.n == doctest::Approx(0.0));
  CHECK(vac.n2 == doctest::Approx(0.0));

  for (Real eps : {0.2, 0.5, 0.8, 3.0}) {
    const auto m = sym_moments_gaussian(gaussian(fmt::format("squeezed:{}", eps)));
    CHECK(m.sym_n == doctest::Approx((eps + 1 / eps) / 4));
    CHECK(m.sym_n2 == doctest::Approx(3.0 / 16 * (eps * eps + 1 / (eps * eps)) + 1.0 / 8));
    CHECK(m.sym_n2 == doctest::Approx(3 * m.sym_n * m.sym_n - 0.25));
  }

  for (Real x0 : {0.5, 1.0, 2.5}) {
    const auto m = sym_moments_gaussian(gaussian(fmt::format("coherent:{}", x0)));
    CHECK(m.sym_n == doctest::Approx(x0 * x0 + 0.5));
    CHECK(m.sym_n2 == doctest::Approx(std::pow(x0, 4) + 2 * x0 * x0 + 0.5));
  }

  const auto first = sym_moments_gaussian(gaussian("thermal:2"), 1);
  CHECK(first.sym_n == doctest::Approx(2.5));
  CHECK(std::isnan(first.sym_n2));
}

TEST_CASE("Gaussian fourth moments agree with Wigner-grid integration") {
  for (const auto& s : {displaced_squeezed(0.3, 0.4, 0.7, -0.5), displaced_squeezed(2.0, -1.1, -1.2, 0.3),
                        gaussian("thermal:1.5"), gaussian("coherent:0.8,-0.6")}) {
    const auto m = sym_moments_gaussian(s);
    const auto [g1, g2] = grid_averages(s);
    CHECK(std::abs(m.sym_n - g1) < 1e-3);
    CHECK(std::abs(m.sym_n2 - g2) < 1e-3);
  }
}

TEST_CASE("g2 of coherent, thermal and squeezed light") {
  for (Real x0 : {0.3, 1.0, 4.0})
    CHECK(g2_zero(sym_moments_gaussian(gaussian(fmt::format("coherent:{}", x0)))) ==
          doctest::Approx(1.0));
  for (Real nbar : {0.1, 1.0, 10.0})
    CHECK(g2_zero(sym_moments_gaussian(gaussian(fmt::format("thermal:{}", nbar)))) ==
          doctest::Approx(2.0));
  const auto sq = sym_moments_gaussian(gaussian("squeezed:0.5"));
  CHECK(g2_zero(sq) == doctest::Approx(11.0));
  for (Real eps : {0.2, 0.5, 0.8}) {
    const auto m = sym_moments_gaussian(gaussian(fmt::format("squeezed:{}", eps)));
    CHECK(g2_zero(m) - 3 - 1 / (m.sym_n - 0.5) == doctest::Approx(0.0).epsilon(1e-12));
  }
  CHECK_THROWS_WITH_AS(g2_zero(sym_moments_gaussian(gaussian("vacuum"))),
                       doctest::Contains("vacuum"), DomainError);
}

TEST_CASE("Wigner route equals the Fock route") {
  for (const char* spec : {"squeezed:0.2", "squeezed:0.5", "squeezed:0.8", "thermal:0.1", "thermal:1",
                           "thermal:10", "coherent:1.5,0.5"}) {
    const auto s = gaussian(spec);
    const Real fock = g2_zero_fock(photon_distribution(State{s}));
    CHECK(std::abs(g2_zero(sym_moments_gaussian(s)) - fock) < 1e-6);
    const auto pd = number_moments(photon_distribution(State{s}));
    const auto w = sym_moments_gaussian(s);
    CHECK(std::abs(pd.sym_n - w.sym_n) < 1e-6);
    CHECK(std::abs(pd.sym_n2 - w.sym_n2) < 1e-5 * std::max(1.0, w.sym_n2));
  }
}

TEST_CASE("g2 from photon-number states") {
  const auto fock = [](int n) {
    return std::get<FockVector>(make_state(parse_state_spec(fmt::format("fock:{}", n))));
  };
  CHECK(g2_zero_fock(fock(1)) == doctest::Approx(0.0));
  CHECK(g2_zero_fock(fock(2)) == doctest::Approx(0.5));
  CHECK(g2_zero_fock(fock(5)) == doctest::Approx(0.8));
  CHECK(std::abs(g2_zero_fock(coherent_fock({1.2, -0.7})) - 1) < 1e-8);
  CHECK_THROWS_AS(g2_zero_fock(fock(0)), DomainError);
}

TEST_CASE("ordering identities from ladder matrices") {
  std::vector<VectorXc> states{coherent_fock({0.9, 0.4}, 30).amps};
  for (const char* spec : {"fock:3", "cat:1.2", "cat:1.2,odd", "admix1:0.6", "admix2:0.6"})
    states.push_back(std::get<FockVector>(make_state(parse_state_spec(spec))).amps);
  for (const auto& amps : states) {
    const auto exact = ladder_symmetric(amps);
    PhotonDistribution pd{amps.cwiseAbs2()};
    const auto m = number_moments(pd);
    CHECK(std::abs(exact[0] - m.sym_n) < 1e-10);
    CHECK(std::abs(exact[1] - m.sym_n2) < 1e-10);
    CHECK(m.sym_n - m.n == doctest::Approx(0.5));
    CHECK(m.sym_n2 - m.n2 - m.n == doctest::Approx(0.5));
    CHECK(m.sym_n >= 0.5);
  }
}

TEST_CASE("unordered estimator overshoots by 1/<n>") {
  for (Real x0 : {0.5, 1.0, 3.0}) {
    const auto m = sym_moments_gaussian(gaussian(fmt::format("coherent:{}", x0)));
    CHECK(g2_unordered(m) == doctest::Approx(1 + 1 / m.n).epsilon(1e-12));
  }
}

TEST_CASE("energy in the three orderings") {
  const auto zero = ordering_energy_table(0);
  CHECK(zero.normal == 0);
  CHECK(zero.symmetric == 0.5);
  CHECK(zero.antinormal == 1);
  const auto five = ordering_energy_table(5);
  CHECK(five.normal == 5);
  CHECK(five.symmetric == 5.5);
  CHECK(five.antinormal == 6);
  for (int n = 0; n < 20; ++n) {
    const auto e = ordering_energy_table(n);
    CHECK(e.antinormal - e.normal == 1);
  }
  CHECK_THROWS_AS(ordering_energy_table(-1), DomainError);
}

TEST_CASE("two-mode input is rejected") {
  CHECK_THROWS_AS(sym_moments_gaussian(TwoModeGaussianState::vacuum()), DomainError);
  CHECK_THROWS_AS(sym_moments_gaussian(gaussian("vacuum"), 3), DomainError);
}
