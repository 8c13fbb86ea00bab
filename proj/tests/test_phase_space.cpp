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

#include <cmath>

#include "doctest.h"
#include "qoptics/phase_space.hpp"

using namespace qoptics;

namespace {

State state(std::string_view text) { return make_state(parse_state_spec(text)); }

Real factorial(int n) { return std::tgamma(n + 1.0); }

// Even cat wavefunction magnitudes for real alpha, from the Gaussian
// position/momentum representations of |alpha> and |-alpha>.
Real cat_x_density(Real alpha, Real x) {
  const Real norm2 = 1 / (2 * (1 + std::exp(-2 * alpha * alpha)));
  const Real psi = std::exp(-(x - alpha) * (x - alpha)) + std::exp(-(x + alpha) * (x + alpha));
  return norm2 * std::sqrt(2 / kPi) * psi * psi;
}

Real cat_p_density(Real alpha, Real p) {
  const Real norm2 = 1 / (2 * (1 + std::exp(-2 * alpha * alpha)));
  const Real c = 2 * std::cos(2 * alpha * p);
  return norm2 * std::sqrt(2 / kPi) * std::exp(-2 * p * p) * c * c;
}

Real trapezoid(const VectorXr& x, const VectorXr& y) {
  Real s = 0;
  for (Eigen::Index i = 1; i < x.size(); ++i) s += 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
  return s;
}

// Quadrature moments of a density matrix from ladder matrices.
GaussianState moments_of(const MatrixXc& rho) {
  const int n = static_cast<int>(rho.rows()) - 1;
  const MatrixXc a = annihilation(n);
  const Complex ma = (rho * a).trace();
  const Complex ma2 = (rho * a * a).trace();
  const Real mn = (rho * a.adjoint() * a).trace().real();
  GaussianState s;
  s.mean << ma.real(), ma.imag();
  const Real xx = (2 * ma2.real() + 2 * mn + 1) / 4 - ma.real() * ma.real();
  const Real pp = (-2 * ma2.real() + 2 * mn + 1) / 4 - ma.imag() * ma.imag();
  const Real xp = ma2.imag() / 2 - ma.real() * ma.imag();
  s.cov << xx, xp, xp, pp;
  return s;
}

}  // namespace

TEST_CASE("state specs") {
  const auto v = std::get<GaussianState>(state("vacuum"));
  CHECK(v.mean.isZero());
  CHECK(v.cov.isApprox(Eigen::Matrix2d::Identity() / 4));

  const auto c = std::get<GaussianState>(state("coherent:1,-2"));
  CHECK(c.mean == Eigen::Vector2d(1, -2));
  const auto t = std::get<GaussianState>(state("thermal:2"));
  CHECK(t.cov(0, 0) == doctest::Approx(1.25));
  const auto s = std::get<GaussianState>(state("squeezed:0.25"));
  CHECK(s.cov(0, 0) == doctest::Approx(1.0 / 16));
  CHECK(s.cov(1, 1) == doctest::Approx(1.0));

  const auto cat = std::get<FockVector>(state("cat:2"));
  cat.validate();
  const Real norm = 1 / std::sqrt(2 * (1 + std::exp(-8.0)));
  CHECK(std::abs(cat.amps[0] - Complex(norm * 2 * std::exp(-2.0), 0)) < 1e-12);
  CHECK(std::abs(cat.amps[1]) == 0.0);
  CHECK(std::abs(cat.amps.squaredNorm() - 1) < 1e-10);

  CHECK_THROWS_AS(state("thermal:-1"), DomainError);
  CHECK_THROWS_AS(state("squeezed:0"), DomainError);
  CHECK_THROWS_AS(state("coherent:9"), DomainError);
  CHECK_THROWS_AS(state("cat:9"), DomainError);
  CHECK_THROWS_AS(state("banana"), DomainError);
  CHECK_THROWS_AS(state("fock:x"), DomainError);
}

TEST_CASE("Wigner closed forms at the origin") {
  CHECK(wigner_at(state("vacuum"), 0, 0) == doctest::Approx(2 / kPi).epsilon(1e-12));
  CHECK(wigner_at(state("fock:1"), 0, 0) == doctest::Approx(-2 / kPi).epsilon(1e-12));
  CHECK(wigner_at(state("thermal:1"), 0, 0) == doctest::Approx(1 / (1.5 * kPi)).epsilon(1e-12));
  CHECK(wigner_at(state("fock:0"), 0, 0) == doctest::Approx(2 / kPi).epsilon(1e-12));
}

TEST_CASE("Fock-series Wigner function matches closed forms on the grid") {
  const auto [x, p] = default_axes(state("fock:1"));
  const auto w1 = wigner(state("fock:1"), x, p);
  Real worst = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    for (Eigen::Index j = 0; j < p.size(); ++j) {
      const Real r2 = x[i] * x[i] + p[j] * p[j];
      const Real oracle = 2 / kPi * (4 * r2 - 1) * std::exp(-2 * r2);
      worst = std::max(worst, std::abs(w1.values(i, j) - oracle));
    }
  CHECK(worst < 1e-6 * 2 / kPi);
  CHECK(w1.values.minCoeff() == doctest::Approx(-2 / kPi).epsilon(1e-9));

  // A coherent state in Fock form must sit at (Re alpha, Im alpha).
  const Complex alpha(1, 1);
  const State fock = coherent_fock(alpha);
  const State gauss = state("coherent:1,1");
  const auto [cx, cp] = default_axes(gauss);
  const auto wf = wigner(fock, cx, cp);
  const auto wg = wigner(gauss, cx, cp);
  CHECK((wf.values - wg.values).cwiseAbs().maxCoeff() < 1e-6 * 2 / kPi);
  CHECK(wigner_at(gauss, 1, 1) == doctest::Approx(2 / kPi));
}

TEST_CASE("Wigner grids are normalised and narrow axes are rejected") {
  for (const char* spec : {"vacuum", "coherent:1,1", "fock:1", "thermal:1", "cat:2", "squeezed:0.25"}) {
    const auto [x, p] = default_axes(state(spec));
    CHECK(wigner(state(spec), x, p).integral() == doctest::Approx(1.0).epsilon(1e-3));
  }
  const VectorXr narrow = VectorXr::LinSpaced(21, -0.5, 0.5);
  CHECK_THROWS_WITH_AS(wigner(state("vacuum"), narrow, narrow), doctest::Contains("too narrow"),
                       DomainError);
}

TEST_CASE("marginals of the vacuum are Gaussian of variance 1/4") {
  const auto [x, p] = default_axes(state("vacuum"));
  const auto w = wigner(state("vacuum"), x, p);
  for (Real theta : {0.0, 0.3, kPi / 4, kPi / 2, 2.0}) {
    const auto m = marginal(w, theta);
    CHECK(trapezoid(m.x, m.density) == doctest::Approx(1.0).epsilon(2e-3));
    const Real var = trapezoid(m.x, m.density.cwiseProduct(m.x.cwiseAbs2()));
    CHECK(std::abs(var - 0.25) < 1e-3);
  }
}

TEST_CASE("cat marginals follow the analytic wavefunction") {
  const auto [x, p] = default_axes(state("cat:2"));
  const auto w = wigner(state("cat:2"), x, p);
  const auto mx = marginal(w, 0.0);
  const auto mp = marginal(w, kPi / 2);
  Real worst_x = 0;
  Real worst_p = 0;
  for (Eigen::Index i = 0; i < mx.x.size(); ++i)
    worst_x = std::max(worst_x, std::abs(mx.density[i] - cat_x_density(2, mx.x[i])));
  for (Eigen::Index i = 0; i < mp.x.size(); ++i)
    worst_p = std::max(worst_p, std::abs(mp.density[i] - cat_p_density(2, mp.x[i])));
  CHECK(worst_x < 1e-3);
  CHECK(worst_p < 1e-2);

  // Two humps near +-2 in X.
  Eigen::Index peak = 0;
  mx.density.maxCoeff(&peak);
  CHECK(std::abs(std::abs(mx.x[peak]) - 2) < 0.05);
  // Fringes in P: at least three local maxima, spaced by pi/4.
  int maxima = 0;
  for (Eigen::Index i = 1; i + 1 < mp.x.size(); ++i)
    if (mp.density[i] > mp.density[i - 1] && mp.density[i] > mp.density[i + 1] &&
        mp.density[i] > 1e-3)
      ++maxima;
  CHECK(maxima >= 3);
}

TEST_CASE("marginals stay non-negative where W is negative") {
  for (const char* spec : {"fock:1", "cat:2", "fock:3"}) {
    const auto [x, p] = default_axes(state(spec));
    const auto w = wigner(state(spec), x, p);
    CHECK(w.values.minCoeff() < 0);
    for (Real theta : {0.0, 0.4, kPi / 4, 1.1, kPi / 2, 2.5}) {
      const auto m = marginal(w, theta);
      CHECK(m.density.minCoeff() >= -1e-6);
      CHECK(trapezoid(m.x, m.density) == doctest::Approx(1.0).epsilon(2e-3));
    }
  }
}

TEST_CASE("marginal rejects an unnormalised grid") {
  const auto [x, p] = default_axes(state("vacuum"));
  auto w = wigner(state("vacuum"), x, p);
  w.values *= 2;
  CHECK_THROWS_AS(marginal(w, 0.0), DomainError);
}

TEST_CASE("Husimi function") {
  const auto [x, p] = default_axes(state("fock:1"));
  const auto qv = to_husimi(state("vacuum"), x, p);
  CHECK(qv.values(x.size() / 2, p.size() / 2) == doctest::Approx(1 / kPi).epsilon(1e-12));
  const auto q1 = to_husimi(state("fock:1"), x, p);
  CHECK(std::abs(q1.values(x.size() / 2, p.size() / 2)) < 1e-15);
  CHECK(q1.values.minCoeff() >= -1e-9);
  // Q_1 = |alpha|^2 e^{-|alpha|^2} / pi
  for (Eigen::Index i = 0; i < x.size(); i += 17)
    for (Eigen::Index j = 0; j < p.size(); j += 13) {
      const Real r2 = x[i] * x[i] + p[j] * p[j];
      CHECK(q1.values(i, j) == doctest::Approx(r2 * std::exp(-r2) / kPi).epsilon(1e-9));
    }

  const auto [cx, cp] = default_axes(state("coherent:1,-0.5"));
  const auto qc = to_husimi(state("coherent:1,-0.5"), cx, cp);
  Eigen::Index i = 0;
  Eigen::Index j = 0;
  qc.values.maxCoeff(&i, &j);
  CHECK(std::abs(cx[i] - 1) <= cx[1] - cx[0]);
  CHECK(std::abs(cp[j] + 0.5) <= cp[1] - cp[0]);

  const auto qf = to_husimi(State(coherent_fock(Complex(1, -0.5))), cx, cp);
  CHECK((qf.values - qc.values).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("Husimi equals the vacuum-convolved Wigner function") {
  for (const char* spec : {"vacuum", "fock:1", "cat:2", "squeezed:0.5", "thermal:1"}) {
    auto [x, p] = default_axes(state(spec));
    const Real hx = x[x.size() - 1] + 3;
    const Real hp = p[p.size() - 1] + 3;
    x = VectorXr::LinSpaced(241, -hx, hx);
    p = VectorXr::LinSpaced(241, -hp, hp);
    const auto w = wigner(state(spec), x, p);
    const auto q = to_husimi(state(spec), x, p);
    const auto conv = convolve_with_vacuum(w);
    CHECK((conv.values - q.values).cwiseAbs().maxCoeff() < 2e-3);
    CHECK(q.values.minCoeff() >= -1e-9);
  }
}

TEST_CASE("Gaussian P function") {
  const auto th = gaussian_p_function(std::get<GaussianState>(state("thermal:3")));
  CHECK(th.classical);
  CHECK(th.cov.isApprox(Eigen::Matrix2d::Identity() * 1.5));
  const auto co = gaussian_p_function(std::get<GaussianState>(state("coherent:1,2")));
  CHECK(co.classical);
  CHECK(co.cov.cwiseAbs().maxCoeff() < 1e-15);
  CHECK(co.mean == Eigen::Vector2d(1, 2));
  CHECK_FALSE(gaussian_p_function(std::get<GaussianState>(state("squeezed:0.5"))).classical);
}

TEST_CASE("photon distributions against closed forms") {
  const auto coh = photon_distribution(state("coherent:2"));
  coh.validate();
  CHECK(coh.mean() == doctest::Approx(4.0).epsilon(1e-10));
  CHECK(coh.variance() == doctest::Approx(4.0).epsilon(1e-9));
  for (int n = 0; n < 20; ++n)
    CHECK(coh.probs[n] ==
          doctest::Approx(std::exp(-4.0) * std::pow(4.0, n) / factorial(n)).epsilon(1e-9));

  const auto th = photon_distribution(state("thermal:3"));
  th.validate();
  CHECK(th.variance() == doctest::Approx(12.0).epsilon(1e-9));
  for (int n = 0; n < 20; ++n)
    CHECK(th.probs[n] == doctest::Approx(std::pow(3.0, n) / std::pow(4.0, n + 1)).epsilon(1e-12));

  // Squeezed vacuum: p_{2m} = (2m)! tanh^{2m} r / (2^{2m} m!^2 cosh r), odd = 0.
  for (Real eps : {0.2, 0.5, 2.0}) {
    const auto sq = photon_distribution(make_state({StateKind::kSqueezedVacuum, {}, 0, eps}));
    sq.validate();
    const Real r = std::abs(std::log(eps)) / 2;
    CHECK(sq.probs[1] < 1e-14);
    for (int m = 0; m < 10; ++m) {
      const Real oracle = factorial(2 * m) * std::pow(std::tanh(r), 2 * m) /
                          (std::pow(2.0, 2 * m) * factorial(m) * factorial(m) * std::cosh(r));
      CHECK(sq.probs[2 * m] == doctest::Approx(oracle).epsilon(1e-9));
      CHECK(sq.probs[2 * m + 1] < 1e-14);
    }
  }
}

TEST_CASE("density matrix reproduces the Gaussian moments") {
  GaussianState g;
  const Real eps = 0.3;
  const Real phi = 0.7;
  Eigen::Matrix2d rot;
  rot << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
  g.cov = rot * Eigen::Vector2d(eps / 4 * 1.4, 1.4 / (4 * eps)).asDiagonal() * rot.transpose();
  g.mean << 0.8, -0.4;
  const MatrixXc rho = density_matrix(g, 80);
  CHECK(rho.trace().real() == doctest::Approx(1.0).epsilon(1e-10));
  const auto m = moments_of(rho);
  CHECK((m.mean - g.mean).cwiseAbs().maxCoeff() < 1e-9);
  CHECK((m.cov - g.cov).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("parity sum equals W(0,0)") {
  for (const char* spec : {"vacuum", "fock:1", "thermal:0.5", "thermal:2", "cat:2", "squeezed:0.3"}) {
    const auto s = state(spec);
    CHECK(parity_wigner_origin(photon_distribution(s)) ==
          doctest::Approx(wigner_at(s, 0, 0)).epsilon(1e-9));
  }
  CHECK(parity_wigner_origin(photon_distribution(state("thermal:2"))) ==
        doctest::Approx(2 / (kPi * 5)).epsilon(1e-12));
  PhotonDistribution heavy{VectorXr::Constant(4, 0.2)};
  CHECK_THROWS_WITH_AS(parity_wigner_origin(heavy), doctest::Contains("heavy tail"), DomainError);
}

TEST_CASE("displacement") {
  const auto coh = std::get<GaussianState>(displace(state("vacuum"), Complex(1.5, -0.5)));
  CHECK(coh.mean == Eigen::Vector2d(1.5, -0.5));
  const auto back = std::get<FockVector>(displace(State(coherent_fock(Complex(1, 1))), Complex(-1, -1)));
  CHECK(std::abs(std::abs(back.amps[0]) - 1) < 1e-9);

  const auto fock_vac = std::get<FockVector>(displace(state("fock:0"), Complex(0.6, 0.2)));
  const auto oracle = coherent_fock(Complex(0.6, 0.2));
  CHECK((fock_vac.amps - oracle.amps).cwiseAbs().maxCoeff() < 1e-12);

  // Displaced parity equals the Wigner function at -beta.
  for (const char* spec : {"fock:1", "cat:2", "admix2:0.3"}) {
    const auto s = state(spec);
    for (Real bx : {-0.8, 0.0, 0.5})
      for (Real bp : {-0.3, 0.0, 0.9}) {
        const Complex beta(bx, bp);
        const Real parity = parity_wigner_origin(photon_distribution(displace(s, beta)));
        CHECK(std::abs(parity - wigner_at(s, -bx, -bp)) < 1e-6);
      }
  }
  CHECK_THROWS_WITH_AS(displace(state("cat:2"), Complex(7, 0)), doctest::Contains("overflow"),
                       DomainError);
}

TEST_CASE("admixing |1> shifts the mean; admixing |2> squeezes") {
  const Real eps = 0.05;
  const auto m1 = quadrature_moments(std::get<FockVector>(state("admix1:0.05")));
  CHECK(m1.mean[0] == doctest::Approx(eps / (1 + eps * eps)).epsilon(1e-12));
  CHECK(std::abs(m1.cov(0, 0) - 0.25) < 2 * eps * eps);

  const auto m2 = quadrature_moments(std::get<FockVector>(state("admix2:0.05")));
  CHECK(std::abs(m2.mean[0]) < 1e-15);
  CHECK(std::abs(m2.mean[1]) < 1e-15);
  const Real first_order = (1 + 2 * std::sqrt(2.0) * eps) / 4;
  CHECK(std::abs(m2.cov(0, 0) - first_order) < 2 * eps * eps);
  const auto m2n = quadrature_moments(std::get<FockVector>(state("admix2:-0.05")));
  CHECK(m2n.cov(0, 0) < 0.25);
}
