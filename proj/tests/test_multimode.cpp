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
#include <random>

#include "doctest.h"
#include "qoptics/multimode.hpp"

using namespace qoptics;

namespace {

GaussianState coherent(Real x, Real p) {
  GaussianState s;
  s.mean << x, p;
  return s;
}

GaussianState squeezed(Real eps, Real angle) {
  GaussianState s;
  const Eigen::Matrix2d r = Eigen::Rotation2D<Real>(angle).toRotationMatrix();
  s.cov = r * Eigen::Vector2d(eps / 4, 1 / (4 * eps)).asDiagonal() * r.transpose();
  return s;
}

Real var(const TwoModeGaussianState& s, const Eigen::Vector4d& u) { return u.dot(s.cov * u); }

Real total_sym_n(const TwoModeGaussianState& s) { return s.mean.squaredNorm() + s.cov.trace(); }

}  // namespace

TEST_CASE("beam splitter conventions") {
  const auto sym = make_beam_splitter(BeamSplitterKind::kSymmetric, 0.5);
  CHECK(sym.t1.real() == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(sym.r1.imag() == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(sym.r1.real() == 0);
  CHECK(std::arg(sym.r1) + std::arg(sym.r2) == doctest::Approx(kPi));

  const auto asym = make_beam_splitter(BeamSplitterKind::kAsymmetric, 0.5);
  CHECK(std::arg(asym.r1) == doctest::Approx(0.0));
  CHECK(std::arg(asym.r2) == doctest::Approx(kPi));

  const auto id = make_beam_splitter(BeamSplitterKind::kSymmetric, 1.0);
  CHECK(std::abs(id.r1) == 0);
  TwoModeGaussianState in = tensor(coherent(1, 2), squeezed(0.3, 0.2));
  const auto out = apply_beam_splitter(id, in);
  CHECK((out.mean - in.mean).norm() < 1e-15);
  CHECK((out.cov - in.cov).norm() < 1e-15);

  CHECK_THROWS_AS(make_beam_splitter(BeamSplitterKind::kSymmetric, 1.1), DomainError);
  BeamSplitter bad = sym;
  bad.r2 = -bad.r2;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  CHECK_THROWS_AS(apply_beam_splitter(bad, in), DomainError);
}

TEST_CASE("Stokes closure for random splitters") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<Real> u(0, 1);
  for (int k = 0; k < 50; ++k) {
    const auto bs = make_beam_splitter(u(rng), 2 * kPi * u(rng));
    CHECK_NOTHROW(bs.validate());
    CHECK(std::abs(std::conj(bs.r1) * bs.r1 + std::conj(bs.t1) * bs.t2 - 1.0) < 1e-12);
    CHECK(std::abs(std::conj(bs.r1) * bs.t1 + std::conj(bs.t1) * bs.r2) < 1e-12);
    const Complex e{u(rng) - 0.5, u(rng) - 0.5};
    const auto [back1, back2] = stokes_round_trip(bs, e);
    CHECK(std::abs(back1 - e) < 1e-10);
    CHECK(std::abs(back2) < 1e-10);
  }
}

TEST_CASE("passive splitting of coherent and vacuum inputs") {
  const auto bs = make_beam_splitter(BeamSplitterKind::kSymmetric, 0.5);
  const auto out = apply_beam_splitter(bs, tensor(coherent(2, -1), GaussianState::vacuum()));
  for (int m = 0; m < 2; ++m) {
    CHECK(out.mode_mean(m).squaredNorm() == doctest::Approx(2.5));
    CHECK((out.mode_cov(m) - Eigen::Matrix2d::Identity() / 4).norm() < 1e-15);
  }
  const auto two = apply_beam_splitter(bs, tensor(coherent(1, 0), coherent(0, 3)));
  CHECK(std::abs(two.cov(0, 2)) <= 1e-12);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<Real> u(0.1, 0.9);
  for (int k = 0; k < 20; ++k) {
    const auto split = make_beam_splitter(u(rng), 7 * u(rng));
    const auto in = tensor(squeezed(u(rng), 3 * u(rng)), coherent(u(rng), -u(rng)));
    CHECK(total_sym_n(apply_beam_splitter(split, in)) == doctest::Approx(total_sym_n(in)).epsilon(1e-12));
  }
}

TEST_CASE("EPR correlations from twin squeezed inputs") {
  const auto bs = make_beam_splitter(BeamSplitterKind::kSymmetric, 0.5);
  const Eigen::Vector4d sum_x(1, 0, 1, 0);
  const Eigen::Vector4d diff_p(0, 1, 0, -1);
  for (Real eps : {0.2, 0.1, 0.05}) {
    const auto out = apply_beam_splitter(bs, epr_pair(eps));
    CHECK(var(out, sum_x) == doctest::Approx(2 * eps / 4).epsilon(1e-12));
    CHECK(var(out, diff_p) == doctest::Approx(2 * eps / 4).epsilon(1e-12));
    CHECK((var(out, sum_x) + var(out, diff_p)) / eps == doctest::Approx(1.0).epsilon(1e-12));
  }
  const auto out = apply_beam_splitter(bs, epr_pair(0.1));
  CHECK(var(out, sum_x) < 0.5);
  CHECK(var(out, diff_p) < 0.5);
  CHECK(out.mode_cov(0)(0, 0) > 0.25);
}

TEST_CASE("EPR commutators on truncated ladder matrices") {
  const auto entries = epr_commutator_check();
  REQUIRE(entries.size() == 6);
  for (const auto& e : entries) {
    INFO(e.name);
    CHECK(e.deviation <= 1e-10);
    CHECK(std::abs(e.value - e.expected) <= 1e-10);
  }
  CHECK(entries[0].expected == Complex{0, 0.5});
  CHECK(entries[5].expected == Complex{0, 0});
}

TEST_CASE("named channels") {
  for (auto kind : {ChannelKind::kAttenuation, ChannelKind::kAmplification, ChannelKind::kPhaseSensitive,
                    ChannelKind::kPhaseConjugation, ChannelKind::kRepeater})
    CHECK(parse_channel_kind(channel_name(kind)) == kind);
  CHECK_THROWS_AS(parse_channel_kind("mirror"), DomainError);

  const auto att = make_channel(ChannelKind::kAttenuation, 1.0);
  CHECK(att.coeffs(0, 0) == Complex{1, 0});
  CHECK(std::abs(att.coeffs(0, 1)) == 0);
  const auto amp = make_channel(ChannelKind::kAmplification, 1.0);
  CHECK(std::abs(amp.coeffs(0, 3)) == 0);
  const auto pc = make_channel(ChannelKind::kPhaseConjugation, 1.0);
  CHECK(std::abs(pc.coeffs(0, 0)) == 0);
  CHECK(pc.coeffs(0, 1).real() == doctest::Approx(std::sqrt(2.0)));
  CHECK(pc.coeffs(0, 2).real() == doctest::Approx(1.0));
  CHECK(std::abs(pc.coeffs(0, 3)) == 0);

  CHECK_THROWS_WITH_AS(make_channel(ChannelKind::kSingleModeAttenuation, 0.5),
                       doctest::Contains("not a valid field operator"), DomainError);
  CHECK_THROWS_AS(make_channel(ChannelKind::kAttenuation, 1.5), DomainError);
  CHECK_THROWS_AS(make_channel(ChannelKind::kAmplification, 0.5), DomainError);
  CHECK_THROWS_AS(make_channel(ChannelKind::kPhaseConjugation, 0.0), DomainError);
}

TEST_CASE("channel outputs") {
  const auto amp = apply_channel(make_channel(ChannelKind::kAmplification, 2), coherent(1, 0));
  CHECK(amp.state.cov(0, 0) == doctest::Approx(0.75));

  const auto ps = apply_channel(make_channel(ChannelKind::kPhaseSensitive, 2), coherent(1, 0));
  CHECK(ps.state.cov(0, 0) == doctest::Approx(std::pow(std::sqrt(2.0) + 1, 2) / 4));
  CHECK(ps.state.cov(1, 1) == doctest::Approx(std::pow(std::sqrt(2.0) - 1, 2) / 4));
  CHECK(ps.state.cov.determinant() == doctest::Approx(1.0 / 16));

  const auto att = apply_channel(make_channel(ChannelKind::kAttenuation, 0.25), coherent(2, -1));
  CHECK(att.state.mean[0] == doctest::Approx(1.0));
  CHECK(att.state.mean[1] == doctest::Approx(-0.5));
  CHECK((att.state.cov - Eigen::Matrix2d::Identity() / 4).norm() < 1e-15);
  CHECK(att.state.mean.squaredNorm() == doctest::Approx(0.25 * 5));

  const auto pc = apply_channel(make_channel(ChannelKind::kPhaseConjugation, 1), coherent(1, 2));
  CHECK(pc.state.mean[0] == doctest::Approx(1.0));
  CHECK(pc.state.mean[1] == doctest::Approx(-2.0));

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<Real> u(0.05, 0.95);
  for (int k = 0; k < 20; ++k) {
    const auto in = squeezed(u(rng), 4 * u(rng));
    const GaussianState anc = squeezed(u(rng), 4 * u(rng));
    for (auto kind : {ChannelKind::kAttenuation, ChannelKind::kAmplification, ChannelKind::kPhaseSensitive,
                      ChannelKind::kPhaseConjugation}) {
      const Real param = kind == ChannelKind::kAttenuation ? u(rng) : 1 + 5 * u(rng);
      const auto out = apply_channel(make_channel(kind, param), in, anc);
      CHECK(out.state.cov.determinant() >= 1.0 / 16 - 1e-12);
    }
    const Real g = 1 + 5 * u(rng);
    CHECK(apply_channel(make_channel(ChannelKind::kAmplification, g), in).sym_n >
          in.mean.squaredNorm() + in.cov.trace());
  }
}

TEST_CASE("noise figures") {
  CHECK(noise_figure(ChannelKind::kAmplification, 2) == doctest::Approx(2.0 / 3));
  CHECK(noise_figure(ChannelKind::kAmplification, 1e9) == doctest::Approx(0.5));
  CHECK(noise_figure(ChannelKind::kPhaseConjugation, 1) == doctest::Approx(1.0 / 3));
  CHECK(noise_figure(ChannelKind::kPhaseConjugation, 1e9) == doctest::Approx(0.5));
  CHECK(noise_figure(ChannelKind::kRepeater, 3) == noise_figure(ChannelKind::kPhaseConjugation, 3));
  for (Real g : {1.0, 2.0, 50.0}) CHECK(noise_figure(ChannelKind::kPhaseSensitive, g) == 1);
  CHECK(noise_figure(ChannelKind::kAttenuation, 0.3) == doctest::Approx(0.3));
  CHECK_THROWS_AS(noise_figure(ChannelKind::kAmplification, 0.9), DomainError);

  std::mt19937_64 rng(13);
  std::uniform_real_distribution<Real> u(0, 1);
  for (int k = 0; k < 20; ++k) {
    const Real eta = u(rng);
    const Real g = 1 + 20 * u(rng);
    CHECK(std::abs(noise_figure_numeric(make_channel(ChannelKind::kAttenuation, eta)) -
                   noise_figure(ChannelKind::kAttenuation, eta)) < 1e-10);
    for (auto kind : {ChannelKind::kAmplification, ChannelKind::kPhaseSensitive,
                      ChannelKind::kPhaseConjugation, ChannelKind::kRepeater})
      CHECK(std::abs(noise_figure_numeric(make_channel(kind, g), 0.7) - noise_figure(kind, g)) < 1e-10);
  }
}

TEST_CASE("sideband states") {
  const auto vac = sideband_state(10, 1.0);
  CHECK((vac.sidebands.cov - Eigen::Matrix4d::Identity() / 4).norm() < 1e-15);
  CHECK(vac.carrier_x0 == 10);

  const auto s = sideband_state(10, 0.1);
  CHECK(var(s.sidebands, Eigen::Vector4d(1, 0, 1, 0)) == doctest::Approx(0.05));
  CHECK(var(s.sidebands, Eigen::Vector4d(0, 1, 0, -1)) == doctest::Approx(0.05));
  CHECK(var(s.sidebands, Eigen::Vector4d(1, 0, -1, 0)) == doctest::Approx(5.0));
  CHECK(var(s.sidebands, Eigen::Vector4d(0, 1, 0, 1)) == doctest::Approx(5.0));
  CHECK(s.sidebands.cov(0, 0) == doctest::Approx(1.2625));
  CHECK_NOTHROW(s.sidebands.validate());
  CHECK_THROWS_AS(sideband_state(0, 1.5), DomainError);

  // Quarter-period rotation: X+ -> -P+, P+ -> X+, X- -> P-, P- -> -X-.
  TwoModeGaussianState probe;
  probe.mean << 1, 2, 3, 4;
  const auto r = rotate_sidebands(SidebandState{probe, 0, 1}, kPi / 2).sidebands;
  CHECK(r.mean[0] == doctest::Approx(-2.0));
  CHECK(r.mean[1] == doctest::Approx(1.0));
  CHECK(r.mean[2] == doctest::Approx(4.0));
  CHECK(r.mean[3] == doctest::Approx(-3.0));
  const auto rs = rotate_sidebands(s, 0.7).sidebands;
  CHECK((rs.cov - s.sidebands.cov).norm() < 1e-12);
}

TEST_CASE("unbalanced interferometer separates the sidebands") {
  const Real omega0 = 2 * kPi * 3e14;
  const Real omega = 2 * kPi * 1e7;
  const auto len = solve_interferometer_length(omega0, omega);
  const Real sideband = omega * len.length / kSpeedOfLight;
  const Real carrier = std::remainder(omega0 * len.length / kSpeedOfLight - kPi / 2, 2 * kPi);
  CHECK(std::abs(sideband - kPi / 2) < 1e-6);
  CHECK(std::abs(carrier) < 1e-6);
  CHECK_THROWS_AS(solve_interferometer_length(2 * kPi * 1e7, 2 * kPi * 3e6), DomainError);

  const auto flat = unbalanced_interferometer(sideband_state(1, 1.0), len.length, omega0, omega);
  CHECK(flat.variance1 == doctest::Approx(0.25));
  CHECK(flat.variance2 == doctest::Approx(0.25));
  CHECK(flat.difference_variance == doctest::Approx(0.25));

  for (Real eps : {0.1, 0.5, 0.9}) {
    const auto rep = unbalanced_interferometer(sideband_state(1, eps), len.length, omega0, omega);
    CHECK(rep.variance1 > 0.25);
    CHECK(rep.variance2 > 0.25);
    CHECK(rep.variance1 == doctest::Approx((eps + 1 / eps) / 8).epsilon(1e-6));
    CHECK(rep.difference_variance < 0.25);
    CHECK(rep.difference_variance == doctest::Approx(eps / 4).epsilon(1e-6));
    CHECK_NOTHROW(rep.output1.validate(1e-9));
  }
  CHECK_THROWS_AS(unbalanced_interferometer(sideband_state(1, 0.5), len.length * 1.01, omega0, omega),
                  DomainError);
}

TEST_CASE("time reversal") {
  const auto e1 = synthesize_field(ExponentialPulse{PulseShape::kE1, 3.0}, 4.0, 0.01, 0);
  const auto e2 = synthesize_field(ExponentialPulse{PulseShape::kE2, 3.0}, 4.0, 0.01, 0);
  const auto rev = time_reverse(e2);
  REQUIRE(rev.size() == e1.size());
  CHECK(rev.start_time == doctest::Approx(e1.start_time));
  CHECK((rev.samples - e1.samples).cwiseAbs().maxCoeff() < 1e-12);

  auto chirp = e2;
  for (Eigen::Index i = 0; i < chirp.size(); ++i) chirp.samples[i] *= std::polar(1.0, 5 * chirp.time(i) * chirp.time(i));
  const auto twice = time_reverse(time_reverse(chirp));
  CHECK((twice.samples - chirp.samples).norm() == 0);
  CHECK(twice.start_time == doctest::Approx(chirp.start_time));

  const auto reversed = time_reverse(chirp);
  for (Real f : {-3.0, 0.0, 0.7, 12.0}) {
    Complex a{0, 0}, b{0, 0};
    for (Eigen::Index i = 0; i < chirp.size(); ++i) {
      a += chirp.samples[i] * std::polar(1.0, -2 * kPi * f * chirp.time(i));
      b += reversed.samples[i] * std::polar(1.0, -2 * kPi * f * reversed.time(i));
    }
    CHECK(std::abs(b - std::conj(a)) < 1e-9);
  }

  auto map = make_beam_splitter(0.3, 1.1).as_map();
  const auto back = time_reverse(time_reverse(map));
  CHECK((back.coeffs - map.coeffs).norm() == 0);
  CHECK_NOTHROW(time_reverse(map).validate());
  CHECK_NOTHROW(time_reverse(make_channel(ChannelKind::kPhaseConjugation, 2)).validate());
}
