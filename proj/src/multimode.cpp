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

#include "qoptics/multimode.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>
#include <fmt/format.h>

namespace qoptics {

namespace {

// Quadrature action of u a + v a^dagger on (X, P).
Eigen::Matrix2d quadrature_block(Complex u, Complex v) {
  Eigen::Matrix2d m;
  m << u.real() + v.real(), -u.imag() + v.imag(), u.imag() + v.imag(), u.real() - v.real();
  return m;
}

// Real quadrature matrix of a passive complex mode matrix.
MatrixXr passive_quadratures(const MatrixXc& u) {
  MatrixXr s(2 * u.rows(), 2 * u.cols());
  for (Eigen::Index i = 0; i < u.rows(); ++i)
    for (Eigen::Index j = 0; j < u.cols(); ++j)
      s.block<2, 2>(2 * i, 2 * j) = quadrature_block(u(i, j), 0);
  return s;
}

Real wrap_phase(Real phi) { return std::remainder(phi, 2 * kPi); }

Eigen::Matrix2cd interferometer_matrix(Real phi) {
  const Complex e = std::polar(1.0, phi);
  const Complex i{0, 1};
  Eigen::Matrix2cd m;
  m << 0.5 * (e - 1.0), 0.5 * i * (e + 1.0), 0.5 * i * (e + 1.0), 0.5 * (1.0 - e);
  return m;
}

}  // namespace

void BogoliubovMap::validate(Real tol) const {
  require(coeffs.rows() >= 1, "Bogoliubov map needs at least one output");
  require(coeffs.allFinite(), "Bogoliubov coefficients must be finite");
  for (Eigen::Index k = 0; k < coeffs.rows(); ++k) {
    const auto c = coeffs.row(k);
    const Real comm = std::norm(c(0)) + std::norm(c(1)) - std::norm(c(2)) - std::norm(c(3));
    const Real scale = std::max<Real>(1, c.squaredNorm());
    require(std::abs(comm - 1) <= tol * scale,
            fmt::format("output {} has [c, c^dagger] = {}, not 1: not a valid field operator", k, comm));
    for (Eigen::Index l = k + 1; l < coeffs.rows(); ++l) {
      const auto d = coeffs.row(l);
      const Complex cross_dag = c(0) * std::conj(d(0)) + c(1) * std::conj(d(1)) -
                                c(2) * std::conj(d(2)) - c(3) * std::conj(d(3));
      const Complex cross = c(0) * d(2) + c(1) * d(3) - c(2) * d(0) - c(3) * d(1);
      const Real pair_scale = std::max<Real>(1, c.norm() * d.norm());
      require(std::abs(cross_dag) <= tol * pair_scale && std::abs(cross) <= tol * pair_scale,
              fmt::format("outputs {} and {} do not commute", k, l));
    }
  }
}

MatrixXr BogoliubovMap::quadrature_matrix() const {
  MatrixXr s(2 * coeffs.rows(), 4);
  for (Eigen::Index k = 0; k < coeffs.rows(); ++k) {
    s.block<2, 2>(2 * k, 0) = quadrature_block(coeffs(k, 0), coeffs(k, 2));
    s.block<2, 2>(2 * k, 2) = quadrature_block(coeffs(k, 1), coeffs(k, 3));
  }
  return s;
}

void BeamSplitter::validate(Real tol) const {
  require(std::abs(std::norm(r1) + std::norm(t1) - 1) <= tol, "|r1|^2 + |t1|^2 must equal 1");
  require(std::abs(std::norm(r2) + std::norm(t2) - 1) <= tol, "|r2|^2 + |t2|^2 must equal 1");
  require(std::abs(std::conj(r1) * r1 + std::conj(t1) * t2 - 1.0) <= tol,
          "Stokes relation r1* r1 + t1* t2 = 1 violated");
  require(std::abs(std::conj(r1) * t1 + std::conj(t1) * r2) <= tol,
          "Stokes relation r1* t1 + t1* r2 = 0 violated");
  if (std::abs(r1) > tol && std::abs(r2) > tol && std::abs(t1) > tol) {
    const Real mismatch = wrap_phase(std::arg(r1) + std::arg(r2) - std::arg(t1) - std::arg(t2) - kPi);
    require(std::abs(mismatch) <= 1e-9, "reflection phases must satisfy rho1 + rho2 = pi");
  }
}

BogoliubovMap BeamSplitter::as_map() const {
  BogoliubovMap m;
  m.coeffs.resize(2, 4);
  m.coeffs << t1, r1, 0, 0, r2, t2, 0, 0;
  return m;
}

BeamSplitter make_beam_splitter(BeamSplitterKind kind, Real transmittance) {
  require(transmittance >= 0 && transmittance <= 1, "transmittance must lie in [0, 1]");
  const Real t = std::sqrt(transmittance);
  const Real r = std::sqrt(1 - transmittance);
  BeamSplitter bs{t, t, 0, 0};
  if (kind == BeamSplitterKind::kSymmetric) {
    bs.r1 = bs.r2 = Complex{0, r};
  } else {
    bs.r1 = r;
    bs.r2 = -r;
  }
  return bs;
}

BeamSplitter make_beam_splitter(Real transmittance, Real rho1) {
  require(transmittance >= 0 && transmittance <= 1, "transmittance must lie in [0, 1]");
  const Real t = std::sqrt(transmittance);
  const Real r = std::sqrt(1 - transmittance);
  return BeamSplitter{t, t, std::polar(r, rho1), std::polar(r, kPi - rho1)};
}

TwoModeGaussianState apply_beam_splitter(const BeamSplitter& bs, const TwoModeGaussianState& state) {
  bs.validate();
  state.validate();
  const Eigen::Matrix4d s = bs.as_map().quadrature_matrix();
  return transform(state, s);
}

std::pair<Complex, Complex> stokes_round_trip(const BeamSplitter& bs, Complex field) {
  Eigen::Matrix2cd u;
  u << bs.t1, bs.r1, bs.r2, bs.t2;
  const Eigen::Vector2cd out = u * Eigen::Vector2cd(field, 0);
  const Eigen::Vector2cd back = u.transpose() * out.conjugate();
  return {std::conj(back[0]), std::conj(back[1])};
}

std::vector<CommutatorEntry> epr_commutator_check(int truncation) {
  require(truncation >= 2, "truncation must be >= 2");
  const int dim = truncation + 1;
  MatrixXc a = MatrixXc::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<Real>(n));
  const MatrixXc id = MatrixXc::Identity(dim, dim);
  const auto kron = [](const MatrixXc& x, const MatrixXc& y) {
    MatrixXc out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      for (Eigen::Index j = 0; j < x.cols(); ++j)
        out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    return out;
  };
  const MatrixXc a1 = kron(a, id);
  const MatrixXc a2 = kron(id, a);
  const BeamSplitter bs = make_beam_splitter(BeamSplitterKind::kSymmetric, 0.5);
  const MatrixXc a3 = bs.t1 * a1 + bs.r1 * a2;
  const MatrixXc a4 = bs.r2 * a1 + bs.t2 * a2;
  const Complex i{0, 1};
  const auto x = [](const MatrixXc& m) -> MatrixXc { return 0.5 * (m + m.adjoint()); };
  const auto p = [&](const MatrixXc& m) -> MatrixXc { return (m - m.adjoint()) / (2.0 * i); };

  // Interior: both photon numbers below the cutoff.
  std::vector<Eigen::Index> interior;
  for (int n1 = 0; n1 < truncation; ++n1)
    for (int n2 = 0; n2 < truncation; ++n2) interior.push_back(n1 * dim + n2);
  const auto n = static_cast<Eigen::Index>(interior.size());

  std::vector<CommutatorEntry> out;
  const auto add = [&](std::string name, const MatrixXc& lhs, const MatrixXc& rhs, Complex expected) {
    const MatrixXc c = lhs * rhs - rhs * lhs;
    MatrixXc err(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index s = 0; s < n; ++s)
        err(r, s) = c(interior[r], interior[s]) - (r == s ? expected : Complex{0, 0});
    const Real deviation = Eigen::JacobiSVD<MatrixXc>(err).singularValues()[0];
    out.push_back({std::move(name), expected, c(0, 0), deviation});
  };
  const Complex half_i{0, 0.5};
  add("[X3,P3]", x(a3), p(a3), half_i);
  add("[X4,P4]", x(a4), p(a4), half_i);
  add("[X3,P4]", x(a3), p(a4), 0);
  add("[X4,P3]", x(a4), p(a3), 0);
  add("[X3,X4]", x(a3), x(a4), 0);
  add("[X3+X4,P3-P4]", x(a3) + x(a4), p(a3) - p(a4), 0);
  return out;
}

TwoModeGaussianState epr_pair(Real epsilon) {
  require(epsilon > 0, "squeezing parameter must be positive");
  const Eigen::Matrix2d r = Eigen::Rotation2D<Real>(-kPi / 4).toRotationMatrix();
  GaussianState s;
  s.cov = r * Eigen::Vector2d(epsilon / 4, 1 / (4 * epsilon)).asDiagonal() * r.transpose();
  return tensor(s, s);
}

ChannelKind parse_channel_kind(std::string_view text) {
  for (auto kind : {ChannelKind::kAttenuation, ChannelKind::kAmplification, ChannelKind::kPhaseSensitive,
                    ChannelKind::kPhaseConjugation, ChannelKind::kRepeater,
                    ChannelKind::kSingleModeAttenuation})
    if (channel_name(kind) == text) return kind;
  throw DomainError(fmt::format("unknown channel kind '{}'", text));
}

std::string_view channel_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::kAttenuation: return "attenuation";
    case ChannelKind::kAmplification: return "amplification";
    case ChannelKind::kPhaseSensitive: return "phase-sensitive";
    case ChannelKind::kPhaseConjugation: return "phase-conjugation";
    case ChannelKind::kRepeater: return "repeater";
    case ChannelKind::kSingleModeAttenuation: return "single-mode-attenuation";
  }
  return "";
}

BogoliubovMap make_channel(ChannelKind kind, Real param) {
  BogoliubovMap m;
  m.coeffs.resize(1, 4);
  switch (kind) {
    case ChannelKind::kAttenuation:
      require(param >= 0 && param <= 1, "attenuation needs eta in [0, 1]");
      m.coeffs << std::sqrt(param), std::sqrt(1 - param), 0, 0;
      break;
    case ChannelKind::kAmplification:
      require(param >= 1, "amplification needs G >= 1");
      m.coeffs << std::sqrt(param), 0, 0, std::sqrt(param - 1);
      break;
    case ChannelKind::kPhaseSensitive:
      require(param >= 1, "phase-sensitive amplification needs G >= 1");
      m.coeffs << std::sqrt(param), 0, std::sqrt(param - 1), 0;
      break;
    case ChannelKind::kPhaseConjugation:
    case ChannelKind::kRepeater:
      require(param > 0, "phase conjugation needs G > 0");
      m.coeffs << 0, std::sqrt(param + 1), std::sqrt(param), 0;
      break;
    case ChannelKind::kSingleModeAttenuation:
      require(param >= 0 && param <= 1, "attenuation needs eta in [0, 1]");
      m.coeffs << std::sqrt(param) + std::sqrt(1 - param), 0, 0, 0;
      break;
  }
  m.validate();
  return m;
}

ChannelOutput apply_channel(const BogoliubovMap& map, const TwoModeGaussianState& input) {
  map.validate();
  input.validate();
  const MatrixXr s = map.quadrature_matrix().topRows(2);
  ChannelOutput out;
  out.state.mean = s * input.mean;
  out.state.cov = s * input.cov * s.transpose();
  out.sym_n = out.state.mean.squaredNorm() + out.state.cov.trace();
  return out;
}

ChannelOutput apply_channel(const BogoliubovMap& map, const GaussianState& signal,
                            const GaussianState& ancilla) {
  return apply_channel(map, tensor(signal, ancilla));
}

Real noise_figure(ChannelKind kind, Real param) {
  make_channel(kind, param);
  switch (kind) {
    case ChannelKind::kAttenuation: return param;
    case ChannelKind::kAmplification: return param / (2 * param - 1);
    case ChannelKind::kPhaseSensitive: return 1;
    case ChannelKind::kPhaseConjugation:
    case ChannelKind::kRepeater: return param / (2 * param + 1);
    case ChannelKind::kSingleModeAttenuation: break;
  }
  throw DomainError("no noise figure for this channel");
}

Real noise_figure_numeric(const BogoliubovMap& map, Real signal_x) {
  require(signal_x != 0, "signal amplitude must be nonzero");
  GaussianState in;
  in.mean << signal_x, 0;
  const auto out = apply_channel(map, in);
  const Real snr_in = signal_x * signal_x / in.cov(0, 0);
  const Real snr_out = out.state.mean[0] * out.state.mean[0] / out.state.cov(0, 0);
  return snr_out / snr_in;
}

SidebandState sideband_state(Real carrier_x0, Real epsilon) {
  require(epsilon > 0 && epsilon <= 1, "sideband squeezing needs eps in (0, 1]");
  const Real v = (epsilon + 1 / epsilon) / 8;
  const Real c = (epsilon - 1 / epsilon) / 8;
  SidebandState s;
  s.carrier_x0 = carrier_x0;
  s.epsilon = epsilon;
  s.sidebands.cov << v, 0, c, 0,
                     0, v, 0, -c,
                     c, 0, v, 0,
                     0, -c, 0, v;
  return s;
}

SidebandState rotate_sidebands(const SidebandState& state, Real omega_t) {
  Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
  s.block<2, 2>(0, 0) = quadrature_block(std::polar(1.0, omega_t), 0);
  s.block<2, 2>(2, 2) = quadrature_block(std::polar(1.0, -omega_t), 0);
  SidebandState out = state;
  out.sidebands = transform(state.sidebands, s);
  return out;
}

InterferometerLength solve_interferometer_length(Real omega0, Real omega, Real tol) {
  require(omega0 > 0 && omega > 0, "frequencies must be positive");
  const Real target = (omega0 / omega * kPi / 2 - kPi / 2) / (2 * kPi);
  InterferometerLength out;
  out.order = std::llround(target);
  require(out.order >= 0, "carrier frequency too low for the sideband condition");
  const Real carrier_phase = kPi / 2 + 2 * kPi * static_cast<Real>(out.order);
  out.length = carrier_phase * kSpeedOfLight / omega0;
  out.carrier_phase_error = 0;
  out.sideband_phase_error = carrier_phase * omega / omega0 - kPi / 2;
  if (std::abs(out.sideband_phase_error) > tol)
    throw DomainError(fmt::format(
        "no interferometer length meets both phase conditions: best sideband error {} rad",
        out.sideband_phase_error));
  return out;
}

InterferometerReport unbalanced_interferometer(const SidebandState& state, Real length, Real omega0,
                                               Real omega) {
  require(length > 0 && omega0 > 0 && omega > 0, "length and frequencies must be positive");
  state.sidebands.validate();
  const Real carrier = wrap_phase(omega0 * length / kSpeedOfLight);
  const Real side = omega * length / kSpeedOfLight;
  const Real carrier_error = wrap_phase(carrier - kPi / 2);
  const Real side_error = side - kPi / 2;
  if (std::abs(carrier_error) > 1e-6 || std::abs(side_error) > 1e-6)
    throw DomainError(fmt::format(
        "interferometer phases off by {} rad (carrier) and {} rad (sideband); need 1e-6",
        carrier_error, side_error));

  // Input modes (s+, s-, v+, v-); output modes (o1+, o1-, o2+, o2-).
  const Eigen::Matrix2cd up = interferometer_matrix(carrier + side);
  const Eigen::Matrix2cd down = interferometer_matrix(carrier - side);
  MatrixXc u = MatrixXc::Zero(4, 4);
  u(0, 0) = up(0, 0);
  u(0, 2) = up(0, 1);
  u(1, 1) = down(0, 0);
  u(1, 3) = down(0, 1);
  u(2, 0) = up(1, 0);
  u(2, 2) = up(1, 1);
  u(3, 1) = down(1, 0);
  u(3, 3) = down(1, 1);

  MatrixXr in_cov = MatrixXr::Identity(8, 8) * kVacuumVariance;
  in_cov.topLeftCorner(4, 4) = state.sidebands.cov;
  const MatrixXr s = passive_quadratures(u);
  const MatrixXr cov = s * in_cov * s.transpose();

  InterferometerReport report;
  report.output1.cov = cov.topLeftCorner(4, 4);
  report.output2.cov = cov.bottomRightCorner(4, 4);

  // Amplitude quadratures of o1+ and o2- referenced to the signal sideband
  // each one carries.
  const auto detected = [&](Eigen::Index mode, Complex coefficient) {
    const Complex phase = std::abs(coefficient) > 0 ? std::conj(coefficient) / std::abs(coefficient) : 1.0;
    VectorXr row = VectorXr::Zero(8);
    row.segment<2>(2 * mode) = Eigen::Vector2d(phase.real(), -phase.imag());
    return row;
  };
  const VectorXr x1 = detected(0, u(0, 0));
  const VectorXr x2 = detected(3, u(3, 1));
  report.variance1 = x1.dot(cov * x1);
  report.variance2 = x2.dot(cov * x2);
  const VectorXr d = (x1 + x2) / std::sqrt(2.0);
  report.difference_variance = d.dot(cov * d);
  return report;
}

ComplexTimeSeries time_reverse(const ComplexTimeSeries& series) {
  ComplexTimeSeries out = series;
  out.samples = series.samples.reverse().conjugate();
  out.start_time = -series.time(series.size() - 1);
  return out;
}

BogoliubovMap time_reverse(const BogoliubovMap& map) {
  BogoliubovMap out = map;
  out.coeffs = map.coeffs.conjugate();
  return out;
}

}  // namespace qoptics
