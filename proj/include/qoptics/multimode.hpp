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

// Two-mode linear optics: beam splitters, Bogoliubov channels with their
// noise figures, EPR pairs and the sideband-separating interferometer.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qoptics/classical_spectra.hpp"
#include "qoptics/gaussian_state.hpp"

namespace qoptics {

/// Output mode k is c_k = coeffs(k, 0) a + coeffs(k, 1) b + coeffs(k, 2) a^dagger
/// + coeffs(k, 3) b^dagger.
struct BogoliubovMap {
  Eigen::Matrix<Complex, Eigen::Dynamic, 4> coeffs;

  Eigen::Index outputs() const { return coeffs.rows(); }
  /// [c_k, c_k^dagger] = 1 for every output and all cross commutators vanish,
  /// to tol relative to the size of the coefficients.
  void validate(Real tol = 1e-12) const;
  /// Real matrix taking (X_a, P_a, X_b, P_b) to the output quadratures.
  MatrixXr quadrature_matrix() const;
};

/// a_out1 = t1 a_in1 + r1 a_in2, a_out2 = r2 a_in1 + t2 a_in2.
struct BeamSplitter {
  Complex t1{1, 0};
  Complex t2{1, 0};
  Complex r1{0, 0};
  Complex r2{0, 0};

  /// Energy balance, both Stokes relations and rho1 + rho2 = pi (mod 2 pi).
  void validate(Real tol = 1e-12) const;
  BogoliubovMap as_map() const;
};

enum class BeamSplitterKind { kSymmetric, kAsymmetric };

/// Intensity transmittance in [0, 1]. Symmetric: r = i|r|; asymmetric:
/// r1 = |r|, r2 = -|r|.
BeamSplitter make_beam_splitter(BeamSplitterKind kind, Real transmittance);
/// Real t and reflection phases rho1, pi - rho1.
BeamSplitter make_beam_splitter(Real transmittance, Real rho1);

TwoModeGaussianState apply_beam_splitter(const BeamSplitter& bs, const TwoModeGaussianState& state);

/// Splits E entering port 1, conjugates both outputs and sends them back
/// through the splitter; returns the conjugate of the fields leaving the two
/// input ports, which is (E, 0) for a valid splitter.
std::pair<Complex, Complex> stokes_round_trip(const BeamSplitter& bs, Complex field);

struct CommutatorEntry {
  std::string name;
  Complex expected;
  Complex value;  // on the interior of the truncated space
  Real deviation;
};

/// Commutators of the output quadratures of a 50:50 symmetric splitter,
/// evaluated with truncated ladder matrices.
std::vector<CommutatorEntry> epr_commutator_check(int truncation = 12);

/// Two inputs squeezed by eps along the axis that the symmetric 50:50
/// splitter maps onto X3 + X4 and P3 - P4.
TwoModeGaussianState epr_pair(Real epsilon);

enum class ChannelKind {
  kAttenuation,
  kAmplification,
  kPhaseSensitive,
  kPhaseConjugation,
  kRepeater,
  kSingleModeAttenuation,
};

ChannelKind parse_channel_kind(std::string_view text);
std::string_view channel_name(ChannelKind kind);

/// Attenuation: sqrt(eta) a + sqrt(1 - eta) b; amplification: sqrt(G) a +
/// sqrt(G - 1) b^dagger; phase-sensitive: sqrt(G) a + sqrt(G - 1) a^dagger;
/// phase conjugation and the measure-and-recreate repeater: sqrt(G) a^dagger
/// + sqrt(G + 1) b. The single-mode attenuation sqrt(eta) a + sqrt(1 - eta) a
/// fails the commutator check and is rejected.
BogoliubovMap make_channel(ChannelKind kind, Real param);

struct ChannelOutput {
  GaussianState state;
  Real sym_n = 0;
};

/// First output of the map acting on signal a and ancilla b.
ChannelOutput apply_channel(const BogoliubovMap& map, const TwoModeGaussianState& input);
ChannelOutput apply_channel(const BogoliubovMap& map, const GaussianState& signal,
                            const GaussianState& ancilla = GaussianState::vacuum());

/// Closed form SNR_out / SNR_in for a coherent input and vacuum ancilla.
Real noise_figure(ChannelKind kind, Real param);
/// The same ratio measured on the X quadrature through apply_channel.
Real noise_figure_numeric(const BogoliubovMap& map, Real signal_x = 1);

struct SidebandState {
  /// Modes (upper, lower) sideband.
  TwoModeGaussianState sidebands;
  Real carrier_x0 = 0;
  Real epsilon = 1;
};

/// Two-mode squeezed vacuum sidebands: X+ + X- and P+ - P- have variance eps/2.
SidebandState sideband_state(Real carrier_x0, Real epsilon);

/// Sideband quadratures after phase Omega t: a+ -> e^{i Omega t} a+,
/// a- -> e^{-i Omega t} a-.
SidebandState rotate_sidebands(const SidebandState& state, Real omega_t);

struct InterferometerLength {
  Real length = 0;
  long long order = 0;
  Real carrier_phase_error = 0;
  Real sideband_phase_error = 0;
};

/// L = (pi/2 + 2 pi m) c / omega0 with m the integer closest to making
/// Omega L / c = pi/2; throws DomainError if the sideband condition misses
/// by more than tol radians.
InterferometerLength solve_interferometer_length(Real omega0, Real omega, Real tol = 1e-6);

struct InterferometerReport {
  /// Sideband pairs (upper, lower) leaving each output port.
  TwoModeGaussianState output1;
  TwoModeGaussianState output2;
  /// Amplitude-quadrature variance of the signal sideband routed to each port.
  Real variance1 = 0;
  Real variance2 = 0;
  /// Variance of (x1 + x2)/sqrt(2), recombining both separated sidebands.
  Real difference_variance = 0;
  Real shot_noise = kVacuumVariance;
};

/// Delay-line Mach-Zehnder with a vacuum second input. Throws DomainError
/// unless Omega L / c = pi/2 and omega0 L / c = pi/2 (mod 2 pi) within 1e-6.
InterferometerReport unbalanced_interferometer(const SidebandState& state, Real length, Real omega0,
                                               Real omega);

inline constexpr Real kSpeedOfLight = 299792458.0;

/// E(t) -> E*(-t) on a grid symmetric about t = 0.
ComplexTimeSeries time_reverse(const ComplexTimeSeries& series);
/// Conjugates every coefficient.
BogoliubovMap time_reverse(const BogoliubovMap& map);

}  // namespace qoptics
