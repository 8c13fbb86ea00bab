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

// Classical stochastic light fields: synthesis, spectral densities,
// correlation functions and lineshapes.
//
// Conventions used throughout this header:
//  * A record holds the slowly varying complex envelope eps(t); the optical
//    carrier is metadata. Positive envelope frequency f maps to the optical
//    frequency carrier + f.
//  * Every SpectralDensity except the field spectrum is one-sided per Hz,
//    normalised so that the integral over [0, inf) equals the variance of the
//    fluctuating quantity. The field spectrum is two-sided around the carrier
//    and integrates to the mean power <|eps|^2>.
//  * Quadrature is trapezoidal on the stored grid.

#pragma once

#include <cstdint>
#include <string_view>
#include <variant>

#include "qoptics/types.hpp"

namespace qoptics {

struct ComplexTimeSeries {
  VectorXc samples;
  Real dt = 0;
  Real carrier_freq = 0;
  Real start_time = 0;

  Eigen::Index size() const { return samples.size(); }
  Real time(Eigen::Index i) const { return start_time + static_cast<Real>(i) * dt; }
  Real duration() const { return static_cast<Real>(samples.size()) * dt; }

  /// Throws DomainError unless len >= 2, dt > 0 and all samples are finite.
  void validate() const;
};

enum class SpectrumKind { kField, kIntensity, kAmplitude, kPhase, kFrequency };

struct SpectralDensity {
  VectorXr freqs;
  VectorXr values;
  SpectrumKind kind = SpectrumKind::kField;
};

enum class CorrelationKind { kG1, kG2Intensity, kG2TwoPhoton, kAmplitude, kPhase };

/// Correlation on a lag grid. Estimators return the symmetric grid
/// -K dt ... K dt; lag index K is tau = 0.
struct CorrelationFunction {
  VectorXr lags;
  VectorXc values;
  CorrelationKind kind = CorrelationKind::kG1;

  /// Index of tau = 0, or -1 when the grid does not contain it.
  Eigen::Index zero_lag() const;
};

std::string_view to_string(SpectrumKind kind);
std::string_view to_string(CorrelationKind kind);

// -- noise models ----------------------------------------------------------

struct ConstantField {
  Real amplitude = 1;
};

/// Phase diffusion with delta-correlated frequency, <nu(t) nu(t+tau)> with
/// one-sided density s_nu0 [Hz^2/Hz].
struct WhiteFrequencyNoise {
  Real s_nu0 = 0;
  Real amplitude = 1;
};

/// Constant phase, white real amplitude noise of one-sided density s_a0.
struct DeltaCorrelatedAmplitude {
  Real s_a0 = 0;
  Real mean_amplitude = 1;
};

/// Real Gaussian amplitude (Ornstein-Uhlenbeck, exponential correlation of
/// variance amplitude_var) on top of mean_amplitude, combined with white
/// frequency noise of density s_nu0.
struct GaussianAmplitudeWhiteFm {
  Real amplitude_var = 1;
  Real correlation_time = 1;
  Real s_nu0 = 0;
  Real mean_amplitude = 0;
};

/// Chaotic light: circular complex Gaussian envelope with exponential field
/// correlation.
struct ThermalField {
  Real mean_intensity = 1;
  Real correlation_time = 1;
};

enum class PulseShape { kE1, kE2, kE3 };

/// E1 = exp(gamma t) theta(-t), E2 = exp(-gamma t) theta(t), E3 = E1 + E2,
/// with theta(0) = 1 for both branches (so E3(0) = 2).
struct ExponentialPulse {
  PulseShape shape = PulseShape::kE3;
  Real gamma = 1;
};

using NoiseModel = std::variant<ConstantField, WhiteFrequencyNoise, DeltaCorrelatedAmplitude,
                                GaussianAmplitudeWhiteFm, ThermalField, ExponentialPulse>;

/// Scalar parameters accepted by make_noise_model. Unused fields are ignored.
struct NoiseModelParams {
  Real amplitude = 1;
  Real s_nu0 = 0;
  Real s_a0 = 0;
  Real gamma = 1;
  Real correlation_time = 1;
  Real amplitude_var = 1;
};

/// Builds a model from its tag: constant, white-fm, delta-amplitude,
/// gaussian-amplitude-fm, thermal, e1, e2, e3.
NoiseModel make_noise_model(std::string_view tag, const NoiseModelParams& params);

/// Pulses are sampled on a grid symmetric about t = 0 (odd length) so that
/// t = 0 is a sample; stationary models start at t = 0.
ComplexTimeSeries synthesize_field(const NoiseModel& model, Real duration, Real dt,
                                   std::uint64_t seed, Real carrier_freq = 0);

// -- spectra ---------------------------------------------------------------

/// Field spectrum by Wiener-Khinchin: Fourier transform of the (1/N
/// normalised, symmetrised) autocorrelation of the record. Frequencies are
/// optical (carrier + offset), on the zero-padded grid of spacing 1/(2 N dt).
SpectralDensity field_spectrum(const ComplexTimeSeries& series);

/// Mean field spectrum of `members` records, record k synthesized with seed
/// derive_engine(seed, k)().
SpectralDensity ensemble_field_spectrum(const NoiseModel& model, Real duration, Real dt,
                                        std::uint64_t seed, int members, Real carrier_freq = 0);

/// |eps~(f)|^2 / T on the same grid as field_spectrum, computed directly
/// from the zero-padded DFT of the record.
SpectralDensity periodogram(const ComplexTimeSeries& series);

/// One-sided density of intensity, amplitude, phase or frequency noise on
/// the record's Fourier grid k/(N dt), k = 0..N/2.
/// Phase is unwrapped sample-to-sample; the endpoint line is removed so the
/// diffusing phase becomes a bridge. Frequency noise follows from the phase
/// record by the derivative theorem, S_nu(f) = f^2 S_phi(f).
SpectralDensity spectral_density(const ComplexTimeSeries& series, SpectrumKind kind);

/// Nearest-branch unwrapped phase. Throws if any sample has zero amplitude
/// or a per-sample jump exceeds pi/2 (under-sampled record).
VectorXr unwrapped_phase(const ComplexTimeSeries& series);

// -- correlations ----------------------------------------------------------

/// Finite-record time averages with unbiased (overlap count) normalisation.
/// G1(tau) = <eps*(t) eps(t+tau)>, G2_I(tau) = <I(t) I(t+tau)>,
/// G2_TP(tau) = <eps*^2(t+tau) eps^2(t)>. Requires max_lag < duration/4.
CorrelationFunction correlation(const ComplexTimeSeries& series, CorrelationKind kind,
                                Real max_lag);

/// <A(t)A(t+tau)> = sqrt((<I(t)I(t+tau)> - <I>^2)/2) for Gaussian amplitude
/// statistics. A negative radicand names the offending lag.
CorrelationFunction amplitude_corr_from_intensity(const CorrelationFunction& g2i,
                                                  Real mean_intensity);

/// <x^(2n)> of a zero-mean Gaussian: (2n-1)!/(2^(n-1) (n-1)!) var^n.
Real gaussian_even_moment(int n, Real var);

/// <exp(i dphi(tau))> = exp(-int df S_phi(f) (1 - cos 2 pi f tau)) for
/// Gaussian phase. Throws NumericalError when S_phi falls like f^-3 or
/// faster at the low end of the grid (the integral diverges).
Real coherence_factor(const SpectralDensity& phase_sd, Real tau);

/// S_phi(f) = s_nu0 / f^2 on a log grid of `points` frequencies.
SpectralDensity white_fm_phase_density(Real s_nu0, Real f_min, Real f_max, int points);

/// Amplitude correlation <A A> = amplitude^2 on lags 0, step, ..., (count-1) step.
CorrelationFunction constant_amplitude_correlation(Real amplitude, Real step, int count);

/// S_E(nu) = 2 int_0^T dtau <A(t+tau)A(t)> C(tau) cos(2 pi (nu - nu0) tau),
/// C the coherence factor. Uses the non-negative lags of amp_corr (uniform
/// spacing) and evaluates at carrier + offsets.
SpectralDensity lineshape_from_noise(const CorrelationFunction& amp_corr,
                                     const SpectralDensity& phase_sd, Real carrier,
                                     const VectorXr& offsets);

struct WhiteFmLinewidth {
  Real hwhm = 0;
  Real fwhm = 0;
  Real cutoff_fc = 0;
  Real residual_phase_var = 0;
  bool degenerate = false;
};

WhiteFmLinewidth white_fm_linewidth(Real s_nu0);

/// Two-level absorption rate with the record's G1:
/// R = dipole2 Re int_0^Tmax dtau exp(i (omega0 - omega_c) tau - gamma tau) G1(tau)^*,
/// omega_c = 2 pi carrier_freq, Tmax just below a quarter of the record.
Real absorption_rate(const ComplexTimeSeries& series, Real omega0, Real gamma, Real dipole2);

// -- lineshape fitting -----------------------------------------------------

struct LorentzianFit {
  Real center = 0;
  Real fwhm = 0;
  Real peak = 0;
  Real baseline = 0;
};

/// Least-squares Lorentzian (plus constant baseline) over the bins within
/// `window` of the spectral peak.
LorentzianFit fit_lorentzian(const SpectralDensity& spectrum, Real window);

/// Width at half maximum by linear interpolation around the peak.
Real half_max_width(const SpectralDensity& spectrum);

}  // namespace qoptics
