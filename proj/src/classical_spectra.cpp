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

#include "qoptics/classical_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>
#include <unsupported/Eigen/NonLinearOptimization>

#include "fft_util.hpp"
#include "qoptics/random.hpp"

namespace qoptics {

namespace {

using detail::CVec;

// Offsets the seed of a model's second independent noise stream.
constexpr std::uint64_t kSecondStream = 0x9e3779b97f4a7c15ULL;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Standard normals in seeded chunks.
VectorXr normals(std::uint64_t seed, std::size_t count) {
  VectorXr out(static_cast<Eigen::Index>(count));
  for_each_chunk(seed, count, [&](Engine& engine, std::size_t begin, std::size_t end) {
    std::normal_distribution<Real> gauss(0.0, 1.0);
    for (std::size_t i = begin; i < end; ++i) out[static_cast<Eigen::Index>(i)] = gauss(engine);
  });
  return out;
}

// Phase random walk whose increments have variance 2 pi^2 s_nu0 dt, i.e.
// per-sample frequency variance s_nu0 / (2 dt).
VectorXr white_fm_phase(Real s_nu0, Real dt, const VectorXr& noise) {
  const Real sigma = std::sqrt(2.0 * kPi * kPi * s_nu0 * dt);
  VectorXr phase(noise.size());
  Real acc = 0;
  for (Eigen::Index i = 0; i < noise.size(); ++i) {
    phase[i] = acc;
    acc += sigma * noise[i];
  }
  return phase;
}

VectorXr ornstein_uhlenbeck(Real variance, Real correlation_time, Real dt, const VectorXr& noise) {
  const Real rho = std::exp(-dt / correlation_time);
  const Real kick = std::sqrt(variance * (1.0 - rho * rho));
  VectorXr out(noise.size());
  Real x = std::sqrt(variance) * noise[0];
  out[0] = x;
  for (Eigen::Index i = 1; i < noise.size(); ++i) {
    x = rho * x + kick * noise[i];
    out[i] = x;
  }
  return out;
}

Real pulse_value(const ExponentialPulse& p, Real t) {
  const Real e1 = t <= 0 ? std::exp(p.gamma * t) : 0.0;
  const Real e2 = t >= 0 ? std::exp(-p.gamma * t) : 0.0;
  switch (p.shape) {
    case PulseShape::kE1: return e1;
    case PulseShape::kE2: return e2;
    case PulseShape::kE3: return e1 + e2;
  }
  return 0;
}

// One-sided periodogram of a real record.
SpectralDensity one_sided_density(const VectorXr& x, Real dt, SpectrumKind kind) {
  const Eigen::Index n = x.size();
  const Eigen::Index m = 2 * n;
  // Wiener-Khinchin: biased autocorrelation, then its cosine transform.
  const CVec r = detail::lag_sums(x.cast<Complex>(), n - 1);
  CVec circular(static_cast<std::size_t>(m), Complex(0, 0));
  circular[0] = r[0];
  for (Eigen::Index k = 1; k < n; ++k) {
    circular[static_cast<std::size_t>(k)] = r[static_cast<std::size_t>(k)];
    circular[static_cast<std::size_t>(m - k)] = std::conj(r[static_cast<std::size_t>(k)]);
  }
  const CVec transform = detail::fft(circular);

  // Keep only the record's own Fourier frequencies k / (N dt): the
  // interleaved padded bins leak the endpoint step of detrended records.
  const Eigen::Index half = n / 2;
  SpectralDensity out;
  out.kind = kind;
  out.freqs.resize(half + 1);
  out.values.resize(half + 1);
  for (Eigen::Index k = 0; k <= half; ++k) {
    const Real two_sided =
        dt / static_cast<Real>(n) * transform[static_cast<std::size_t>(2 * k)].real();
    const Real factor = (k == 0 || 2 * k == n) ? 1.0 : 2.0;
    out.freqs[k] = static_cast<Real>(k) / (static_cast<Real>(n) * dt);
    out.values[k] = std::max(0.0, factor * two_sided);
  }
  return out;
}

VectorXc symmetric_lags(const CVec& sums, Eigen::Index n, bool conjugate_positive) {
  const Eigen::Index k_max = static_cast<Eigen::Index>(sums.size()) - 1;
  VectorXc values(2 * k_max + 1);
  for (Eigen::Index k = 0; k <= k_max; ++k) {
    const Complex unbiased = sums[static_cast<std::size_t>(k)] / static_cast<Real>(n - k);
    const Complex positive = conjugate_positive ? std::conj(unbiased) : unbiased;
    values[k_max + k] = positive;
    values[k_max - k] = std::conj(positive);
  }
  return values;
}

struct LorentzianFunctor {
  using Scalar = Real;
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

  const VectorXr& x;
  const VectorXr& y;

  int inputs() const { return 4; }
  int values() const { return static_cast<int>(x.size()); }

  int operator()(const Eigen::VectorXd& p, Eigen::VectorXd& residual) const {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const Real u = (x[i] - p[0]) / p[1];
      residual[i] = p[2] / (1.0 + u * u) + p[3] - y[i];
    }
    return 0;
  }

  int df(const Eigen::VectorXd& p, Eigen::MatrixXd& jac) const {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const Real u = (x[i] - p[0]) / p[1];
      const Real d = 1.0 + u * u;
      jac(i, 0) = p[2] * 2.0 * u / (p[1] * d * d);
      jac(i, 1) = p[2] * 2.0 * u * u / (p[1] * d * d);
      jac(i, 2) = 1.0 / d;
      jac(i, 3) = 1.0;
    }
    return 0;
  }
};

}  // namespace

void ComplexTimeSeries::validate() const {
  require(samples.size() >= 2, "time series needs at least two samples");
  require(dt > 0 && std::isfinite(dt), "time series needs dt > 0");
  require(samples.allFinite(), "time series contains non-finite samples");
}

Eigen::Index CorrelationFunction::zero_lag() const {
  for (Eigen::Index i = 0; i < lags.size(); ++i)
    if (lags[i] == 0.0) return i;
  return -1;
}

std::string_view to_string(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::kField: return "field";
    case SpectrumKind::kIntensity: return "intensity";
    case SpectrumKind::kAmplitude: return "amplitude";
    case SpectrumKind::kPhase: return "phase";
    case SpectrumKind::kFrequency: return "frequency";
  }
  return "?";
}

std::string_view to_string(CorrelationKind kind) {
  switch (kind) {
    case CorrelationKind::kG1: return "g1";
    case CorrelationKind::kG2Intensity: return "g2_i";
    case CorrelationKind::kG2TwoPhoton: return "g2_tp";
    case CorrelationKind::kAmplitude: return "amplitude";
    case CorrelationKind::kPhase: return "phase";
  }
  return "?";
}

NoiseModel make_noise_model(std::string_view tag, const NoiseModelParams& p) {
  if (tag == "constant") return ConstantField{p.amplitude};
  if (tag == "white-fm") {
    require(p.s_nu0 >= 0, "white-fm needs s_nu0 >= 0");
    return WhiteFrequencyNoise{p.s_nu0, p.amplitude};
  }
  if (tag == "delta-amplitude") {
    require(p.s_a0 >= 0, "delta-amplitude needs s_a0 >= 0");
    return DeltaCorrelatedAmplitude{p.s_a0, p.amplitude};
  }
  if (tag == "gaussian-amplitude-fm") {
    require(p.s_nu0 >= 0, "gaussian-amplitude-fm needs s_nu0 >= 0");
    require(p.amplitude_var >= 0 && p.correlation_time > 0,
            "gaussian-amplitude-fm needs amplitude_var >= 0 and correlation_time > 0");
    return GaussianAmplitudeWhiteFm{p.amplitude_var, p.correlation_time, p.s_nu0, p.amplitude};
  }
  if (tag == "thermal") {
    require(p.correlation_time > 0, "thermal needs correlation_time > 0");
    return ThermalField{p.amplitude * p.amplitude, p.correlation_time};
  }
  if (tag == "e1" || tag == "e2" || tag == "e3") {
    require(p.gamma > 0, "pulse needs gamma > 0");
    const PulseShape shape =
        tag == "e1" ? PulseShape::kE1 : (tag == "e2" ? PulseShape::kE2 : PulseShape::kE3);
    return ExponentialPulse{shape, p.gamma};
  }
  throw DomainError(fmt::format("unknown noise model '{}'", tag));
}

ComplexTimeSeries synthesize_field(const NoiseModel& model, Real duration, Real dt,
                                   std::uint64_t seed, Real carrier_freq) {
  require(dt > 0 && std::isfinite(dt), "dt must be positive");
  require(duration > 0 && std::isfinite(duration), "duration must be positive");
  require(duration >= 100 * dt * (1 - 1e-12), "duration must cover at least 100 samples");

  ComplexTimeSeries series;
  series.dt = dt;
  series.carrier_freq = carrier_freq;
  const auto n = static_cast<Eigen::Index>(std::llround(duration / dt));

  std::visit(
      Overloaded{
          [&](const ConstantField& m) {
            series.samples = VectorXc::Constant(n, Complex(m.amplitude, 0));
          },
          [&](const WhiteFrequencyNoise& m) {
            require(m.s_nu0 >= 0, "white-fm needs s_nu0 >= 0");
            const VectorXr phase = white_fm_phase(m.s_nu0, dt, normals(seed, n));
            series.samples = phase.unaryExpr([&](Real ph) { return std::polar(m.amplitude, ph); });
          },
          [&](const DeltaCorrelatedAmplitude& m) {
            require(m.s_a0 >= 0, "delta-amplitude needs s_a0 >= 0");
            const Real sigma = std::sqrt(m.s_a0 / (2 * dt));
            const VectorXr z = normals(seed, n);
            series.samples = (m.mean_amplitude + sigma * z.array()).matrix().cast<Complex>();
          },
          [&](const GaussianAmplitudeWhiteFm& m) {
            require(m.s_nu0 >= 0, "s_nu0 must be >= 0");
            const VectorXr amp =
                ornstein_uhlenbeck(m.amplitude_var, m.correlation_time, dt, normals(seed, n));
            const VectorXr phase = white_fm_phase(m.s_nu0, dt, normals(seed ^ kSecondStream, n));
            series.samples.resize(n);
            for (Eigen::Index i = 0; i < n; ++i)
              series.samples[i] = (m.mean_amplitude + amp[i]) * std::polar(1.0, phase[i]);
          },
          [&](const ThermalField& m) {
            const Real half = m.mean_intensity / 2;
            const VectorXr re = ornstein_uhlenbeck(half, m.correlation_time, dt, normals(seed, n));
            const VectorXr im =
                ornstein_uhlenbeck(half, m.correlation_time, dt, normals(seed ^ kSecondStream, n));
            series.samples.resize(n);
            for (Eigen::Index i = 0; i < n; ++i) series.samples[i] = Complex(re[i], im[i]);
          },
          [&](const ExponentialPulse& m) {
            require(m.gamma > 0, "pulse needs gamma > 0");
            const auto half = static_cast<Eigen::Index>(std::llround(duration / (2 * dt)));
            series.start_time = -static_cast<Real>(half) * dt;
            series.samples.resize(2 * half + 1);
            for (Eigen::Index i = 0; i < series.samples.size(); ++i)
              series.samples[i] = Complex(pulse_value(m, series.time(i)), 0);
          },
      },
      model);
  return series;
}

SpectralDensity field_spectrum(const ComplexTimeSeries& series) {
  series.validate();
  require(series.size() >= 4, "field spectrum needs at least 4 samples");
  const Eigen::Index n = series.size();
  const Eigen::Index m = 2 * n;

  const CVec r = detail::lag_sums(series.samples, n - 1);
  CVec circular(static_cast<std::size_t>(m), Complex(0, 0));
  circular[0] = r[0];
  for (Eigen::Index k = 1; k < n; ++k) {
    circular[static_cast<std::size_t>(k)] = r[static_cast<std::size_t>(k)];
    circular[static_cast<std::size_t>(m - k)] = std::conj(r[static_cast<std::size_t>(k)]);
  }
  const CVec transform = detail::fft(circular);

  SpectralDensity out;
  out.kind = SpectrumKind::kField;
  out.freqs.resize(m);
  out.values.resize(m);
  const Real df = 1.0 / (static_cast<Real>(m) * series.dt);
  for (Eigen::Index j = 0; j < m; ++j) {
    const Eigen::Index bin = (j + m / 2) % m;  // ascending offsets
    const Eigen::Index signed_bin = bin < m / 2 ? bin : bin - m;
    out.freqs[j] = series.carrier_freq + static_cast<Real>(signed_bin) * df;
    const Real value = series.dt / static_cast<Real>(n) * transform[static_cast<std::size_t>(bin)].real();
    out.values[j] = std::max(0.0, value);
  }
  return out;
}

SpectralDensity ensemble_field_spectrum(const NoiseModel& model, Real duration, Real dt,
                                        std::uint64_t seed, int members, Real carrier_freq) {
  require(members >= 1, "ensemble needs at least one member");
  SpectralDensity mean;
  for (int k = 0; k < members; ++k) {
    const std::uint64_t sub_seed = derive_engine(seed, static_cast<std::uint64_t>(k))();
    const SpectralDensity s = field_spectrum(synthesize_field(model, duration, dt, sub_seed, carrier_freq));
    if (k == 0)
      mean = s;
    else
      mean.values += s.values;
  }
  mean.values /= members;
  return mean;
}

SpectralDensity periodogram(const ComplexTimeSeries& series) {
  series.validate();
  const Eigen::Index n = series.size();
  const Eigen::Index m = 2 * n;
  const CVec transform = detail::padded_fft(series.samples, m);
  SpectralDensity out;
  out.kind = SpectrumKind::kField;
  out.freqs.resize(m);
  out.values.resize(m);
  const Real df = 1.0 / (static_cast<Real>(m) * series.dt);
  for (Eigen::Index j = 0; j < m; ++j) {
    const Eigen::Index bin = (j + m / 2) % m;
    const Eigen::Index signed_bin = bin < m / 2 ? bin : bin - m;
    out.freqs[j] = series.carrier_freq + static_cast<Real>(signed_bin) * df;
    out.values[j] =
        series.dt / static_cast<Real>(n) * std::norm(transform[static_cast<std::size_t>(bin)]);
  }
  return out;
}

VectorXr unwrapped_phase(const ComplexTimeSeries& series) {
  series.validate();
  VectorXr phase(series.size());
  for (Eigen::Index i = 0; i < series.size(); ++i) {
    if (std::abs(series.samples[i]) == 0.0)
      throw DomainError(fmt::format("phase undefined: zero amplitude at sample {}", i));
    phase[i] = std::arg(series.samples[i]);
  }
  for (Eigen::Index i = 1; i < phase.size(); ++i) {
    const Real raw = phase[i];
    Real step = std::remainder(raw - phase[i - 1], 2 * kPi);
    if (std::abs(step) > kPi / 2)
      throw DomainError(fmt::format(
          "phase under-sampled: jump of {:.3f} rad between samples {} and {}", step, i - 1, i));
    phase[i] = phase[i - 1] + step;
  }
  return phase;
}

SpectralDensity spectral_density(const ComplexTimeSeries& series, SpectrumKind kind) {
  series.validate();
  require(kind != SpectrumKind::kField, "use field_spectrum for the field spectrum");
  const Eigen::Index n = series.size();
  VectorXr x;
  switch (kind) {
    case SpectrumKind::kIntensity:
      x = series.samples.cwiseAbs2();
      break;
    case SpectrumKind::kAmplitude:
      x = series.samples.cwiseAbs();
      break;
    case SpectrumKind::kPhase:
    case SpectrumKind::kFrequency: {
      x = unwrapped_phase(series);
      const Real first = x[0];
      const Real slope = (x[n - 1] - x[0]) / static_cast<Real>(n - 1);
      for (Eigen::Index i = 0; i < n; ++i) x[i] -= first + slope * static_cast<Real>(i);
      break;
    }
    case SpectrumKind::kField:
      break;
  }
  x.array() -= x.mean();
  if (kind != SpectrumKind::kFrequency) return one_sided_density(x, series.dt, kind);

  SpectralDensity phase = one_sided_density(x, series.dt, SpectrumKind::kPhase);
  phase.kind = SpectrumKind::kFrequency;
  phase.values = phase.values.cwiseProduct(phase.freqs.cwiseAbs2());
  return phase;
}

CorrelationFunction correlation(const ComplexTimeSeries& series, CorrelationKind kind,
                                Real max_lag) {
  series.validate();
  require(max_lag >= 0, "max_lag must be non-negative");
  require(max_lag < series.duration() / 4,
          fmt::format("lag grid ({} s) must stay below a quarter of the record ({} s)", max_lag,
                      series.duration() / 4));
  const Eigen::Index n = series.size();
  const auto k_max = static_cast<Eigen::Index>(std::floor(max_lag / series.dt + 1e-9));

  CorrelationFunction out;
  out.kind = kind;
  out.lags = VectorXr::LinSpaced(2 * k_max + 1, -static_cast<Real>(k_max) * series.dt,
                                 static_cast<Real>(k_max) * series.dt);
  out.lags[k_max] = 0.0;

  switch (kind) {
    case CorrelationKind::kG1:
      out.values = symmetric_lags(detail::lag_sums(series.samples, k_max), n, false);
      break;
    case CorrelationKind::kG2Intensity:
      out.values = symmetric_lags(
          detail::lag_sums(series.samples.cwiseAbs2().cast<Complex>(), k_max), n, false);
      out.values = out.values.real().cast<Complex>();
      break;
    case CorrelationKind::kG2TwoPhoton: {
      const VectorXc squared = series.samples.array().square();
      out.values = symmetric_lags(detail::lag_sums(squared, k_max), n, true);
      break;
    }
    case CorrelationKind::kAmplitude:
      out.values = symmetric_lags(
          detail::lag_sums(series.samples.cwiseAbs().cast<Complex>(), k_max), n, false);
      out.values = out.values.real().cast<Complex>();
      break;
    case CorrelationKind::kPhase:
      out.values = symmetric_lags(
          detail::lag_sums(unwrapped_phase(series).cast<Complex>(), k_max), n, false);
      out.values = out.values.real().cast<Complex>();
      break;
  }
  return out;
}

CorrelationFunction amplitude_corr_from_intensity(const CorrelationFunction& g2i,
                                                  Real mean_intensity) {
  require(g2i.kind == CorrelationKind::kG2Intensity, "expected an intensity correlation");
  const Real floor = mean_intensity * mean_intensity;
  CorrelationFunction out;
  out.kind = CorrelationKind::kAmplitude;
  out.lags = g2i.lags;
  out.values.resize(g2i.values.size());
  for (Eigen::Index i = 0; i < g2i.values.size(); ++i) {
    Real radicand = (g2i.values[i].real() - floor) / 2;
    if (radicand < 0) {
      if (radicand > -1e-12 * std::max(floor, 1.0)) {
        radicand = 0;
      } else {
        throw DomainError(fmt::format(
            "intensity correlation below <I>^2 at lag {} s: not consistent with Gaussian "
            "amplitude statistics",
            g2i.lags[i]));
      }
    }
    out.values[i] = Complex(std::sqrt(radicand), 0);
  }
  return out;
}

Real gaussian_even_moment(int n, Real var) {
  require(n >= 1, "moment order must be positive");
  // (2n-1)!/(2^(n-1)(n-1)!) is the double factorial (2n-1)!!.
  Real coefficient = 1;
  for (int k = 3; k <= 2 * n - 1; k += 2) coefficient *= k;
  return coefficient * std::pow(var, n);
}

Real coherence_factor(const SpectralDensity& phase_sd, Real tau) {
  require(phase_sd.freqs.size() >= 2, "phase density needs at least two frequencies");
  require((phase_sd.values.array() >= 0).all(), "phase density must be non-negative");
  const auto& f = phase_sd.freqs;
  const auto& s = phase_sd.values;
  if (f[0] > 0 && s[0] > 0 && s[1] > 0) {
    const Real slope = std::log(s[1] / s[0]) / std::log(f[1] / f[0]);
    if (slope <= -3.0 + 1e-9)
      throw NumericalError(fmt::format(
          "phase noise integral diverges: S_phi ~ f^{:.2f} at the low end of the grid", slope));
  }
  if (tau == 0.0) return 1.0;
  VectorXr integrand(f.size());
  for (Eigen::Index i = 0; i < f.size(); ++i)
    integrand[i] = s[i] * (1.0 - std::cos(2 * kPi * f[i] * tau));
  return std::exp(-detail::trapezoid(f, integrand));
}

SpectralDensity white_fm_phase_density(Real s_nu0, Real f_min, Real f_max, int points) {
  require(s_nu0 >= 0, "s_nu0 must be >= 0");
  require(f_min > 0 && f_max > f_min && points >= 2, "invalid frequency grid");
  SpectralDensity out;
  out.kind = SpectrumKind::kPhase;
  out.freqs = VectorXr::LinSpaced(points, std::log(f_min), std::log(f_max)).array().exp();
  out.values = (s_nu0 / out.freqs.array().square()).matrix();
  return out;
}

CorrelationFunction constant_amplitude_correlation(Real amplitude, Real step, int count) {
  require(step > 0 && count >= 2, "invalid lag grid");
  CorrelationFunction out;
  out.kind = CorrelationKind::kAmplitude;
  out.lags = VectorXr::LinSpaced(count, 0.0, step * (count - 1));
  out.values = VectorXc::Constant(count, Complex(amplitude * amplitude, 0));
  return out;
}

SpectralDensity lineshape_from_noise(const CorrelationFunction& amp_corr,
                                     const SpectralDensity& phase_sd, Real carrier,
                                     const VectorXr& offsets) {
  std::vector<Real> tau;
  std::vector<Real> corr;
  for (Eigen::Index i = 0; i < amp_corr.lags.size(); ++i) {
    if (amp_corr.lags[i] >= 0) {
      tau.push_back(amp_corr.lags[i]);
      corr.push_back(amp_corr.values[i].real());
    }
  }
  require(tau.size() >= 2 && tau.front() == 0.0, "amplitude correlation must start at tau = 0");
  const Real step = tau[1] - tau[0];
  for (std::size_t i = 1; i < tau.size(); ++i)
    require(std::abs(tau[i] - tau[i - 1] - step) <= 1e-9 * step,
            "amplitude correlation lags must be uniform");
  const Real span = tau.back();
  require(phase_sd.freqs.size() >= 2, "phase density needs at least two frequencies");
  if (phase_sd.freqs.maxCoeff() < 0.5 / step || phase_sd.freqs.minCoeff() > 1.0 / span)
    throw DomainError(fmt::format(
        "grid mismatch: phase density spans [{}, {}] Hz but the lag grid needs [<= {}, >= {}] Hz",
        phase_sd.freqs.minCoeff(), phase_sd.freqs.maxCoeff(), 1.0 / span, 0.5 / step));

  VectorXr weight(static_cast<Eigen::Index>(tau.size()));
  for (std::size_t i = 0; i < tau.size(); ++i) {
    const Real end_factor = (i == 0 || i + 1 == tau.size()) ? 0.5 : 1.0;
    weight[static_cast<Eigen::Index>(i)] =
        2.0 * step * end_factor * corr[i] * coherence_factor(phase_sd, tau[i]);
  }

  SpectralDensity out;
  out.kind = SpectrumKind::kField;
  out.freqs = (offsets.array() + carrier).matrix();
  out.values.resize(offsets.size());
  for (Eigen::Index j = 0; j < offsets.size(); ++j) {
    Real sum = 0;
    for (std::size_t i = 0; i < tau.size(); ++i)
      sum += weight[static_cast<Eigen::Index>(i)] * std::cos(2 * kPi * offsets[j] * tau[i]);
    out.values[j] = sum;
  }
  return out;
}

WhiteFmLinewidth white_fm_linewidth(Real s_nu0) {
  require(s_nu0 >= 0, "s_nu0 must be >= 0");
  WhiteFmLinewidth out;
  out.hwhm = kPi / 2 * s_nu0;
  out.fwhm = kPi * s_nu0;
  out.cutoff_fc = kPi * kPi * s_nu0;
  // Phase variance above Omega_c = 2 pi f_c; independent of s_nu0.
  out.residual_phase_var = 1.0 / (kPi * kPi);
  out.degenerate = s_nu0 == 0.0;
  return out;
}

Real absorption_rate(const ComplexTimeSeries& series, Real omega0, Real gamma, Real dipole2) {
  series.validate();
  require(gamma >= 0, "decay rate must be non-negative");
  const Real quarter = series.duration() / 4;
  const Real max_lag = quarter - series.dt;
  const CorrelationFunction g1 = correlation(series, CorrelationKind::kG1, max_lag);
  const Eigen::Index zero = g1.zero_lag();
  const Real detuning = omega0 - 2 * kPi * series.carrier_freq;
  const Eigen::Index count = g1.lags.size() - zero;
  VectorXr tau = g1.lags.tail(count);
  VectorXr integrand(count);
  for (Eigen::Index k = 0; k < count; ++k) {
    const Complex kernel = std::exp(Complex(-gamma * tau[k], detuning * tau[k]));
    integrand[k] = (kernel * std::conj(g1.values[zero + k])).real();
  }
  return dipole2 * detail::trapezoid(tau, integrand);
}

Real half_max_width(const SpectralDensity& spectrum) {
  const auto& v = spectrum.values;
  const auto& f = spectrum.freqs;
  Eigen::Index peak = 0;
  v.maxCoeff(&peak);
  const Real half = v[peak] / 2;
  Eigen::Index lo = peak;
  while (lo > 0 && v[lo] > half) --lo;
  Eigen::Index hi = peak;
  while (hi + 1 < v.size() && v[hi] > half) ++hi;
  require(v[lo] <= half && v[hi] <= half, "spectrum does not fall to half maximum on the grid");
  const auto cross = [&](Eigen::Index a, Eigen::Index b) {
    return f[a] + (half - v[a]) * (f[b] - f[a]) / (v[b] - v[a]);
  };
  return cross(hi - 1, hi) - cross(lo + 1, lo);
}

LorentzianFit fit_lorentzian(const SpectralDensity& spectrum, Real window) {
  Eigen::Index peak = 0;
  spectrum.values.maxCoeff(&peak);
  const Real center = spectrum.freqs[peak];
  std::vector<Eigen::Index> idx;
  for (Eigen::Index i = 0; i < spectrum.freqs.size(); ++i)
    if (std::abs(spectrum.freqs[i] - center) <= window) idx.push_back(i);
  require(idx.size() >= 8, "too few bins in the fit window");
  VectorXr x(static_cast<Eigen::Index>(idx.size()));
  VectorXr y(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    x[static_cast<Eigen::Index>(i)] = spectrum.freqs[idx[i]] - center;
    y[static_cast<Eigen::Index>(i)] = spectrum.values[idx[i]];
  }

  Eigen::VectorXd p(4);
  p << 0.0, std::max(half_max_width(spectrum) / 2, 1e-12), spectrum.values[peak], 0.0;
  LorentzianFunctor functor{x, y};
  Eigen::LevenbergMarquardt<LorentzianFunctor> lm(functor);
  lm.parameters.maxfev = 2000;
  lm.minimize(p);

  return LorentzianFit{center + p[0], 2 * std::abs(p[1]), p[2], p[3]};
}

}  // namespace qoptics
