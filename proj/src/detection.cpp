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

#include "qoptics/detection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Cholesky>
#include <fmt/format.h>

#include "fft_util.hpp"
#include "qoptics/random.hpp"

namespace qoptics {

namespace {


VectorXr uniforms(std::uint64_t seed, std::size_t count) {
  VectorXr out(static_cast<Eigen::Index>(count));
  for_each_chunk(seed, count, [&](Engine& engine, std::size_t begin, std::size_t end) {
    std::uniform_real_distribution<Real> u(0.0, 1.0);
    for (std::size_t i = begin; i < end; ++i) out[static_cast<Eigen::Index>(i)] = u(engine);
  });
  return out;
}

VectorXr normals(std::uint64_t seed, std::size_t count) {
  VectorXr out(static_cast<Eigen::Index>(count));
  for_each_chunk(seed, count, [&](Engine& engine, std::size_t begin, std::size_t end) {
    std::normal_distribution<Real> g(0.0, 1.0);
    for (std::size_t i = begin; i < end; ++i) out[static_cast<Eigen::Index>(i)] = g(engine);
  });
  return out;
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index) {
  return derive_engine(seed, index)();
}

// Inverse CDF of a piecewise-linear density sampled at uniform nodes.
class GridSampler {
 public:
  GridSampler(const VectorXr& x, const VectorXr& density) : x_(x), f_(density) {
    cdf_.resize(x.size());
    cdf_[0] = 0;
    for (Eigen::Index i = 1; i < x.size(); ++i)
      cdf_[i] = cdf_[i - 1] + 0.5 * (f_[i] + f_[i - 1]) * (x[i] - x[i - 1]);
    require(cdf_[x.size() - 1] > 0, "sampling density has no mass");
  }

  Real operator()(Real u) const {
    const Real target = u * cdf_[cdf_.size() - 1];
    const auto* begin = cdf_.data();
    const auto* end = begin + cdf_.size();
    auto i = static_cast<Eigen::Index>(std::upper_bound(begin, end, target) - begin);
    i = std::clamp<Eigen::Index>(i, 1, cdf_.size() - 1);
    const Real h = x_[i] - x_[i - 1];
    const Real f0 = f_[i - 1];
    const Real f1 = f_[i];
    const Real need = target - cdf_[i - 1];
    // Solve f0 t + (f1 - f0) t^2 / (2h) = need for t in [0, h].
    const Real a = (f1 - f0) / (2 * h);
    Real t;
    if (std::abs(a) < 1e-14 * std::max(std::abs(f0), 1e-300)) {
      t = f0 > 0 ? need / f0 : 0.5 * h;
    } else {
      const Real disc = std::max(0.0, f0 * f0 + 4 * a * need);
      t = (-f0 + std::sqrt(disc)) / (2 * a);
    }
    return x_[i - 1] + std::clamp(t, 0.0, h);
  }

 private:
  VectorXr x_;
  VectorXr f_;
  VectorXr cdf_;
};

Real quantile(std::vector<Real> v, Real q) {
  const auto k = static_cast<std::size_t>(q * static_cast<Real>(v.size() - 1));
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
  return v[k];
}

struct FilteredProjection {
  Real origin = 0;  // position of sample 0
  Real step = 1;
  VectorXr values;
  Real cutoff = 0;

  Real at(Real s) const {
    const Real f = (s - origin) / step;
    if (f < 0 || f > static_cast<Real>(values.size() - 1)) return 0;
    const auto i = std::min(static_cast<Eigen::Index>(f), values.size() - 2);
    const Real t = f - static_cast<Real>(i);
    return (1 - t) * values[i] + t * values[i + 1];
  }
};

FilteredProjection filter_projection(const QuadratureSamples& q, Real reach,
                                     const TomographyOptions& options) {
  const std::vector<Real> v(q.values.data(), q.values.data() + q.values.size());
  const auto n = static_cast<Real>(v.size());
  const Real iqr = quantile(v, 0.75) - quantile(v, 0.25);
  Real width = 2 * iqr / std::cbrt(n);
  const Real lo_data = q.values.minCoeff();
  const Real hi_data = q.values.maxCoeff();
  if (!(width > 0)) width = std::max(hi_data - lo_data, 1e-3) / 64;

  // Histogram on a range covering both the data and the reconstruction grid.
  const Real lo = std::min(lo_data, -reach) - 2 * width;
  const Real hi = std::max(hi_data, reach) + 2 * width;
  const auto bins = static_cast<Eigen::Index>(std::ceil((hi - lo) / width));
  VectorXc hist = VectorXc::Zero(bins);
  for (Real x : v) {
    const auto b = std::clamp<Eigen::Index>(static_cast<Eigen::Index>((x - lo) / width), 0, bins - 1);
    hist[b] += 1.0 / (n * width);
  }

  Eigen::Index padded = 1;
  while (padded < 2 * bins) padded *= 2;
  detail::CVec spectrum = detail::padded_fft(hist, padded);

  const Real df = 1.0 / (static_cast<Real>(padded) * width);
  const Real nyquist = 0.5 / width;
  Real cutoff = 0;
  for (Eigen::Index k = 0; k <= padded / 2; ++k) {
    const Real power = std::norm(spectrum[static_cast<std::size_t>(k)] * width);
    if (power > options.noise_floor / n) cutoff = static_cast<Real>(k) * df;
  }
  cutoff = std::min(cutoff + df, options.nyquist_fraction * nyquist);

  // Ramp kernel sampled in real space, h(s) = 2 int_0^c f w(f) cos(2 pi f s) df,
  // so the filter keeps the correct mean rather than zeroing the DC bin.
  constexpr int kQuad = 2048;
  const Real dq = cutoff / kQuad;
  VectorXc kernel = VectorXc::Zero(padded);
  for (Eigen::Index k = 0; k <= padded / 2; ++k) {
    const Real s = static_cast<Real>(k) * width;
    Real sum = 0;
    for (int j = 0; j <= kQuad; ++j) {
      const Real f = j * dq;
      Real gain = f;
      if (options.window == RampWindow::kHann) gain *= 0.5 * (1 + std::cos(kPi * f / cutoff));
      const Real simpson = (j == 0 || j == kQuad) ? 1.0 : (j % 2 ? 4.0 : 2.0);
      sum += simpson * gain * std::cos(2 * kPi * f * s);
    }
    const Real h = 2 * sum * dq / 3 * width;
    kernel[k] = h;
    if (k > 0 && k < padded / 2) kernel[padded - k] = h;
  }
  const detail::CVec response = detail::padded_fft(kernel, padded);
  for (Eigen::Index k = 0; k < padded; ++k)
    spectrum[static_cast<std::size_t>(k)] *= response[static_cast<std::size_t>(k)];
  const detail::CVec filtered = detail::ifft(spectrum);

  FilteredProjection out;
  out.step = width;
  out.origin = lo + 0.5 * width;  // bin centres
  out.cutoff = cutoff;
  out.values.resize(bins);
  for (Eigen::Index i = 0; i < bins; ++i) out.values[i] = filtered[static_cast<std::size_t>(i)].real();
  return out;
}

}  // namespace

void TomographyDataset::validate() const {
  std::vector<Real> thetas;
  for (const auto& q : angles) {
    require(q.theta >= 0 && q.theta < kPi, fmt::format("angle {} outside [0, pi)", q.theta));
    require(q.values.size() >= 1000,
            fmt::format("angle {} has {} samples; need at least 1000", q.theta, q.values.size()));
    require(q.values.allFinite(), "quadrature samples must be finite");
    thetas.push_back(q.theta);
  }
  std::sort(thetas.begin(), thetas.end());
  thetas.erase(std::unique(thetas.begin(), thetas.end()), thetas.end());
  require(thetas.size() >= 8,
          fmt::format("tomography needs at least 8 distinct angles, got {}", thetas.size()));
}

Eigen::VectorXi sample_direct(const State& state, int shots, std::uint64_t seed) {
  require(shots >= 1, "shots must be >= 1");
  const PhotonDistribution pd = photon_distribution(state);
  VectorXr cdf(pd.probs.size());
  std::partial_sum(pd.probs.begin(), pd.probs.end(), cdf.begin());
  const VectorXr u = uniforms(seed, static_cast<std::size_t>(shots));
  Eigen::VectorXi out(shots);
  const Real total = cdf[cdf.size() - 1];
  for (int i = 0; i < shots; ++i) {
    const auto* it = std::upper_bound(cdf.data(), cdf.data() + cdf.size(), u[i] * total);
    out[i] = static_cast<int>(std::min<std::ptrdiff_t>(it - cdf.data(), cdf.size() - 1));
  }
  return out;
}

QuadratureSamples sample_homodyne(const State& state, Real theta, int shots, std::uint64_t seed) {
  require(shots >= 1, "shots must be >= 1");
  QuadratureSamples out;
  out.theta = theta;
  if (const auto* g = std::get_if<GaussianState>(&state)) {
    g->validate();
    const Real mu = rotated_mean(*g, theta);
    const Real sd = std::sqrt(rotated_variance(*g, theta));
    out.values = (mu + sd * normals(seed, static_cast<std::size_t>(shots)).array()).matrix();
    return out;
  }
  const auto [x, p] = default_axes(state, 301);
  const Marginal m = marginal(wigner(state, x, p), theta);
  const Real worst = m.density.minCoeff();
  if (worst < -1e-6)
    throw NumericalError(
        fmt::format("grid marginal at theta = {} dips to {:.3g}: grid too coarse", theta, worst));
  const GridSampler sampler(m.x, m.density.cwiseMax(0.0));
  const VectorXr u = uniforms(seed, static_cast<std::size_t>(shots));
  out.values = u.unaryExpr([&](Real v) { return sampler(v); });
  return out;
}

HeterodyneSamples sample_heterodyne(const State& state, int shots, std::uint64_t seed) {
  require(shots >= 1, "shots must be >= 1");
  HeterodyneSamples out(shots, 2);
  if (const auto* g = std::get_if<GaussianState>(&state)) {
    g->validate();
    const Eigen::Matrix2d q = g->cov + Eigen::Matrix2d::Identity() * kVacuumVariance;
    const Eigen::Matrix2d l = q.llt().matrixL();
    const VectorXr z = normals(seed, 2 * static_cast<std::size_t>(shots));
    for (int i = 0; i < shots; ++i) {
      const Eigen::Vector2d v = g->mean + l * Eigen::Vector2d(z[2 * i], z[2 * i + 1]);
      out.row(i) = v.transpose();
    }
    return out;
  }
  // Fock states: pick a grid cell by its Q mass, then a uniform point in it.
  const auto [wx, wp] = default_axes(state, 3);
  const Real hx = wx[2] + 2;
  const Real hp = wp[2] + 2;
  const VectorXr x = VectorXr::LinSpaced(301, -hx, hx);
  const VectorXr p = VectorXr::LinSpaced(301, -hp, hp);
  const WignerGrid q = to_husimi(state, x, p);
  VectorXr cdf(q.values.size());
  Real acc = 0;
  for (Eigen::Index k = 0; k < q.values.size(); ++k) {
    acc += std::max(0.0, q.values.data()[k]);
    cdf[k] = acc;
  }
  const VectorXr u = uniforms(seed, 3 * static_cast<std::size_t>(shots));
  for (int i = 0; i < shots; ++i) {
    const auto* it = std::upper_bound(cdf.data(), cdf.data() + cdf.size(), u[3 * i] * acc);
    const auto k = std::min<Eigen::Index>(it - cdf.data(), cdf.size() - 1);
    const Eigen::Index row = k % q.values.rows();
    const Eigen::Index col = k / q.values.rows();
    out(i, 0) = x[row] + (u[3 * i + 1] - 0.5) * q.dx();
    out(i, 1) = p[col] + (u[3 * i + 2] - 0.5) * q.dp();
  }
  return out;
}

TomographyDataset simulate_tomography(const State& state, int angle_count, int shots,
                                      std::uint64_t seed) {
  require(angle_count >= 1, "need at least one angle");
  TomographyDataset data;
  for (int k = 0; k < angle_count; ++k) {
    const Real theta = kPi * k / angle_count;
    data.angles.push_back(sample_homodyne(state, theta, shots, sub_seed(seed, k)));
  }
  return data;
}

std::pair<VectorXr, VectorXr> tomography_axes(const TomographyDataset& data, int points) {
  require(points >= 3, "need at least 3 grid points");
  if (points % 2 == 0) ++points;
  Real reach = 0;
  for (const auto& q : data.angles) {
    const Real mean = q.values.mean();
    const Real sd = std::sqrt((q.values.array() - mean).square().mean());
    reach = std::max(reach, std::abs(mean) + 5 * sd);
  }
  const VectorXr axis = VectorXr::LinSpaced(points, -reach, reach);
  return {axis, axis};
}

TomographyResult reconstruct_wigner(const TomographyDataset& data, const VectorXr& x_axis,
                                    const VectorXr& p_axis, const TomographyOptions& options) {
  data.validate();
  require(options.angular_upsampling >= 1, "angular upsampling must be >= 1");
  require(options.nyquist_fraction > 0 && options.nyquist_fraction <= 1,
          "nyquist fraction must lie in (0, 1]");
  std::vector<const QuadratureSamples*> sorted;
  for (const auto& q : data.angles) sorted.push_back(&q);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto* a, const auto* b) { return a->theta < b->theta; });
  const auto count = static_cast<Eigen::Index>(sorted.size());

  const Real reach =
      std::hypot(std::max(std::abs(x_axis[0]), std::abs(x_axis[x_axis.size() - 1])),
                 std::max(std::abs(p_axis[0]), std::abs(p_axis[p_axis.size() - 1])));

  TomographyResult result;
  result.cutoffs.resize(count);
  std::vector<FilteredProjection> proj;
  for (Eigen::Index k = 0; k < count; ++k) {
    proj.push_back(filter_projection(*sorted[k], reach, options));
    result.cutoffs[k] = proj.back().cutoff;
  }

  // Walk the circle of period pi. Between measured angles a and b the
  // filtered projection is blended linearly; angle theta + pi sees the
  // projection at theta mirrored, g(theta + pi, s) = g(theta, -s).
  const int sub = options.angular_upsampling;
  result.grid = WignerGrid{x_axis, p_axis, MatrixXr::Zero(x_axis.size(), p_axis.size())};
  for (Eigen::Index k = 0; k < count; ++k) {
    const Eigen::Index next = (k + 1) % count;
    const Real a = sorted[k]->theta;
    const Real b = next == 0 ? sorted[0]->theta + kPi : sorted[next]->theta;
    const Real mirror = next == 0 ? -1.0 : 1.0;
    for (int j = 0; j < sub; ++j) {
      const Real t = static_cast<Real>(j) / sub;
      const Real theta = a + t * (b - a);
      const Real weight = (b - a) / sub;
      const Real c = std::cos(theta);
      const Real s = std::sin(theta);
      for (Eigen::Index ix = 0; ix < x_axis.size(); ++ix)
        for (Eigen::Index ip = 0; ip < p_axis.size(); ++ip) {
          const Real pos = x_axis[ix] * c + p_axis[ip] * s;
          Real g = proj[k].at(pos);
          if (t > 0) {
            // At theta the neighbour's coordinate is the same line offset.
            g = (1 - t) * g + t * proj[next].at(mirror * pos);
          }
          result.grid.values(ix, ip) += weight * g;
        }
    }
  }
  result.scale = result.grid.integral();
  if (!(std::abs(result.scale) > 1e-12))
    throw NumericalError("reconstruction has vanishing integral");
  result.grid.values /= result.scale;
  return result;
}

GaussianState grid_moments(const WignerGrid& grid) {
  Real m0 = 0;
  Eigen::Vector2d m1 = Eigen::Vector2d::Zero();
  Eigen::Matrix2d m2 = Eigen::Matrix2d::Zero();
  const Eigen::Index nx = grid.x_axis.size();
  const Eigen::Index np = grid.p_axis.size();
  for (Eigen::Index i = 0; i < nx; ++i) {
    const Real wx = (i == 0 || i == nx - 1) ? 0.5 : 1.0;
    for (Eigen::Index j = 0; j < np; ++j) {
      const Real wp = (j == 0 || j == np - 1) ? 0.5 : 1.0;
      const Real w = wx * wp * grid.values(i, j);
      const Eigen::Vector2d v(grid.x_axis[i], grid.p_axis[j]);
      m0 += w;
      m1 += w * v;
      m2 += w * v * v.transpose();
    }
  }
  GaussianState out;
  out.mean = m1 / m0;
  out.cov = m2 / m0 - out.mean * out.mean.transpose();
  return out;
}

Real l1_distance(const WignerGrid& a, const WignerGrid& b) {
  require(a.values.rows() == b.values.rows() && a.values.cols() == b.values.cols(),
          "grids must have the same shape");
  WignerGrid diff{a.x_axis, a.p_axis, (a.values - b.values).cwiseAbs()};
  return diff.integral();
}

}  // namespace qoptics
