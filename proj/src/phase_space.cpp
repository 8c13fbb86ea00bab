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

#include "qoptics/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <unsupported/Eigen/MatrixFunctions>

namespace qoptics {

namespace {

constexpr Real kTailTolerance = 1e-10;

int enlarged_dim(int truncation, Real extra_photons) {
  return truncation + 1 + std::max(60, static_cast<int>(std::ceil(6 * extra_photons + 40)));
}

// exp(beta a^dag - beta^* a) on `dim` levels.
MatrixXc displacement_full(Complex beta, int dim) {
  const MatrixXc a = annihilation(dim - 1);
  const MatrixXc generator = beta * a.adjoint() - std::conj(beta) * a;
  return generator.exp();
}

// exp(r/2 (a^2 - a^dag^2)); r > 0 squeezes X.
MatrixXc squeeze_full(Real r, int dim) {
  const MatrixXc a = annihilation(dim - 1);
  const MatrixXc a2 = a * a;
  const MatrixXc generator = 0.5 * r * (a2 - a2.adjoint());
  return generator.exp();
}

Real gaussian_density(const Eigen::Vector2d& mean, const Eigen::Matrix2d& cov, Real x, Real p) {
  const Eigen::Vector2d d(x - mean[0], p - mean[1]);
  const Real det = cov.determinant();
  return std::exp(-0.5 * d.dot(cov.inverse() * d)) / (2 * kPi * std::sqrt(det));
}

Real fock_wigner_at(const VectorXc& c, Real x, Real p) {
  Eigen::Index top = c.size() - 1;
  while (top > 0 && c[top] == Complex(0, 0)) --top;
  const Real r2 = x * x + p * p;
  const Real u = 4 * r2;
  const Complex z = 2.0 * Complex(x, -p);
  Real total = 0;
  Complex zk(1, 0);
  Real inv_sqrt_kfact = 1;
  for (Eigen::Index k = 0; k <= top; ++k) {
    if (k > 0) {
      zk *= z;
      inv_sqrt_kfact /= std::sqrt(static_cast<Real>(k));
    }
    Complex sum(0, 0);
    Real lag_prev = 0;
    Real lag = 1;
    Real ratio = inv_sqrt_kfact;  // sqrt(n! / (n + k)!)
    for (Eigen::Index n = 0; n + k <= top; ++n) {
      if (n == 1) {
        lag_prev = 1;
        lag = 1 + static_cast<Real>(k) - u;
      } else if (n > 1) {
        const Real next = ((2 * (n - 1) + 1 + k - u) * lag - (n - 1 + k) * lag_prev) / n;
        lag_prev = lag;
        lag = next;
      }
      if (n > 0) ratio *= std::sqrt(static_cast<Real>(n) / static_cast<Real>(n + k));
      const Real sign = n % 2 ? -1.0 : 1.0;
      sum += sign * ratio * lag * c[n + k] * std::conj(c[n]);
    }
    const Complex term = zk * sum;
    total += k == 0 ? term.real() : 2 * term.real();
  }
  return 2 / kPi * std::exp(-2 * r2) * total;
}

Real husimi_fock_at(const VectorXc& c, Real x, Real p) {
  const Complex alpha_conj(x, -p);
  Complex overlap(0, 0);
  Complex term(1, 0);
  for (Eigen::Index n = 0; n < c.size(); ++n) {
    if (n > 0) term *= alpha_conj / std::sqrt(static_cast<Real>(n));
    overlap += term * c[n];
  }
  return std::exp(-(x * x + p * p)) * std::norm(overlap) / kPi;
}

Real trapezoid_2d(const MatrixXr& v, Real dx, Real dp) {
  Real sum = 0;
  const Eigen::Index nx = v.rows();
  const Eigen::Index np = v.cols();
  for (Eigen::Index i = 0; i < nx; ++i) {
    const Real wx = (i == 0 || i == nx - 1) ? 0.5 : 1.0;
    for (Eigen::Index j = 0; j < np; ++j) {
      const Real wp = (j == 0 || j == np - 1) ? 0.5 : 1.0;
      sum += wx * wp * v(i, j);
    }
  }
  return sum * dx * dp;
}

void check_axes(const VectorXr& x_axis, const VectorXr& p_axis) {
  require(x_axis.size() >= 3 && p_axis.size() >= 3, "axes need at least 3 points");
  for (const VectorXr* axis : {&x_axis, &p_axis}) {
    const Real h = (*axis)[1] - (*axis)[0];
    require(h > 0, "axes must be ascending");
    for (Eigen::Index i = 1; i < axis->size(); ++i)
      require(std::abs((*axis)[i] - (*axis)[i - 1] - h) <= 1e-9 * std::max(1.0, h),
              "axes must be uniform");
  }
}

WignerGrid fill_grid(const VectorXr& x_axis, const VectorXr& p_axis,
                     const std::function<Real(Real, Real)>& f, std::string_view what) {
  check_axes(x_axis, p_axis);
  WignerGrid g{x_axis, p_axis, MatrixXr(x_axis.size(), p_axis.size())};
  for (Eigen::Index i = 0; i < x_axis.size(); ++i)
    for (Eigen::Index j = 0; j < p_axis.size(); ++j) g.values(i, j) = f(x_axis[i], p_axis[j]);
  const Real norm = g.integral();
  if (std::abs(norm - 1) > 1e-3)
    throw DomainError(
        fmt::format("axes too narrow: {} integrates to {:.6f} on the grid", what, norm));
  return g;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  out.push_back(current);
  return out;
}

Real to_real(const std::string& s, std::string_view context) {
  try {
    std::size_t used = 0;
    const Real v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw DomainError(fmt::format("cannot parse '{}' as a number in state spec '{}'", s, context));
}

Real poisson_tail(Real mean, int truncation) {
  Real p = std::exp(-mean);
  Real sum = p;
  for (int n = 1; n <= truncation; ++n) {
    p *= mean / n;
    sum += p;
  }
  return std::max(0.0, 1 - sum);
}

}  // namespace

void FockVector::validate() const {
  require(amps.size() >= 1, "Fock vector is empty");
  require(amps.allFinite(), "Fock vector has non-finite amplitudes");
  const Real norm = amps.squaredNorm();
  require(std::abs(norm - 1) <= 1e-10,
          fmt::format("Fock vector is not normalised (norm^2 = {:.12f})", norm));
}

Real PhotonDistribution::mean() const {
  Real m = 0;
  for (Eigen::Index n = 0; n < probs.size(); ++n) m += n * probs[n];
  return m;
}

Real PhotonDistribution::variance() const {
  Real m2 = 0;
  for (Eigen::Index n = 0; n < probs.size(); ++n) m2 += static_cast<Real>(n * n) * probs[n];
  const Real m = mean();
  return m2 - m * m;
}

void PhotonDistribution::validate() const {
  require(probs.size() >= 1, "photon distribution is empty");
  require((probs.array() >= -1e-15).all() && (probs.array() <= 1 + 1e-15).all(),
          "photon probabilities must lie in [0, 1]");
  require(std::abs(probs.sum() - 1) <= 1e-10, "photon probabilities must sum to 1");
}

Real WignerGrid::integral() const { return trapezoid_2d(values, dx(), dp()); }

Real WignerGrid::at(Real x, Real p) const {
  const Real fx = (x - x_axis[0]) / dx();
  const Real fp = (p - p_axis[0]) / dp();
  const Eigen::Index nx = x_axis.size();
  const Eigen::Index np = p_axis.size();
  if (fx < 0 || fp < 0 || fx > static_cast<Real>(nx - 1) || fp > static_cast<Real>(np - 1))
    return 0;
  const auto i = std::min(static_cast<Eigen::Index>(fx), nx - 2);
  const auto j = std::min(static_cast<Eigen::Index>(fp), np - 2);
  const Real tx = fx - static_cast<Real>(i);
  const Real tp = fp - static_cast<Real>(j);
  return (1 - tx) * (1 - tp) * values(i, j) + tx * (1 - tp) * values(i + 1, j) +
         (1 - tx) * tp * values(i, j + 1) + tx * tp * values(i + 1, j + 1);
}

StateSpec parse_state_spec(std::string_view text) {
  const auto colon = text.find(':');
  const std::string head(text.substr(0, colon));
  const std::vector<std::string> args =
      colon == std::string_view::npos ? std::vector<std::string>{} : split(text.substr(colon + 1), ',');
  const auto need = [&](std::size_t lo, std::size_t hi) {
    require(args.size() >= lo && args.size() <= hi,
            fmt::format("state spec '{}' expects {} to {} parameters", text, lo, hi));
  };
  StateSpec spec;
  if (head == "vacuum") {
    need(0, 0);
  } else if (head == "coherent") {
    need(1, 2);
    spec.kind = StateKind::kCoherent;
    spec.alpha = Complex(to_real(args[0], text), args.size() > 1 ? to_real(args[1], text) : 0.0);
  } else if (head == "thermal") {
    need(1, 1);
    spec.kind = StateKind::kThermal;
    spec.nbar = to_real(args[0], text);
  } else if (head == "squeezed") {
    need(1, 1);
    spec.kind = StateKind::kSqueezedVacuum;
    spec.epsilon = to_real(args[0], text);
  } else if (head == "fock") {
    need(1, 1);
    spec.kind = StateKind::kFock;
    const Real n = to_real(args[0], text);
    require(n >= 0 && n == std::floor(n), "fock level must be a non-negative integer");
    spec.n = static_cast<int>(n);
  } else if (head == "cat") {
    need(1, 2);
    spec.kind = StateKind::kCat;
    spec.alpha = Complex(to_real(args[0], text), 0);
    if (args.size() > 1) {
      require(args[1] == "odd" || args[1] == "even", "cat parity must be 'even' or 'odd'");
      spec.even = args[1] == "even";
    }
  } else if (head == "admix1" || head == "admix2") {
    need(1, 1);
    spec.kind = StateKind::kAdmixture;
    spec.admix_level = head == "admix1" ? 1 : 2;
    spec.epsilon = to_real(args[0], text);
  } else {
    throw DomainError(fmt::format("unknown state '{}'", head));
  }
  return spec;
}

FockVector coherent_fock(Complex alpha, int truncation) {
  require(truncation >= 0, "truncation must be non-negative");
  const Real tail = poisson_tail(std::norm(alpha), truncation);
  if (tail > kTailTolerance)
    throw DomainError(fmt::format(
        "|alpha| = {} too large for truncation {}: tail mass {:.3g}", std::abs(alpha), truncation,
        tail));
  FockVector v{VectorXc(truncation + 1)};
  Complex term = std::exp(-std::norm(alpha) / 2);
  for (int n = 0; n <= truncation; ++n) {
    if (n > 0) term *= alpha / std::sqrt(static_cast<Real>(n));
    v.amps[n] = term;
  }
  v.amps.normalize();
  return v;
}

State make_state(const StateSpec& spec) {
  require(spec.truncation >= 0, "truncation must be non-negative");
  switch (spec.kind) {
    case StateKind::kVacuum:
      return GaussianState::vacuum();
    case StateKind::kCoherent: {
      const Real tail = poisson_tail(std::norm(spec.alpha), spec.truncation);
      if (tail > kTailTolerance)
        throw DomainError(fmt::format("|alpha| = {} too large for truncation {}",
                                      std::abs(spec.alpha), spec.truncation));
      GaussianState s;
      s.mean << spec.alpha.real(), spec.alpha.imag();
      return s;
    }
    case StateKind::kThermal: {
      require(spec.nbar >= 0, "thermal state needs nbar >= 0");
      GaussianState s;
      s.cov = Eigen::Matrix2d::Identity() * (spec.nbar / 2 + kVacuumVariance);
      return s;
    }
    case StateKind::kSqueezedVacuum: {
      require(spec.epsilon > 0, "squeezing needs epsilon > 0");
      GaussianState s;
      s.cov << spec.epsilon / 4, 0, 0, 1 / (4 * spec.epsilon);
      return s;
    }
    case StateKind::kFock: {
      require(spec.n >= 0 && spec.n <= spec.truncation, "fock level must lie within the truncation");
      FockVector v{VectorXc::Zero(spec.truncation + 1)};
      v.amps[spec.n] = 1;
      return v;
    }
    case StateKind::kCat: {
      const FockVector plus = coherent_fock(spec.alpha, spec.truncation);
      FockVector v{plus.amps};
      for (Eigen::Index n = 0; n < v.amps.size(); ++n) {
        const bool odd = n % 2;
        v.amps[n] = spec.even ? (odd ? Complex(0, 0) : 2.0 * plus.amps[n])
                              : (odd ? 2.0 * plus.amps[n] : Complex(0, 0));
      }
      const Real norm2 = v.amps.squaredNorm();
      require(norm2 > 1e-300, "odd cat state with alpha = 0 does not exist");
      v.amps /= std::sqrt(norm2);
      return v;
    }
    case StateKind::kAdmixture: {
      require(spec.admix_level == 1 || spec.admix_level == 2, "admixture level must be 1 or 2");
      require(spec.truncation >= spec.admix_level, "truncation too small for the admixture");
      FockVector v{VectorXc::Zero(spec.truncation + 1)};
      v.amps[0] = 1;
      v.amps[spec.admix_level] = spec.epsilon;
      v.amps.normalize();
      return v;
    }
  }
  throw DomainError("unknown state kind");
}

MatrixXc annihilation(int truncation) {
  MatrixXc a = MatrixXc::Zero(truncation + 1, truncation + 1);
  for (int n = 1; n <= truncation; ++n) a(n - 1, n) = std::sqrt(static_cast<Real>(n));
  return a;
}

MatrixXc displacement_matrix(Complex beta, int truncation) {
  const int dim = enlarged_dim(truncation, std::norm(beta) + 3 * std::abs(beta));
  return displacement_full(beta, dim).topLeftCorner(truncation + 1, truncation + 1);
}

MatrixXc density_matrix(const GaussianState& state, int truncation) {
  state.validate();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(state.cov);
  const Real l1 = eig.eigenvalues()[0];
  const Real l2 = eig.eigenvalues()[1];
  const Eigen::Vector2d axis = eig.eigenvectors().col(0);
  const Real nbar = std::max(0.0, 2 * std::sqrt(l1 * l2) - 0.5);
  const Real r = -0.25 * std::log(l1 / l2);
  const Real phi = std::atan2(axis[1], axis[0]);
  const Complex alpha(state.mean[0], state.mean[1]);

  const Real extra = std::norm(alpha) + 3 * std::abs(alpha) + std::sinh(r) * std::sinh(r) + nbar;
  const int dim = std::max(enlarged_dim(truncation, extra), 2 * (truncation + 1));

  VectorXc thermal(dim);
  const Real q = nbar / (nbar + 1);
  for (int n = 0; n < dim; ++n) thermal[n] = std::pow(q, n) / (nbar + 1);
  if (r <= 1e-15 && std::abs(alpha) == 0)
    return MatrixXc(thermal.head(truncation + 1).asDiagonal());

  MatrixXc u = MatrixXc::Identity(dim, dim);
  if (r > 1e-15) u = squeeze_full(r, dim);
  VectorXc rotation(dim);
  for (int n = 0; n < dim; ++n) rotation[n] = std::polar(1.0, phi * n);
  u = rotation.asDiagonal() * u;
  if (std::abs(alpha) > 0) u = displacement_full(alpha, dim) * u;

  const MatrixXc rho = u * thermal.asDiagonal() * u.adjoint();
  return rho.topLeftCorner(truncation + 1, truncation + 1);
}

GaussianState quadrature_moments(const FockVector& state) {
  state.validate();
  const MatrixXc a = annihilation(state.truncation());
  const VectorXc ac = a * state.amps;
  const Complex mean_a = state.amps.dot(ac);
  const Complex mean_a2 = state.amps.dot(a * ac);
  const Real mean_n = ac.squaredNorm();
  GaussianState s;
  s.mean << mean_a.real(), mean_a.imag();
  const Real xx = (2 * mean_a2.real() + 2 * mean_n + 1) / 4;
  const Real pp = (-2 * mean_a2.real() + 2 * mean_n + 1) / 4;
  const Real xp = mean_a2.imag() / 2;
  s.cov << xx - s.mean[0] * s.mean[0], xp - s.mean[0] * s.mean[1],
      xp - s.mean[0] * s.mean[1], pp - s.mean[1] * s.mean[1];
  return s;
}

Real wigner_at(const State& state, Real x, Real p) {
  if (const auto* g = std::get_if<GaussianState>(&state))
    return gaussian_density(g->mean, g->cov, x, p);
  return fock_wigner_at(std::get<FockVector>(state).amps, x, p);
}

WignerGrid wigner(const State& state, const VectorXr& x_axis, const VectorXr& p_axis) {
  if (const auto* g = std::get_if<GaussianState>(&state)) g->validate();
  if (const auto* f = std::get_if<FockVector>(&state)) f->validate();
  return fill_grid(x_axis, p_axis, [&](Real x, Real p) { return wigner_at(state, x, p); },
                   "Wigner function");
}

std::pair<VectorXr, VectorXr> default_axes(const State& state, int points) {
  require(points >= 3, "need at least 3 grid points");
  if (points % 2 == 0) ++points;
  const GaussianState moments = std::holds_alternative<GaussianState>(state)
                                    ? std::get<GaussianState>(state)
                                    : quadrature_moments(std::get<FockVector>(state));
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(moments.cov);
  const Real sigma = std::sqrt(eig.eigenvalues().maxCoeff());
  const Real hx = std::abs(moments.mean[0]) + 5 * sigma;
  const Real hp = std::abs(moments.mean[1]) + 5 * sigma;
  return {VectorXr::LinSpaced(points, -hx, hx), VectorXr::LinSpaced(points, -hp, hp)};
}

Marginal marginal(const WignerGrid& grid, Real theta) {
  const Real norm = grid.integral();
  require(std::abs(norm - 1) <= 1e-3,
          fmt::format("marginal needs a normalised grid (integral {:.6f})", norm));
  const Real c = std::cos(theta);
  const Real s = std::sin(theta);
  const Real h = std::min(grid.dx(), grid.dp());
  Real lo = 0;
  Real hi = 0;
  Real ymax = 0;
  for (Real x : {grid.x_axis[0], grid.x_axis[grid.x_axis.size() - 1]}) {
    for (Real p : {grid.p_axis[0], grid.p_axis[grid.p_axis.size() - 1]}) {
      lo = std::min(lo, x * c + p * s);
      hi = std::max(hi, x * c + p * s);
      ymax = std::max(ymax, std::abs(-x * s + p * c));
    }
  }
  const auto half = static_cast<Eigen::Index>(std::ceil(std::max(-lo, hi) / h));
  const auto ny = static_cast<Eigen::Index>(std::ceil(ymax / h));
  Marginal out;
  out.theta = theta;
  out.x = VectorXr::LinSpaced(2 * half + 1, -static_cast<Real>(half) * h,
                              static_cast<Real>(half) * h);
  out.density.resize(out.x.size());
  for (Eigen::Index i = 0; i < out.x.size(); ++i) {
    Real sum = 0;
    for (Eigen::Index j = -ny; j <= ny; ++j) {
      const Real y = static_cast<Real>(j) * h;
      sum += grid.at(out.x[i] * c - y * s, out.x[i] * s + y * c);
    }
    out.density[i] = sum * h;
  }
  return out;
}

WignerGrid to_husimi(const State& state, const VectorXr& x_axis, const VectorXr& p_axis) {
  if (const auto* g = std::get_if<GaussianState>(&state)) {
    g->validate();
    const Eigen::Matrix2d cov = g->cov + Eigen::Matrix2d::Identity() * kVacuumVariance;
    return fill_grid(x_axis, p_axis,
                     [&](Real x, Real p) { return gaussian_density(g->mean, cov, x, p); },
                     "Husimi function");
  }
  const auto& f = std::get<FockVector>(state);
  f.validate();
  return fill_grid(x_axis, p_axis, [&](Real x, Real p) { return husimi_fock_at(f.amps, x, p); },
                   "Husimi function");
}

WignerGrid convolve_with_vacuum(const WignerGrid& grid) {
  const auto kernel = [](Real h) {
    const auto half = static_cast<Eigen::Index>(std::ceil(3.5 / h));
    VectorXr k(2 * half + 1);
    for (Eigen::Index i = -half; i <= half; ++i) {
      const Real x = static_cast<Real>(i) * h;
      k[i + half] = std::sqrt(2 / kPi) * std::exp(-2 * x * x) * h;
    }
    return k;
  };
  const VectorXr kx = kernel(grid.dx());
  const VectorXr kp = kernel(grid.dp());
  const Eigen::Index nx = grid.values.rows();
  const Eigen::Index np = grid.values.cols();
  MatrixXr tmp = MatrixXr::Zero(nx, np);
  const Eigen::Index hx = kx.size() / 2;
  const Eigen::Index hp = kp.size() / 2;
  for (Eigen::Index i = 0; i < nx; ++i)
    for (Eigen::Index k = -hx; k <= hx; ++k) {
      const Eigen::Index src = i - k;
      if (src >= 0 && src < nx) tmp.row(i) += kx[k + hx] * grid.values.row(src);
    }
  WignerGrid out{grid.x_axis, grid.p_axis, MatrixXr::Zero(nx, np)};
  for (Eigen::Index j = 0; j < np; ++j)
    for (Eigen::Index k = -hp; k <= hp; ++k) {
      const Eigen::Index src = j - k;
      if (src >= 0 && src < np) out.values.col(j) += kp[k + hp] * tmp.col(src);
    }
  return out;
}

GaussianPFunction gaussian_p_function(const GaussianState& state) {
  state.validate();
  GaussianPFunction out;
  out.mean = state.mean;
  out.cov = state.cov - Eigen::Matrix2d::Identity() * kVacuumVariance;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(out.cov);
  out.classical = eig.eigenvalues().minCoeff() >= -1e-12;
  return out;
}

Real parity_wigner_origin(const PhotonDistribution& pd) {
  const Real total = pd.probs.sum();
  if (std::abs(total - 1) > 1e-8)
    throw DomainError(fmt::format(
        "photon distribution misses {:.3g} of probability beyond n = {}: heavy tail", 1 - total,
        pd.probs.size() - 1));
  Real sum = 0;
  for (Eigen::Index n = 0; n < pd.probs.size(); ++n) sum += (n % 2 ? -1.0 : 1.0) * pd.probs[n];
  return 2 / kPi * sum;
}

State displace(const State& state, Complex beta) {
  if (const auto* g = std::get_if<GaussianState>(&state)) {
    GaussianState out = *g;
    out.mean[0] += beta.real();
    out.mean[1] += beta.imag();
    return out;
  }
  const auto& f = std::get<FockVector>(state);
  f.validate();
  const int n = f.truncation();
  const int dim = enlarged_dim(n, std::norm(beta) + 3 * std::abs(beta));
  VectorXc padded = VectorXc::Zero(dim);
  padded.head(n + 1) = f.amps;
  const VectorXc moved = displacement_full(beta, dim) * padded;
  const Real tail = moved.tail(dim - n - 1).squaredNorm();
  if (tail > 1e-8)
    throw DomainError(fmt::format(
        "truncation overflow: displacing by {} leaves {:.3g} of the state beyond n = {}",
        std::abs(beta), tail, n));
  FockVector out{moved.head(n + 1)};
  out.amps.normalize();
  return out;
}

PhotonDistribution photon_distribution(const State& state) {
  if (const auto* f = std::get_if<FockVector>(&state)) {
    f->validate();
    return PhotonDistribution{f->amps.cwiseAbs2()};
  }
  const auto& g = std::get<GaussianState>(state);
  for (int n = kDefaultTruncation; n <= 4096; n *= 2) {
    const VectorXr probs = density_matrix(g, n).diagonal().real().cwiseMax(0.0);
    if (1 - probs.sum() <= 1e-12) return PhotonDistribution{probs};
  }
  throw NumericalError("photon distribution needs more than 4096 Fock levels");
}

}  // namespace qoptics
