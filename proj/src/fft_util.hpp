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

#pragma once

#include <complex>
#include <type_traits>
#include <vector>

#define EIGEN_FFTW_DEFAULT
#include <unsupported/Eigen/FFT>

#include "qoptics/types.hpp"

namespace qoptics::detail {

using CVec = std::vector<Complex>;

/// Forward DFT sum_j x_j exp(-2 pi i j k / M) of x zero-padded to length m.
inline CVec padded_fft(const VectorXc& x, Eigen::Index m) {
  CVec in(static_cast<std::size_t>(m), Complex(0, 0));
  for (Eigen::Index i = 0; i < x.size(); ++i) in[static_cast<std::size_t>(i)] = x[i];
  CVec out;
  Eigen::FFT<Real> fft;
  fft.fwd(out, in);
  return out;
}

/// Inverse DFT including the 1/M factor.
inline CVec ifft(const CVec& spectrum) {
  CVec out;
  Eigen::FFT<Real> fft;
  fft.inv(out, spectrum);
  return out;
}

inline CVec fft(const CVec& x) {
  CVec out;
  Eigen::FFT<Real> fft;
  fft.fwd(out, x);
  return out;
}

/// Lag sums s(k) = sum_j conj(x_j) x_{j+k}, k = 0..max_lag (no wrap-around).
inline CVec lag_sums(const VectorXc& x, Eigen::Index max_lag) {
  const Eigen::Index m = 2 * x.size();
  CVec spec = padded_fft(x, m);
  for (auto& v : spec) v = Complex(std::norm(v), 0);
  CVec r = ifft(spec);
  r.resize(static_cast<std::size_t>(max_lag + 1));
  return r;
}

/// Trapezoid rule on a possibly non-uniform grid.
template <typename XS, typename YS>
auto trapezoid(const XS& x, const YS& y) {
  using Value = std::decay_t<decltype(y[0])>;
  Value sum = Value(0);
  for (Eigen::Index i = 1; i < static_cast<Eigen::Index>(x.size()); ++i) {
    sum += (y[i] + y[i - 1]) * (x[i] - x[i - 1]) * 0.5;
  }
  return sum;
}

}  // namespace qoptics::detail
