// Copyright 2026 The lct Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>

#include "lct/metric.hpp"
#include "lct/symplectic.hpp"
#include "lct/types.hpp"

namespace lct {

using CVector = Eigen::VectorXcd;

/// Scalar transform w' = a w + b t, t' = c w + d t.
struct LCT1D {
  double a;
  double b;
  double c;
  double d;
};

inline constexpr double kUnitDeterminantTol = 1e-12;
inline constexpr double kMinKernelC = 1e-9;

/// Throws NotSymplectic when |ad - bc - 1| > 1e-12.
LCT1D make_lct1d(double a, double b, double c, double d);

LCT1D inverse(const LCT1D& l) noexcept;

/// Signature (1, 0) embedding.
BlockLCT to_block_lct(const LCT1D& l);

/// Throws DimensionMismatch unless the transform is one-dimensional.
LCT1D to_lct1d(const BlockLCT& lct);

/// a = d = cos(theta), b = sin(theta), c = -sin(theta).
LCT1D fractional_fourier_params(double theta) noexcept;

/// Uniform sample points t0 + k dt, k < count.
class Grid {
 public:
  /// Throws InvalidArgument unless dt > 0, count >= 2 and both ends are finite.
  Grid(double t0, double dt, std::size_t count);

  double t0() const noexcept { return t0_; }
  double dt() const noexcept { return dt_; }
  std::size_t count() const noexcept { return count_; }
  double at(std::size_t k) const noexcept { return t0_ + static_cast<double>(k) * dt_; }
  double back() const noexcept { return at(count_ - 1); }

 private:
  double t0_;
  double dt_;
  std::size_t count_;
};

class SampledSignal {
 public:
  SampledSignal(Grid grid, CVector samples);

  const Grid& grid() const noexcept { return grid_; }
  const CVector& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return grid_.count(); }

 private:
  Grid grid_;
  CVector samples_;
};

/// Hermite-Gaussian state |n, T, Omega, b_dev> with B = b_dev^2, A = 1/(4B).
struct HermiteState {
  unsigned n;
  double T;
  double Omega;
  double b_dev;

  /// Throws InvalidArgument unless b_dev > 0 and all fields are finite.
  HermiteState(unsigned n, double T, double Omega, double b_dev);

  double B() const noexcept { return b_dev * b_dev; }
  double A() const noexcept { return 0.25 / B(); }
  /// Time standard deviation of the state, sqrt((2n + 1) A).
  double time_sigma() const noexcept;
};

/// C exp[(i/c)(t' t - (a t'^2 + d t^2)/2)], C = exp(-i pi/4 sgn c)/sqrt(2 pi |c|).
/// Throws DegenerateKernel when |c| < 1e-9.
Complex lct_kernel(const LCT1D& l, double t_prime, double t);

/// Trapezoid quadrature of the kernel integral onto out_grid.
/// Throws DegenerateKernel.
SampledSignal apply_lct(const LCT1D& l, const SampledSignal& s, const Grid& out_grid);
SampledSignal apply_lct(const LCT1D& l, const SampledSignal& s);

/// Samples of the normalized state. Throws GridTooNarrow unless the grid
/// covers T +- 4 time_sigma().
SampledSignal hermite_state(const HermiteState& h, const Grid& grid);

struct Moments {
  double T;
  double Omega;
  double A;  // time variance
  double B;  // angular-frequency variance
};

/// Riemann-sum moments in time and, through dft_oracle, in frequency, where
/// a factor exp(-i W t) has frequency mean +W. Throws ZeroSignal.
Moments signal_moments(const SampledSignal& s);

/// Brute-force (dt/sqrt(2 pi)) sum_j psi_j exp(-i w_k t_j) on the dual grid
/// w_k = (k - floor(n/2)) dw, dw = 2 pi/(n dt).
SampledSignal dft_oracle(const SampledSignal& s);

Grid dual_grid(const Grid& g);

/// sqrt(sum |psi|^2 dt).
double l2_norm(const SampledSignal& s);

/// ||actual - expected|| / ||expected|| on the sample vectors.
double relative_l2_error(const CVector& actual, const CVector& expected);

/// Same, after rotating `expected` by the unit phase that best matches `actual`.
double phase_aligned_relative_error(const CVector& actual, const CVector& expected);

}  // namespace lct
