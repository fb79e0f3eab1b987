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

#include "lct/transform1d.hpp"

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "lct/error.hpp"

namespace lct {

namespace {

using Index = Eigen::Index;

constexpr double kPi = std::numbers::pi;
constexpr double kGridSigmas = 4.0;

void require_kernel(const LCT1D& l) {
  if (!(std::abs(l.c) >= kMinKernelC)) {
    throw Error(Errc::DegenerateKernel, "|c| is below 1e-9; the transform has no integral kernel",
                std::abs(l.c));
  }
}

Complex kernel_constant(double c) {
  const double sgn = c > 0.0 ? 1.0 : -1.0;
  return std::polar(1.0 / std::sqrt(2.0 * kPi * std::abs(c)), -0.25 * kPi * sgn);
}

}  // namespace

LCT1D make_lct1d(double a, double b, double c, double d) {
  const double r = std::abs(a * d - b * c - 1.0);
  if (!(r <= kUnitDeterminantTol)) {
    throw Error(Errc::NotSymplectic, "ad - bc must equal 1", r);
  }
  return LCT1D{a, b, c, d};
}

LCT1D inverse(const LCT1D& l) noexcept { return LCT1D{l.d, -l.b, -l.c, l.a}; }

BlockLCT to_block_lct(const LCT1D& l) {
  const Metric metric(Signature(1, 0));
  return make_lct(Matrix::Constant(1, 1, l.a), Matrix::Constant(1, 1, l.b),
                  Matrix::Constant(1, 1, l.c), Matrix::Constant(1, 1, l.d), metric);
}

LCT1D to_lct1d(const BlockLCT& lct) {
  if (lct.dim() != 1) {
    throw Error(Errc::DimensionMismatch, "integral transforms are one-dimensional only");
  }
  return make_lct1d(lct.a()(0, 0), lct.b()(0, 0), lct.c()(0, 0), lct.d()(0, 0));
}

LCT1D fractional_fourier_params(double theta) noexcept {
  const double cs = std::cos(theta);
  const double sn = std::sin(theta);
  return LCT1D{cs, sn, -sn, cs};
}

Grid::Grid(double t0, double dt, std::size_t count) : t0_(t0), dt_(dt), count_(count) {
  if (!std::isfinite(t0) || !std::isfinite(dt) || !(dt > 0.0)) {
    throw Error(Errc::InvalidArgument, "grid needs a finite start and a positive step");
  }
  if (count < 2) throw Error(Errc::InvalidArgument, "grid needs at least two samples");
  if (!std::isfinite(back())) throw Error(Errc::InvalidArgument, "grid end is not finite");
}

SampledSignal::SampledSignal(Grid grid, CVector samples)
    : grid_(std::move(grid)), samples_(std::move(samples)) {
  if (samples_.size() != static_cast<Index>(grid_.count())) {
    throw Error(Errc::DimensionMismatch, "sample count does not match the grid");
  }
  if (!samples_.allFinite()) throw Error(Errc::InvalidArgument, "signal has non-finite samples");
}

HermiteState::HermiteState(unsigned n_in, double T_in, double Omega_in, double b_dev_in)
    : n(n_in), T(T_in), Omega(Omega_in), b_dev(b_dev_in) {
  if (!std::isfinite(T) || !std::isfinite(Omega) || !std::isfinite(b_dev) || !(b_dev > 0.0)) {
    throw Error(Errc::InvalidArgument, "Hermite state needs finite T, Omega and b_dev > 0");
  }
}

double HermiteState::time_sigma() const noexcept {
  return std::sqrt((2.0 * n + 1.0) * A());
}

Complex lct_kernel(const LCT1D& l, double t_prime, double t) {
  require_kernel(l);
  const double phase = (t_prime * t - 0.5 * (l.a * t_prime * t_prime + l.d * t * t)) / l.c;
  return kernel_constant(l.c) * std::polar(1.0, phase);
}

SampledSignal apply_lct(const LCT1D& l, const SampledSignal& s, const Grid& out_grid) {
  require_kernel(l);
  const Grid& in = s.grid();
  const std::size_t n = in.count();
  const std::size_t m = out_grid.count();

  std::vector<Complex> weighted(n);
  std::vector<double> t(n);
  for (std::size_t j = 0; j < n; ++j) {
    t[j] = in.at(j);
    const double w = (j == 0 || j + 1 == n) ? 0.5 : 1.0;
    weighted[j] = s.samples()(static_cast<Index>(j)) * (w * in.dt()) *
                  std::polar(1.0, -0.5 * l.d * t[j] * t[j] / l.c);
  }

  const Complex C = kernel_constant(l.c);
  CVector out(static_cast<Index>(m));
  for (std::size_t k = 0; k < m; ++k) {
    const double tp = out_grid.at(k);
    const double scale = tp / l.c;
    Complex acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) acc += weighted[j] * std::polar(1.0, scale * t[j]);
    out(static_cast<Index>(k)) = C * std::polar(1.0, -0.5 * l.a * tp * tp / l.c) * acc;
  }
  return SampledSignal(out_grid, std::move(out));
}

SampledSignal apply_lct(const LCT1D& l, const SampledSignal& s) {
  return apply_lct(l, s, s.grid());
}

SampledSignal hermite_state(const HermiteState& h, const Grid& grid) {
  const double half_width = kGridSigmas * h.time_sigma();
  if (grid.t0() > h.T - half_width || grid.back() < h.T + half_width) {
    throw Error(Errc::GridTooNarrow, "grid must cover T +- 4 standard deviations of the state");
  }
  const double B = h.B();
  const double root = std::sqrt(2.0 * B);
  const double norm = std::pow(2.0 * B / kPi, 0.25);

  CVector out(static_cast<Index>(grid.count()));
  for (std::size_t k = 0; k < grid.count(); ++k) {
    const double t = grid.at(k);
    const double xi = root * (t - h.T);
    // h_n = H_n / sqrt(2^n n!)
    double prev = 0.0;
    double cur = 1.0;
    for (unsigned j = 0; j < h.n; ++j) {
      const double next = std::sqrt(2.0 / (j + 1.0)) * xi * cur - std::sqrt(j / (j + 1.0)) * prev;
      prev = cur;
      cur = next;
    }
    const double envelope = norm * cur * std::exp(-0.5 * xi * xi);
    out(static_cast<Index>(k)) = envelope * std::polar(1.0, -h.Omega * t);
  }
  return SampledSignal(grid, std::move(out));
}

Grid dual_grid(const Grid& g) {
  const auto n = static_cast<double>(g.count());
  const double dw = 2.0 * kPi / (n * g.dt());
  const auto half = static_cast<double>(g.count() / 2);
  return Grid(-half * dw, dw, g.count());
}

SampledSignal dft_oracle(const SampledSignal& s) {
  const Grid& g = s.grid();
  const Grid w = dual_grid(g);
  const std::size_t n = g.count();
  const std::size_t half = n / 2;

  // exp(-i w_k t_j) = exp(-i w_k t0) exp(-2 pi i (k - half) j / n); the
  // second factor is read from an exact table indexed modulo n.
  std::vector<Complex> roots(n);
  for (std::size_t r = 0; r < n; ++r) {
    roots[r] = std::polar(1.0, -2.0 * kPi * static_cast<double>(r) / static_cast<double>(n));
  }
  const double pref = g.dt() / std::sqrt(2.0 * kPi);
  CVector out(static_cast<Index>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t shift = (k + n - half) % n;
    Complex acc(0.0, 0.0);
    std::size_t idx = 0;
    for (std::size_t j = 0; j < n; ++j) {
      acc += s.samples()(static_cast<Index>(j)) * roots[idx];
      idx += shift;
      if (idx >= n) idx -= n;
    }
    out(static_cast<Index>(k)) = pref * std::polar(1.0, -w.at(k) * g.t0()) * acc;
  }
  return SampledSignal(w, std::move(out));
}

Moments signal_moments(const SampledSignal& s) {
  const Grid& g = s.grid();
  const CVector& psi = s.samples();
  const double mass = psi.squaredNorm() * g.dt();
  if (!(mass > 0.0)) throw Error(Errc::ZeroSignal, "signal has zero norm");

  double t1 = 0.0;
  for (std::size_t k = 0; k < g.count(); ++k) t1 += g.at(k) * std::norm(psi(static_cast<Index>(k)));
  const double T = t1 * g.dt() / mass;
  double t2 = 0.0;
  for (std::size_t k = 0; k < g.count(); ++k) {
    const double u = g.at(k) - T;
    t2 += u * u * std::norm(psi(static_cast<Index>(k)));
  }
  const double A = t2 * g.dt() / mass;

  const SampledSignal spec = dft_oracle(SampledSignal(g, psi.conjugate()));
  const Grid& w = spec.grid();
  const CVector& phi = spec.samples();
  const double wmass = phi.squaredNorm() * w.dt();
  double w1 = 0.0;
  for (std::size_t k = 0; k < w.count(); ++k) w1 += w.at(k) * std::norm(phi(static_cast<Index>(k)));
  const double Omega = w1 * w.dt() / wmass;
  double w2 = 0.0;
  for (std::size_t k = 0; k < w.count(); ++k) {
    const double u = w.at(k) - Omega;
    w2 += u * u * std::norm(phi(static_cast<Index>(k)));
  }
  return Moments{T, Omega, A, w2 * w.dt() / wmass};
}

double l2_norm(const SampledSignal& s) {
  return std::sqrt(s.samples().squaredNorm() * s.grid().dt());
}

double relative_l2_error(const CVector& actual, const CVector& expected) {
  if (actual.size() != expected.size()) {
    throw Error(Errc::DimensionMismatch, "signals have different lengths");
  }
  const double denom = expected.norm();
  if (!(denom > 0.0)) throw Error(Errc::ZeroSignal, "reference signal has zero norm");
  return (actual - expected).norm() / denom;
}

double phase_aligned_relative_error(const CVector& actual, const CVector& expected) {
  if (actual.size() != expected.size()) {
    throw Error(Errc::DimensionMismatch, "signals have different lengths");
  }
  const Complex overlap = expected.dot(actual);  // sum conj(expected) * actual
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0, 0.0);
  return relative_l2_error(actual, phase * expected);
}

}  // namespace lct
