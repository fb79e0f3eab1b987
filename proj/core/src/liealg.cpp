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

#include "lct/liealg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "lct/error.hpp"

namespace lct {

namespace {

using Index = Eigen::Index;

constexpr double kTaylorTermThreshold = 1e-18;
constexpr double kScaledNormBound = 0.5;
constexpr int kMaxTaylorTerms = 64;

void require_block(const Matrix& m, std::size_t n, const char* name) {
  if (m.rows() != static_cast<Index>(n) || m.cols() != static_cast<Index>(n)) {
    throw Error(Errc::DimensionMismatch, std::string("generator block ") + name + " is not N x N");
  }
}

Matrix symmetric_part(const Metric& metric, const Matrix& m) {
  return 0.5 * (m + metric.conjugate(m.transpose()));
}

Matrix antisymmetric_part(const Metric& metric, const Matrix& m) {
  return 0.5 * (m - metric.conjugate(m.transpose()));
}

Matrix draw(std::mt19937_64& rng, std::uniform_real_distribution<double>& dist, Index n) {
  Matrix m(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) m(r, c) = dist(rng);
  }
  return m;
}

}  // namespace

double GeneratorResiduals::max() const noexcept {
  return std::max({theta, phi, mu, lambda, trace});
}

GeneratorResiduals generator_residual(const Metric& metric, const Matrix& lambda,
                                      const Matrix& mu, const Matrix& phi, const Matrix& theta) {
  const std::size_t n = metric.dim();
  require_block(lambda, n, "lambda");
  require_block(mu, n, "mu");
  require_block(phi, n, "phi");
  require_block(theta, n, "theta");
  return GeneratorResiduals{
      max_abs(theta.transpose() - metric.conjugate(theta)),
      max_abs(phi.transpose() - metric.conjugate(phi)),
      max_abs(mu.transpose() - metric.conjugate(mu)),
      max_abs(lambda.transpose() + metric.conjugate(lambda)),
      std::abs(lambda.trace()),
  };
}

Generator::Generator(Metric metric, Matrix lambda, Matrix mu, Matrix phi, Matrix theta)
    : metric_(std::move(metric)),
      lambda_(std::move(lambda)),
      mu_(std::move(mu)),
      phi_(std::move(phi)),
      theta_(std::move(theta)) {}

Generator Generator::make(const Metric& metric, Matrix lambda, Matrix mu, Matrix phi,
                          Matrix theta, double tol) {
  const GeneratorResiduals r = generator_residual(metric, lambda, mu, phi, theta);
  const double worst = r.max();
  if (!(worst <= tol)) {
    throw Error(Errc::InvalidGenerator, "blocks are outside sp(2N+, 2N-)", worst);
  }
  return Generator(metric, std::move(lambda), std::move(mu), std::move(phi), std::move(theta));
}

Generator Generator::zero(const Metric& metric) {
  const auto n = static_cast<Index>(metric.dim());
  const Matrix z = Matrix::Zero(n, n);
  return Generator(metric, z, z, z, z);
}

Matrix Generator::assembled() const {
  const Index n = lambda_.rows();
  Matrix x(2 * n, 2 * n);
  x << lambda_ + mu_, phi_ + theta_, phi_ - theta_, lambda_ - mu_;
  return x;
}

Generator project_to_algebra(const Metric& metric, const Matrix& lambda, const Matrix& mu,
                             const Matrix& phi, const Matrix& theta) {
  const std::size_t n = metric.dim();
  require_block(lambda, n, "lambda");
  require_block(mu, n, "mu");
  require_block(phi, n, "phi");
  require_block(theta, n, "theta");
  Matrix l = antisymmetric_part(metric, lambda);
  const double tr = l.trace();
  if (tr != 0.0) l -= (tr / static_cast<double>(n)) * Matrix::Identity(l.rows(), l.cols());
  return Generator(metric, std::move(l), symmetric_part(metric, mu), symmetric_part(metric, phi),
                   symmetric_part(metric, theta));
}

Matrix matrix_exponential(const Matrix& x) {
  if (x.rows() != x.cols()) {
    throw Error(Errc::DimensionMismatch, "matrix exponential needs a square matrix");
  }
  const double norm = x.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > kScaledNormBound) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kScaledNormBound)));
  }
  const Matrix y = x / std::ldexp(1.0, squarings);

  const Index n = x.rows();
  Matrix sum = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (int k = 1; k <= kMaxTaylorTerms; ++k) {
    term = term * y / static_cast<double>(k);
    sum += term;
    if (max_abs(term) <= kTaylorTermThreshold) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

Matrix exp_generator(const Generator& g) { return matrix_exponential(g.assembled()); }

double isodispersion_residual(const Matrix& m, const Metric& metric) {
  const auto n2 = static_cast<Index>(2 * metric.dim());
  if (m.rows() != n2 || m.cols() != n2) {
    throw Error(Errc::DimensionMismatch, "matrix must be 2N x 2N for the metric");
  }
  const Matrix d = doubled_metric(metric);
  return max_abs(m * d * m.transpose() - d);
}

double isodispersion_residual(const BlockLCT& lct) {
  return isodispersion_residual(lct.canonical_matrix(), lct.metric());
}

bool is_ilct(const BlockLCT& lct, double tol) {
  return isodispersion_residual(lct) <= tol && symplectic_residual(lct) <= tol;
}

bool is_ilct_generator(const Generator& g, double tol) noexcept {
  return max_abs(g.phi()) <= tol && max_abs(g.mu()) <= tol;
}

Generator random_generator(const Signature& sig, std::uint64_t seed, double scale,
                           GeneratorFamily family) {
  if (!(scale >= 0.0) || !std::isfinite(scale)) {
    throw Error(Errc::InvalidArgument, "scale must be a finite nonnegative number");
  }
  const Metric metric(sig);
  if (scale == 0.0) return Generator::zero(metric);

  const auto n = static_cast<Index>(sig.dim());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-scale, scale);
  const Matrix lambda = draw(rng, dist, n);
  Matrix mu = draw(rng, dist, n);
  Matrix phi = draw(rng, dist, n);
  const Matrix theta = draw(rng, dist, n);
  if (family == GeneratorFamily::Isodispersion) {
    mu.setZero();
    phi.setZero();
  }
  return project_to_algebra(metric, lambda, mu, phi, theta);
}

BlockLCT random_lct(const Signature& sig, std::uint64_t seed, double scale,
                    GeneratorFamily family) {
  const Generator g = random_generator(sig, seed, scale, family);
  return BlockLCT::from_canonical(exp_generator(g), g.metric());
}

}  // namespace lct
