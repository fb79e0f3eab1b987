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

#include <cstdint>

#include "lct/metric.hpp"
#include "lct/symplectic.hpp"
#include "lct/types.hpp"

namespace lct {

/// Residuals of the sp(2N+, 2N-) constraints on the four generator blocks.
struct GeneratorResiduals {
  double theta;   // max |theta^T - eta theta eta|
  double phi;     // max |phi^T - eta phi eta|
  double mu;      // max |mu^T - eta mu eta|
  double lambda;  // max |lambda^T + eta lambda eta|
  double trace;   // |Tr lambda|

  double max() const noexcept;
};

/// Throws DimensionMismatch unless all four blocks are N x N.
GeneratorResiduals generator_residual(const Metric& metric, const Matrix& lambda,
                                      const Matrix& mu, const Matrix& phi, const Matrix& theta);

/// Lie-algebra element
///
///     X = [[lambda + mu, phi + theta],
///          [phi - theta, lambda - mu]]
///
/// in the canonical layout, with the symmetry constraints checked on creation.
class Generator {
 public:
  /// Throws InvalidGenerator when any residual exceeds tol.
  static Generator make(const Metric& metric, Matrix lambda, Matrix mu, Matrix phi, Matrix theta,
                        double tol = kDefaultTol);

  static Generator zero(const Metric& metric);

  const Metric& metric() const noexcept { return metric_; }
  const Matrix& lambda() const noexcept { return lambda_; }
  const Matrix& mu() const noexcept { return mu_; }
  const Matrix& phi() const noexcept { return phi_; }
  const Matrix& theta() const noexcept { return theta_; }

  Matrix assembled() const;

 private:
  Generator(Metric metric, Matrix lambda, Matrix mu, Matrix phi, Matrix theta);

  friend Generator project_to_algebra(const Metric&, const Matrix&, const Matrix&,
                                      const Matrix&, const Matrix&);

  Metric metric_;
  Matrix lambda_, mu_, phi_, theta_;
};

/// Orthogonal projection of arbitrary blocks onto the constraint subspace:
/// X -> (X + eta X^T eta)/2 for theta, phi, mu, X -> (X - eta X^T eta)/2 for
/// lambda, then the trace of lambda is removed. Idempotent, bit for bit.
Generator project_to_algebra(const Metric& metric, const Matrix& lambda, const Matrix& mu,
                             const Matrix& phi, const Matrix& theta);

/// Scaling and squaring with a truncated Taylor series.
Matrix matrix_exponential(const Matrix& x);

/// exp of the assembled generator, in the (Pi Xi; Theta Lambda) layout.
/// Feed it to BlockLCT::from_canonical for a transform.
Matrix exp_generator(const Generator& g);

/// max |M diag(eta, eta) M^T - diag(eta, eta)|.
double isodispersion_residual(const Matrix& m, const Metric& metric);
double isodispersion_residual(const BlockLCT& lct);

/// In Sp(2N+, 2N-) and SO(2N+, 2N-) at once.
bool is_ilct(const BlockLCT& lct, double tol = kDefaultTol);

/// phi = mu = 0 characterizes the isodispersion subalgebra.
bool is_ilct_generator(const Generator& g, double tol = kDefaultTol) noexcept;

enum class GeneratorFamily {
  Full,           // all four blocks drawn
  Isodispersion,  // phi = mu = 0
};

/// Blocks drawn uniformly in [-scale, scale] from a seeded mt19937_64, then
/// projected. Throws InvalidArgument for scale < 0.
Generator random_generator(const Signature& sig, std::uint64_t seed, double scale,
                           GeneratorFamily family = GeneratorFamily::Full);

BlockLCT random_lct(const Signature& sig, std::uint64_t seed, double scale,
                    GeneratorFamily family = GeneratorFamily::Full);

}  // namespace lct
