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
#include "lct/types.hpp"

namespace lct {

/// Classical phase-space point (p, x); both vectors have the metric dimension.
struct PhaseVector {
  Vector p;
  Vector x;

  PhaseVector(Vector p_in, Vector x_in);
};

/// A linear canonical transform in block form
///
///     p' = a p + b x
///     x' = c p + d x
///
/// with the blocks read as ordinary matrix-vector products. Two 2N x 2N views
/// are available: the action matrix [[a, b], [c, d]] acting on the stacked
/// (p, x), and the canonical matrix M = [[a^T, c^T], [b^T, d^T]] which is the
/// one satisfying M^T Omega M = Omega. Instances always passed that check.
class BlockLCT {
 public:
  static BlockLCT identity(const Metric& metric);

  /// Build from the action matrix [[a, b], [c, d]]; validated against tol.
  static BlockLCT from_action(const Matrix& s, const Metric& metric, double tol = kDefaultTol);

  /// Build from the canonical layout (e.g. an exponentiated generator):
  /// a = M11^T, c = M12^T, b = M21^T, d = M22^T. Validated against tol.
  static BlockLCT from_canonical(const Matrix& m, const Metric& metric,
                                 double tol = kDefaultTol);

  const Metric& metric() const noexcept { return metric_; }
  std::size_t dim() const noexcept { return metric_.dim(); }

  const Matrix& a() const noexcept { return a_; }
  const Matrix& b() const noexcept { return b_; }
  const Matrix& c() const noexcept { return c_; }
  const Matrix& d() const noexcept { return d_; }

  Matrix action_matrix() const;
  Matrix canonical_matrix() const;

 private:
  BlockLCT(Metric metric, Matrix a, Matrix b, Matrix c, Matrix d);

  friend BlockLCT make_lct(const Matrix&, const Matrix&, const Matrix&, const Matrix&,
                           const Metric&, double);
  friend BlockLCT inverse(const BlockLCT&);

  Metric metric_;
  Matrix a_, b_, c_, d_;
};

/// A BlockLCT followed by the translation (p, x) -> (p + K, x + Y).
class InhomogeneousLCT {
 public:
  InhomogeneousLCT(BlockLCT lct, Vector K, Vector Y);

  const BlockLCT& lct() const noexcept { return lct_; }
  const Vector& K() const noexcept { return K_; }
  const Vector& Y() const noexcept { return Y_; }

 private:
  BlockLCT lct_;
  Vector K_;
  Vector Y_;
};

/// Validating constructor. Blocks are stored unmodified.
/// Throws DimensionMismatch or NotSymplectic (with the residual).
BlockLCT make_lct(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d,
                  const Metric& metric, double tol = kDefaultTol);

/// max |M^T Omega M - Omega| for a 2N x 2N matrix in canonical layout.
double symplectic_residual(const Matrix& m, const Metric& metric);
double symplectic_residual(const BlockLCT& lct);

/// `first` then `second`: action matrices multiply as S_second * S_first.
/// Revalidated at 10 * tol. Throws MetricMismatch.
BlockLCT compose(const BlockLCT& second, const BlockLCT& first, double tol = kDefaultTol);

/// Exact group inverse, -Omega S^T Omega in action form. Never throws.
BlockLCT inverse(const BlockLCT& lct);

PhaseVector apply(const BlockLCT& lct, const PhaseVector& v);
PhaseVector apply(const InhomogeneousLCT& lct, const PhaseVector& v);

/// max |a^T eta a - eta|.
double pseudo_orthogonal_residual(const Matrix& a, const Metric& metric);

/// Lorentz-type embedding: blocks (a, 0, 0, a) for a in SO(N+, N-).
/// Throws NotPseudoOrthogonal when a^T eta a != eta or det a != +1.
BlockLCT embed_pseudo_orthogonal(const Matrix& a, const Metric& metric,
                                 double tol = kDefaultTol);

/// Boost of the given rapidity mixing a +1 axis with a -1 axis.
/// Throws AxisSignatureMismatch.
Matrix boost_matrix(const Metric& metric, std::size_t time_axis, std::size_t space_axis,
                    double rapidity);

/// Fourier-like embedding: blocks (0, b, -b, 0), i.e. p' = b x, x' = -b p.
/// Requires b^T eta b = eta; throws ConstraintViolated.
BlockLCT embed_fourier_like(const Matrix& b, const Metric& metric, double tol = kDefaultTol);

/// Blocks (a, b, -b, a) subject to a^T eta a + b^T eta b = eta and
/// a^T eta b - b^T eta a = 0. Throws ConstraintViolated naming the failing one.
BlockLCT make_pseudo_unitary_lct(const Matrix& a, const Matrix& b, const Metric& metric,
                                 double tol = kDefaultTol);

}  // namespace lct
