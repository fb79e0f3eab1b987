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

#include "lct/metric.hpp"
#include "lct/symplectic.hpp"
#include "lct/types.hpp"

namespace lct {

/// Means and dispersion data of a Hermite-Gaussian state.
///
/// The windows define the reduced operators p_r = sqrt2 a_win (p - P) and
/// x_r = sqrt2 b_win (x - X). The dispersion matrices are derived:
/// A = a_win^T eta a_win, B = b_win^T eta b_win.
class DispersionSpec {
 public:
  /// Checks shapes and finiteness only. Window validity is checked where it
  /// matters (reduced_matrix) and can be measured with
  /// dispersion_product_residual.
  static DispersionSpec from_windows(const Metric& metric, Vector P, Vector X, Matrix a_win,
                                     Matrix b_win);

  /// Recovers windows with w^T eta w = A (and likewise for B). When the
  /// matrix commutes with eta and eta A is positive definite, the window is
  /// the symmetric root sqrt(eta A); otherwise an eigenvector factor that
  /// matches the metric inertia. Throws InvalidDispersion when no real
  /// window exists.
  static DispersionSpec from_dispersion(const Metric& metric, Vector P, Vector X,
                                        const Matrix& A, const Matrix& B,
                                        double tol = kDefaultTol);

  const Metric& metric() const noexcept { return metric_; }
  std::size_t dim() const noexcept { return metric_.dim(); }
  const Vector& P() const noexcept { return P_; }
  const Vector& X() const noexcept { return X_; }
  const Matrix& a_win() const noexcept { return a_win_; }
  const Matrix& b_win() const noexcept { return b_win_; }
  const Matrix& A() const noexcept { return A_; }
  const Matrix& B() const noexcept { return B_; }

 private:
  DispersionSpec(Metric metric, Vector P, Vector X, Matrix a_win, Matrix b_win);

  Metric metric_;
  Vector P_, X_;
  Matrix a_win_, b_win_;
  Matrix A_, B_;
};

/// Window factor w with w^T eta w = d. Throws InvalidDispersion.
Matrix window_from_dispersion(const Matrix& d, const Metric& metric, double tol = kDefaultTol);

/// max |a_win b_win - I/2|.
double dispersion_product_residual(const DispersionSpec& d);

/// max |a_win^T - eta a_win eta| and the product residual, whichever is larger.
/// Zero exactly when the reduced operators obey canonical relations.
double window_residual(const DispersionSpec& d);

/// Transformation of the reduced operators,
///
///     p_r' = Pi p_r + Theta x_r
///     x_r' = Xi p_r + Lambda x_r,
///
/// so that Pi = 2 a_win' a b_win, Theta = 2 a_win' b a_win,
/// Xi = 2 b_win' c b_win, Lambda = 2 b_win' d a_win.
struct ReducedLCT {
  Metric metric;
  Matrix Pi, Xi, Theta, Lambda;

  /// [[Pi, Theta], [Xi, Lambda]].
  Matrix action_matrix() const;
  /// [[Pi^T, Xi^T], [Theta^T, Lambda^T]], the layout checked by
  /// symplectic_residual. In 1-D this is [[Pi, Xi], [Theta, Lambda]].
  Matrix canonical_matrix() const;
};

double symplectic_residual(const ReducedLCT& r);

/// Throws MetricMismatch, or InvalidDispersion when either spec has
/// window_residual above tol.
ReducedLCT reduced_matrix(const BlockLCT& lct, const DispersionSpec& din,
                          const DispersionSpec& dout, double tol = kDefaultTol);

/// Uses dout = ilct_transform_dispersion(lct, din). Throws NotIsodispersion
/// for transforms outside the isodispersion group.
ReducedLCT reduced_matrix(const BlockLCT& lct, const DispersionSpec& din,
                          double tol = kDefaultTol);

/// Translations shift the means only, so they never enter the reduced matrix.
ReducedLCT reduced_matrix(const InhomogeneousLCT& lct, const DispersionSpec& din,
                          const DispersionSpec& dout, double tol = kDefaultTol);

/// B' = a B a^T + b A b^T, A' = c B c^T + d A d^T; the means are mapped by
/// apply(). Throws NotIsodispersion when isodispersion_residual exceeds tol.
DispersionSpec ilct_transform_dispersion(const BlockLCT& lct, const DispersionSpec& din,
                                         double tol = kDefaultTol);
DispersionSpec ilct_transform_dispersion(const InhomogeneousLCT& lct,
                                         const DispersionSpec& din, double tol = kDefaultTol);

}  // namespace lct
