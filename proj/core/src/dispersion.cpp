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

#include "lct/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "lct/error.hpp"
#include "lct/liealg.hpp"

namespace lct {

namespace {

using Index = Eigen::Index;

void require_square(const Matrix& m, std::size_t n, const char* name) {
  if (m.rows() != static_cast<Index>(n) || m.cols() != static_cast<Index>(n)) {
    throw Error(Errc::DimensionMismatch, std::string(name) + " must be N x N");
  }
  if (!m.allFinite()) throw Error(Errc::InvalidArgument, std::string(name) + " is not finite");
}

void require_vector(const Vector& v, std::size_t n, const char* name) {
  if (v.size() != static_cast<Index>(n)) {
    throw Error(Errc::DimensionMismatch, std::string(name) + " must have length N");
  }
  if (!v.allFinite()) throw Error(Errc::InvalidArgument, std::string(name) + " is not finite");
}

Matrix half_identity(Index n) { return 0.5 * Matrix::Identity(n, n); }

}  // namespace

DispersionSpec::DispersionSpec(Metric metric, Vector P, Vector X, Matrix a_win, Matrix b_win)
    : metric_(std::move(metric)),
      P_(std::move(P)),
      X_(std::move(X)),
      a_win_(std::move(a_win)),
      b_win_(std::move(b_win)) {
  const Matrix eta = metric_.matrix();
  A_ = a_win_.transpose() * eta * a_win_;
  B_ = b_win_.transpose() * eta * b_win_;
}

DispersionSpec DispersionSpec::from_windows(const Metric& metric, Vector P, Vector X,
                                            Matrix a_win, Matrix b_win) {
  const std::size_t n = metric.dim();
  require_vector(P, n, "P");
  require_vector(X, n, "X");
  require_square(a_win, n, "a_win");
  require_square(b_win, n, "b_win");
  return DispersionSpec(metric, std::move(P), std::move(X), std::move(a_win), std::move(b_win));
}

DispersionSpec DispersionSpec::from_dispersion(const Metric& metric, Vector P, Vector X,
                                               const Matrix& A, const Matrix& B, double tol) {
  const std::size_t n = metric.dim();
  require_vector(P, n, "P");
  require_vector(X, n, "X");
  require_square(A, n, "A");
  require_square(B, n, "B");
  return DispersionSpec(metric, std::move(P), std::move(X),
                        window_from_dispersion(A, metric, tol),
                        window_from_dispersion(B, metric, tol));
}

Matrix window_from_dispersion(const Matrix& d, const Metric& metric, double tol) {
  require_square(d, metric.dim(), "dispersion matrix");
  const double scaled_tol = tol * std::max(1.0, max_abs(d));
  const double asym = max_abs(d - d.transpose());
  if (!(asym <= scaled_tol)) {
    throw Error(Errc::InvalidDispersion, "dispersion matrix is not symmetric", asym);
  }
  const Matrix sym = 0.5 * (d + d.transpose());
  const Vector& eta = metric.diagonal();

  // eta d symmetric positive definite and commuting with eta: symmetric root.
  const Matrix ed = eta.asDiagonal() * sym;
  if (max_abs(ed - metric.conjugate(ed)) <= scaled_tol) {
    const Matrix ed_sym = 0.5 * (ed + ed.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> es(ed_sym);
    if (es.eigenvalues().minCoeff() > scaled_tol) return es.operatorSqrt();
  }

  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  const Vector& lam = es.eigenvalues();
  const Index n = lam.size();
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index i, Index j) { return lam(i) > lam(j); });

  Matrix w(n, n);
  for (Index r = 0; r < n; ++r) {
    const double l = lam(order[static_cast<std::size_t>(r)]);
    if (!(std::abs(l) > scaled_tol) || (l > 0.0) != (eta(r) > 0.0)) {
      throw Error(Errc::InvalidDispersion,
                  "dispersion matrix inertia does not match the metric signature");
    }
    const Index k = order[static_cast<std::size_t>(r)];
    w.row(r) = std::sqrt(std::abs(l)) * es.eigenvectors().col(k).transpose();
  }
  return w;
}

double dispersion_product_residual(const DispersionSpec& d) {
  return max_abs(d.a_win() * d.b_win() - half_identity(d.a_win().rows()));
}

double window_residual(const DispersionSpec& d) {
  const double sym = max_abs(d.a_win().transpose() - d.metric().conjugate(d.a_win()));
  return std::max(sym, dispersion_product_residual(d));
}

Matrix ReducedLCT::action_matrix() const {
  const Index n = Pi.rows();
  Matrix m(2 * n, 2 * n);
  m << Pi, Theta, Xi, Lambda;
  return m;
}

Matrix ReducedLCT::canonical_matrix() const {
  const Index n = Pi.rows();
  Matrix m(2 * n, 2 * n);
  m << Pi.transpose(), Xi.transpose(), Theta.transpose(), Lambda.transpose();
  return m;
}

double symplectic_residual(const ReducedLCT& r) {
  return symplectic_residual(r.canonical_matrix(), r.metric);
}

ReducedLCT reduced_matrix(const BlockLCT& lct, const DispersionSpec& din,
                          const DispersionSpec& dout, double tol) {
  if (!(lct.metric() == din.metric()) || !(lct.metric() == dout.metric())) {
    throw Error(Errc::MetricMismatch, "transform and dispersion specs use different metrics");
  }
  const double rin = window_residual(din);
  if (!(rin <= tol)) {
    throw Error(Errc::InvalidDispersion, "input windows do not define canonical reduced operators",
                rin);
  }
  const double rout = window_residual(dout);
  if (!(rout <= tol)) {
    throw Error(Errc::InvalidDispersion,
                "output windows do not define canonical reduced operators", rout);
  }
  return ReducedLCT{
      lct.metric(),
      2.0 * dout.a_win() * lct.a() * din.b_win(),
      2.0 * dout.b_win() * lct.c() * din.b_win(),
      2.0 * dout.a_win() * lct.b() * din.a_win(),
      2.0 * dout.b_win() * lct.d() * din.a_win(),
  };
}

ReducedLCT reduced_matrix(const BlockLCT& lct, const DispersionSpec& din, double tol) {
  return reduced_matrix(lct, din, ilct_transform_dispersion(lct, din, tol), tol);
}

ReducedLCT reduced_matrix(const InhomogeneousLCT& lct, const DispersionSpec& din,
                          const DispersionSpec& dout, double tol) {
  return reduced_matrix(lct.lct(), din, dout, tol);
}

DispersionSpec ilct_transform_dispersion(const BlockLCT& lct, const DispersionSpec& din,
                                         double tol) {
  if (!(lct.metric() == din.metric())) {
    throw Error(Errc::MetricMismatch, "transform and dispersion spec use different metrics");
  }
  const double r = isodispersion_residual(lct);
  if (!(r <= tol)) {
    throw Error(Errc::NotIsodispersion, "transform does not preserve the dispersion form", r);
  }
  const Matrix& a = lct.a();
  const Matrix& b = lct.b();
  const Matrix& c = lct.c();
  const Matrix& d = lct.d();
  const Matrix B = a * din.B() * a.transpose() + b * din.A() * b.transpose();
  const Matrix A = c * din.B() * c.transpose() + d * din.A() * d.transpose();
  PhaseVector means = apply(lct, PhaseVector(din.P(), din.X()));
  return DispersionSpec::from_dispersion(lct.metric(), std::move(means.p), std::move(means.x), A,
                                         B, tol);
}

DispersionSpec ilct_transform_dispersion(const InhomogeneousLCT& lct, const DispersionSpec& din,
                                         double tol) {
  const DispersionSpec out = ilct_transform_dispersion(lct.lct(), din, tol);
  return DispersionSpec::from_windows(out.metric(), out.P() + lct.K(), out.X() + lct.Y(),
                                      out.a_win(), out.b_win());
}

}  // namespace lct
