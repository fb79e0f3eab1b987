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

#include "lct/symplectic.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "lct/error.hpp"

namespace lct {

namespace {

using Index = Eigen::Index;

void require_square(const Matrix& m, std::size_t n, const char* name) {
  if (m.rows() != static_cast<Index>(n) || m.cols() != static_cast<Index>(n)) {
    std::ostringstream os;
    os << "block " << name << " is " << m.rows() << "x" << m.cols() << ", expected " << n << "x"
       << n;
    throw Error(Errc::DimensionMismatch, os.str());
  }
}

void require_length(const Vector& v, std::size_t n, const char* name) {
  if (v.size() != static_cast<Index>(n)) {
    std::ostringstream os;
    os << name << " has length " << v.size() << ", expected " << n;
    throw Error(Errc::DimensionMismatch, os.str());
  }
}

Matrix stack(const Matrix& tl, const Matrix& tr, const Matrix& bl, const Matrix& br) {
  const Index n = tl.rows();
  Matrix m(2 * n, 2 * n);
  m << tl, tr, bl, br;
  return m;
}

}  // namespace

PhaseVector::PhaseVector(Vector p_in, Vector x_in) : p(std::move(p_in)), x(std::move(x_in)) {
  if (p.size() != x.size()) {
    throw Error(Errc::DimensionMismatch, "p and x lengths differ");
  }
  if (!p.allFinite() || !x.allFinite()) {
    throw Error(Errc::InvalidArgument, "phase vector has non-finite entries");
  }
}

BlockLCT::BlockLCT(Metric metric, Matrix a, Matrix b, Matrix c, Matrix d)
    : metric_(std::move(metric)),
      a_(std::move(a)),
      b_(std::move(b)),
      c_(std::move(c)),
      d_(std::move(d)) {}

BlockLCT BlockLCT::identity(const Metric& metric) {
  const auto n = static_cast<Index>(metric.dim());
  return make_lct(Matrix::Identity(n, n), Matrix::Zero(n, n), Matrix::Zero(n, n),
                  Matrix::Identity(n, n), metric);
}

BlockLCT BlockLCT::from_action(const Matrix& s, const Metric& metric, double tol) {
  const auto n = static_cast<Index>(metric.dim());
  if (s.rows() != 2 * n || s.cols() != 2 * n) {
    throw Error(Errc::DimensionMismatch, "action matrix must be 2N x 2N");
  }
  return make_lct(s.topLeftCorner(n, n), s.topRightCorner(n, n), s.bottomLeftCorner(n, n),
                  s.bottomRightCorner(n, n), metric, tol);
}

BlockLCT BlockLCT::from_canonical(const Matrix& m, const Metric& metric, double tol) {
  const auto n = static_cast<Index>(metric.dim());
  if (m.rows() != 2 * n || m.cols() != 2 * n) {
    throw Error(Errc::DimensionMismatch, "canonical matrix must be 2N x 2N");
  }
  return make_lct(m.topLeftCorner(n, n).transpose(), m.bottomLeftCorner(n, n).transpose(),
                  m.topRightCorner(n, n).transpose(), m.bottomRightCorner(n, n).transpose(),
                  metric, tol);
}

Matrix BlockLCT::action_matrix() const { return stack(a_, b_, c_, d_); }

Matrix BlockLCT::canonical_matrix() const {
  return stack(a_.transpose(), c_.transpose(), b_.transpose(), d_.transpose());
}

InhomogeneousLCT::InhomogeneousLCT(BlockLCT lct, Vector K, Vector Y)
    : lct_(std::move(lct)), K_(std::move(K)), Y_(std::move(Y)) {
  require_length(K_, lct_.dim(), "K");
  require_length(Y_, lct_.dim(), "Y");
  if (!K_.allFinite() || !Y_.allFinite()) {
    throw Error(Errc::InvalidArgument, "translation has non-finite entries");
  }
}

double symplectic_residual(const Matrix& m, const Metric& metric) {
  const auto n2 = static_cast<Index>(2 * metric.dim());
  if (m.rows() != n2 || m.cols() != n2) {
    throw Error(Errc::DimensionMismatch, "matrix must be 2N x 2N for the metric");
  }
  const Matrix omega = omega_matrix(metric);
  return max_abs(m.transpose() * omega * m - omega);
}

double symplectic_residual(const BlockLCT& lct) {
  return symplectic_residual(lct.canonical_matrix(), lct.metric());
}

BlockLCT make_lct(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d,
                  const Metric& metric, double tol) {
  const std::size_t n = metric.dim();
  require_square(a, n, "a");
  require_square(b, n, "b");
  require_square(c, n, "c");
  require_square(d, n, "d");
  BlockLCT lct(metric, a, b, c, d);
  const double r = symplectic_residual(lct);
  if (!(r <= tol)) {
    throw Error(Errc::NotSymplectic, "blocks violate the canonical commutation relations", r);
  }
  return lct;
}

BlockLCT compose(const BlockLCT& second, const BlockLCT& first, double tol) {
  if (!(second.metric() == first.metric())) {
    throw Error(Errc::MetricMismatch, "cannot compose transforms over different signatures");
  }
  return BlockLCT::from_action(second.action_matrix() * first.action_matrix(), first.metric(),
                               10.0 * tol);
}

BlockLCT inverse(const BlockLCT& lct) {
  const Metric& m = lct.metric();
  // -Omega S^T Omega, written per block.
  return BlockLCT(m, m.conjugate(lct.d().transpose()), -m.conjugate(lct.b().transpose()),
                  -m.conjugate(lct.c().transpose()), m.conjugate(lct.a().transpose()));
}

PhaseVector apply(const BlockLCT& lct, const PhaseVector& v) {
  require_length(v.p, lct.dim(), "p");
  return PhaseVector(lct.a() * v.p + lct.b() * v.x, lct.c() * v.p + lct.d() * v.x);
}

PhaseVector apply(const InhomogeneousLCT& lct, const PhaseVector& v) {
  PhaseVector out = apply(lct.lct(), v);
  out.p += lct.K();
  out.x += lct.Y();
  return out;
}

double pseudo_orthogonal_residual(const Matrix& a, const Metric& metric) {
  require_square(a, metric.dim(), "a");
  const Matrix eta = metric.matrix();
  return max_abs(a.transpose() * eta * a - eta);
}

BlockLCT embed_pseudo_orthogonal(const Matrix& a, const Metric& metric, double tol) {
  const double r = pseudo_orthogonal_residual(a, metric);
  if (!(r <= tol)) {
    throw Error(Errc::NotPseudoOrthogonal, "a^T eta a != eta", r);
  }
  const double det_err = std::abs(a.determinant() - 1.0);
  if (!(det_err <= tol)) {
    throw Error(Errc::NotPseudoOrthogonal, "det(a) != +1", det_err);
  }
  const auto n = static_cast<Index>(metric.dim());
  return make_lct(a, Matrix::Zero(n, n), Matrix::Zero(n, n), a, metric, 10.0 * tol);
}

Matrix boost_matrix(const Metric& metric, std::size_t time_axis, std::size_t space_axis,
                    double rapidity) {
  const std::size_t n = metric.dim();
  if (time_axis >= n || space_axis >= n || time_axis == space_axis) {
    throw Error(Errc::AxisSignatureMismatch, "boost axes must be distinct and in range");
  }
  if (metric.entry(time_axis) != 1.0 || metric.entry(space_axis) != -1.0) {
    throw Error(Errc::AxisSignatureMismatch,
                "boost needs a +1 time axis and a -1 space axis");
  }
  Matrix a = Matrix::Identity(static_cast<Index>(n), static_cast<Index>(n));
  const auto t = static_cast<Index>(time_axis);
  const auto s = static_cast<Index>(space_axis);
  const double ch = std::cosh(rapidity);
  const double sh = std::sinh(rapidity);
  a(t, t) = ch;
  a(t, s) = sh;
  a(s, t) = sh;
  a(s, s) = ch;
  return a;
}

BlockLCT embed_fourier_like(const Matrix& b, const Metric& metric, double tol) {
  require_square(b, metric.dim(), "b");
  const Matrix eta = metric.matrix();
  const double r = max_abs(b.transpose() * eta * b - eta);
  if (!(r <= tol)) {
    throw Error(Errc::ConstraintViolated, "b^T eta b != eta", r);
  }
  const auto n = static_cast<Index>(metric.dim());
  return make_lct(Matrix::Zero(n, n), b, -b, Matrix::Zero(n, n), metric, 10.0 * tol);
}

BlockLCT make_pseudo_unitary_lct(const Matrix& a, const Matrix& b, const Metric& metric,
                                 double tol) {
  require_square(a, metric.dim(), "a");
  require_square(b, metric.dim(), "b");
  const Matrix eta = metric.matrix();
  const double r_norm = max_abs(a.transpose() * eta * a + b.transpose() * eta * b - eta);
  if (!(r_norm <= tol)) {
    throw Error(Errc::ConstraintViolated, "a^T eta a + b^T eta b != eta", r_norm);
  }
  const double r_cross = max_abs(a.transpose() * eta * b - b.transpose() * eta * a);
  if (!(r_cross <= tol)) {
    throw Error(Errc::ConstraintViolated, "a^T eta b - b^T eta a != 0", r_cross);
  }
  return make_lct(a, b, -b, a, metric, 10.0 * tol);
}

}  // namespace lct
