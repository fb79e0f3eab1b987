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

#include "lct/metric.hpp"

#include "lct/error.hpp"

namespace lct {

Signature::Signature(std::size_t n_plus, std::size_t n_minus)
    : n_plus_(n_plus), n_minus_(n_minus) {
  if (n_plus + n_minus == 0) {
    throw Error(Errc::EmptySignature, "signature (0, 0) has no dimensions");
  }
}

Metric::Metric(Signature sig) : sig_(sig), diag_(static_cast<Eigen::Index>(sig.dim())) {
  const auto np = static_cast<Eigen::Index>(sig.n_plus());
  diag_.head(np).setOnes();
  diag_.tail(diag_.size() - np).setConstant(-1.0);
}

Matrix Metric::conjugate(const Matrix& m) const {
  return diag_.asDiagonal() * m * diag_.asDiagonal();
}

Metric metric_matrix(const Signature& sig) { return Metric(sig); }

Matrix omega_matrix(const Metric& metric) {
  const auto n = static_cast<Eigen::Index>(metric.dim());
  Matrix omega = Matrix::Zero(2 * n, 2 * n);
  omega.topRightCorner(n, n) = metric.matrix();
  omega.bottomLeftCorner(n, n) = -metric.matrix();
  return omega;
}

Matrix doubled_metric(const Metric& metric) {
  const auto n = static_cast<Eigen::Index>(metric.dim());
  Matrix d = Matrix::Zero(2 * n, 2 * n);
  d.topLeftCorner(n, n) = metric.matrix();
  d.bottomRightCorner(n, n) = metric.matrix();
  return d;
}

double coupling_constant_si() noexcept {
  const double c = si::speed_of_light;
  return c * c * c / si::gravitational_constant;
}

}  // namespace lct
