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

#include "lct/types.hpp"

namespace lct {

/// Pseudo-Euclidean signature (N+, N-). The constructor rejects N = 0.
class Signature {
 public:
  Signature(std::size_t n_plus, std::size_t n_minus);

  std::size_t n_plus() const noexcept { return n_plus_; }
  std::size_t n_minus() const noexcept { return n_minus_; }
  std::size_t dim() const noexcept { return n_plus_ + n_minus_; }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::size_t n_plus_;
  std::size_t n_minus_;
};

/// Diagonal metric eta with the n_plus +1 entries first, then the n_minus -1
/// entries. Immutable; eta * eta = I holds exactly.
class Metric {
 public:
  explicit Metric(Signature sig);

  const Signature& signature() const noexcept { return sig_; }
  std::size_t dim() const noexcept { return sig_.dim(); }

  /// +1.0 or -1.0.
  double entry(std::size_t i) const { return diag_(static_cast<Eigen::Index>(i)); }
  const Vector& diagonal() const noexcept { return diag_; }
  Matrix matrix() const { return diag_.asDiagonal(); }

  /// eta * m * eta without forming eta (exact sign flips).
  Matrix conjugate(const Matrix& m) const;

  friend bool operator==(const Metric& a, const Metric& b) { return a.sig_ == b.sig_; }

 private:
  Signature sig_;
  Vector diag_;
};

Metric metric_matrix(const Signature& sig);

/// The 2N x 2N form [[0, eta], [-eta, 0]].
Matrix omega_matrix(const Metric& metric);

/// diag(eta, eta), the 2N x 2N form preserved by isodispersion transforms.
Matrix doubled_metric(const Metric& metric);

/// Momentum-length coupling c^3/G in kg/s (CODATA 2018). Informational only:
/// every transform in this library works in natural units where it is 1.
double coupling_constant_si() noexcept;

namespace si {
inline constexpr double speed_of_light = 299792458.0;     // m/s
inline constexpr double gravitational_constant = 6.67430e-11;  // m^3 kg^-1 s^-2
inline constexpr double reduced_planck = 1.054571817e-34;  // J s
}  // namespace si

}  // namespace lct
