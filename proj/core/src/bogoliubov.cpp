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

#include "lct/bogoliubov.hpp"

#include "lct/error.hpp"

namespace lct {

BogoliubovPair to_bogoliubov(const Metric& metric, const Matrix& a_in, const Matrix& b_in,
                             const Matrix& c_in, const Matrix& d_in) {
  const auto n = static_cast<Eigen::Index>(metric.dim());
  for (const Matrix* m : {&a_in, &b_in, &c_in, &d_in}) {
    if (m->rows() != n || m->cols() != n) {
      throw Error(Errc::DimensionMismatch, "Bogoliubov blocks must be N x N");
    }
  }
  const Complex i(0.0, 1.0);
  const CMatrix a = a_in.cast<Complex>();
  const CMatrix b = b_in.cast<Complex>();
  const CMatrix c = c_in.cast<Complex>();
  const CMatrix d = d_in.cast<Complex>();
  return BogoliubovPair{
      metric,
      0.5 * (a + d - i * b + i * c),
      0.5 * (a - d - i * b - i * c),
  };
}

BogoliubovPair to_bogoliubov(const BlockLCT& lct) {
  return to_bogoliubov(lct.metric(), lct.a(), lct.b(), lct.c(), lct.d());
}

BogoliubovResiduals pseudo_unitarity_residuals(const BogoliubovPair& pair) {
  const CMatrix eta = pair.metric.matrix().cast<Complex>();
  const CMatrix& w = pair.w;
  const CMatrix& v = pair.v;
  const CMatrix wew = w.adjoint() * eta * w;
  return BogoliubovResiduals{
      max_abs(v),
      max_abs(wew - eta),
      max_abs(wew - v.adjoint() * eta * v - eta),
      max_abs(v.adjoint() * eta * w - w * eta * v.adjoint()),
      max_abs(w.transpose() * eta * v - v.transpose() * eta * w),
  };
}

bool is_pseudo_unitary(const BogoliubovResiduals& r, double tol) noexcept {
  return r.v_norm <= tol && r.unitarity <= tol;
}

}  // namespace lct
