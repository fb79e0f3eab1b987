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

/// Action of an LCT on q = (p + i x)/sqrt2 and its adjoint:
///   w = (a + d - i b + i c) / 2,  v = (a - d - i b - i c) / 2.
struct BogoliubovPair {
  Metric metric;
  CMatrix w;
  CMatrix v;
};

BogoliubovPair to_bogoliubov(const BlockLCT& lct);

/// Same formulas on unvalidated blocks, for diagnosing candidate matrices.
/// Throws DimensionMismatch.
BogoliubovPair to_bogoliubov(const Metric& metric, const Matrix& a, const Matrix& b,
                             const Matrix& c, const Matrix& d);

struct BogoliubovResiduals {
  double v_norm;           // max |v|
  double unitarity;        // max |w^+ eta w - eta|
  double norm_relation;    // max |w^+ eta w - v^+ eta v - eta|
  double cross_printed;    // max |v^+ eta w - w eta v^+|
  double cross_symmetric;  // max |w^T eta v - v^T eta w|
};

BogoliubovResiduals pseudo_unitarity_residuals(const BogoliubovPair& pair);

/// Pseudo-unitary iff v vanishes and w lies in U(N+, N-). The two cross
/// relations are reported but never gate the classification.
bool is_pseudo_unitary(const BogoliubovResiduals& r, double tol = kDefaultTol) noexcept;

}  // namespace lct
