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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lct {

enum class Errc {
  EmptySignature,
  DimensionMismatch,
  MetricMismatch,
  NotSymplectic,
  NotPseudoOrthogonal,
  AxisSignatureMismatch,
  ConstraintViolated,
  InvalidGenerator,
  InvalidDispersion,
  NotIsodispersion,
  DegenerateKernel,
  GridTooNarrow,
  ZeroSignal,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library. `residual()` carries the offending
/// residual for the validation errors (NotSymplectic, ConstraintViolated, ...).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what,
        std::optional<double> residual = std::nullopt);

  Errc code() const noexcept { return code_; }
  std::optional<double> residual() const noexcept { return residual_; }

 private:
  Errc code_;
  std::optional<double> residual_;
};

}  // namespace lct
