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

#include "lct/error.hpp"

#include <sstream>

namespace lct {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptySignature: return "EmptySignature";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::MetricMismatch: return "MetricMismatch";
    case Errc::NotSymplectic: return "NotSymplectic";
    case Errc::NotPseudoOrthogonal: return "NotPseudoOrthogonal";
    case Errc::AxisSignatureMismatch: return "AxisSignatureMismatch";
    case Errc::ConstraintViolated: return "ConstraintViolated";
    case Errc::InvalidGenerator: return "InvalidGenerator";
    case Errc::InvalidDispersion: return "InvalidDispersion";
    case Errc::NotIsodispersion: return "NotIsodispersion";
    case Errc::DegenerateKernel: return "DegenerateKernel";
    case Errc::GridTooNarrow: return "GridTooNarrow";
    case Errc::ZeroSignal: return "ZeroSignal";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string format_message(Errc code, const std::string& what,
                           std::optional<double> residual) {
  std::ostringstream os;
  os << to_string(code) << ": " << what;
  if (residual) os << " (residual " << *residual << ")";
  return os.str();
}

}  // namespace

Error::Error(Errc code, const std::string& what, std::optional<double> residual)
    : std::runtime_error(format_message(code, what, residual)),
      code_(code),
      residual_(residual) {}

}  // namespace lct
