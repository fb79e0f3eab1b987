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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lct/cli/io.hpp"

namespace lct::cli {

/// Process exit codes. Stable; documented in the README.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalid = 2,
  kExitDegenerateKernel = 3,
  kExitGridTooNarrow = 4,
  kExitDomain = 5,
};

int exit_code_for(Errc code) noexcept;

struct ClassificationReport {
  Signature signature;
  double symplectic_residual;
  bool symplectic;
  BogoliubovResiduals bogoliubov;
  bool pseudo_unitary;
  double isodispersion_residual;
  bool isodispersion;  // also requires symplectic
  double lorentz_residual;
  bool lorentz_embedded;
  double fourier_residual;
  bool fourier_like;
};

/// Works on raw blocks, so non-symplectic candidates get a full report.
ClassificationReport classify(const BlockDocument& doc, double tol);
Json to_json(const ClassificationReport& r);

/// Each command writes its JSON (or CSV) to `out` and returns an exit code.
/// Library errors propagate as lct::Error.
int cmd_classify(const std::filesystem::path& matrix, double tol, std::ostream& out);

/// Files are applied left to right: the first file acts first.
int cmd_compose(const std::vector<std::filesystem::path>& matrices, double tol, std::ostream& out);

int cmd_exp(const std::filesystem::path& generator, double tol, std::ostream& out);

struct RandomOptions {
  std::size_t n_plus = 1;
  std::size_t n_minus = 0;
  std::uint64_t seed = 0;
  double scale = 0.5;
  bool ilct = false;
};
int cmd_random(const RandomOptions& opt, double tol, std::ostream& out);

struct ApplyOptions {
  std::filesystem::path matrix;
  std::filesystem::path signal;
  std::optional<std::string> grid;
  std::optional<std::filesystem::path> out;
};
/// One-dimensional transforms without translation only.
int cmd_apply(const ApplyOptions& opt, double tol, std::ostream& out);

struct StateOptions {
  unsigned n = 0;
  double T = 0.0;
  double Omega = 0.0;
  double B = 0.5;  // frequency variance
  std::optional<std::string> grid;
  std::optional<std::filesystem::path> out;
};
/// Default grid: T +- 10 time standard deviations, 1024 points. Prints the
/// measured moments as JSON.
int cmd_state(const StateOptions& opt, std::ostream& out);

/// Output dispersion spec and, when both window pairs are canonical, the
/// reduced matrix.
int cmd_disp(const std::filesystem::path& matrix, const std::filesystem::path& dispersion,
             double tol, std::ostream& out);

}  // namespace lct::cli
