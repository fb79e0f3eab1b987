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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "lct/lct.hpp"

namespace lct::cli {

using Json = nlohmann::json;

/// Blocks exactly as written in a matrix file; nothing is validated beyond
/// shape, so candidate (possibly non-symplectic) matrices can be diagnosed.
struct BlockDocument {
  Metric metric;
  Matrix a, b, c, d;
  std::optional<Vector> K, Y;

  bool has_translation() const noexcept { return K.has_value() || Y.has_value(); }

  /// Throws NotSymplectic (tol) like make_lct.
  BlockLCT to_lct(double tol) const;
  InhomogeneousLCT to_inhomogeneous(double tol) const;
};

/// Throws ParseError for unreadable files and malformed JSON.
Json read_json_file(const std::filesystem::path& path);

Signature signature_from_json(const Json& j);
Json to_json(const Signature& sig);

Matrix matrix_from_json(const Json& j, const std::string& name);
Vector vector_from_json(const Json& j, const std::string& name);
Json to_json(const Matrix& m);
Json to_json(const Vector& v);
/// Complex entries as [re, im] pairs.
Json to_json(const CMatrix& m);

/// {"signature": {...}, "a": [[..]], "b", "c", "d", "K"?, "Y"?}.
BlockDocument block_document_from_json(const Json& j);
Json to_json(const BlockLCT& lct);
Json to_json(const InhomogeneousLCT& lct);

/// {"signature": {...}, "lambda", "mu", "phi", "theta"}.
Generator generator_from_json(const Json& j, double tol);
Json to_json(const Generator& g);

/// {"P", "X", "a_win", "b_win"}; the metric comes from the transform.
DispersionSpec dispersion_from_json(const Json& j, const Metric& metric);
Json to_json(const DispersionSpec& d);

/// "t0,dt,count".
Grid parse_grid(const std::string& text);

/// Header `t,re,im`, one row per sample, uniform t to within 1e-9 dt.
SampledSignal read_signal_csv(const std::filesystem::path& path);
SampledSignal read_signal_csv(std::istream& in);
void write_signal_csv(std::ostream& out, const SampledSignal& s);
void write_signal_csv(const std::filesystem::path& path, const SampledSignal& s);

}  // namespace lct::cli
