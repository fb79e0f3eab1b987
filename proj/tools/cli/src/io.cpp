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


#include "lct/cli/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace lct::cli {

namespace {

using Index = Eigen::Index;

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::ParseError, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) parse_error("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) parse_error(std::string("missing field \"") + key + "\"");
  return *it;
}

double number(const Json& j, const std::string& what) {
  if (!j.is_number()) parse_error(what + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) parse_error(what + " is not finite");
  return v;
}

Matrix square_block(const Json& j, const char* key, std::size_t n) {
  Matrix m = matrix_from_json(member(j, key), key);
  if (m.rows() != static_cast<Index>(n) || m.cols() != static_cast<Index>(n)) {
    parse_error(std::string("block \"") + key + "\" must be " + std::to_string(n) + "x" +
                std::to_string(n));
  }
  return m;
}

std::optional<Vector> optional_vector(const Json& j, const char* key, std::size_t n) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  Vector v = vector_from_json(*it, key);
  if (v.size() != static_cast<Index>(n)) {
    parse_error(std::string("\"") + key + "\" must have length " + std::to_string(n));
  }
  return v;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view field, const std::string& what) {
  field = trim(field);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(v)) {
    parse_error(what + ": \"" + std::string(field) + "\" is not a finite number");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

}  // namespace

BlockLCT BlockDocument::to_lct(double tol) const { return make_lct(a, b, c, d, metric, tol); }

InhomogeneousLCT BlockDocument::to_inhomogeneous(double tol) const {
  const auto n = static_cast<Index>(metric.dim());
  return InhomogeneousLCT(to_lct(tol), K.value_or(Vector::Zero(n)), Y.value_or(Vector::Zero(n)));
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

Signature signature_from_json(const Json& j) {
  const Json& np = member(j, "n_plus");
  const Json& nm = member(j, "n_minus");
  if (!np.is_number_integer() || !nm.is_number_integer() || np.get<long long>() < 0 ||
      nm.get<long long>() < 0) {
    parse_error("signature counts must be nonnegative integers");
  }
  return Signature(np.get<std::size_t>(), nm.get<std::size_t>());
}

Json to_json(const Signature& sig) {
  return Json{{"n_plus", sig.n_plus()}, {"n_minus", sig.n_minus()}};
}

Matrix matrix_from_json(const Json& j, const std::string& name) {
  if (!j.is_array() || j.empty()) parse_error(name + " must be a non-empty array of rows");
  const std::size_t rows = j.size();
  const Json& first = j.front();
  if (!first.is_array() || first.empty()) parse_error(name + " rows must be non-empty arrays");
  const std::size_t cols = first.size();
  Matrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || row.size() != cols) parse_error(name + " is not rectangular");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Index>(r), static_cast<Index>(c)) = number(row[c], name);
    }
  }
  return m;
}

Vector vector_from_json(const Json& j, const std::string& name) {
  if (!j.is_array() || j.empty()) parse_error(name + " must be a non-empty array");
  Vector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = number(j[i], name);
  return v;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

BlockDocument block_document_from_json(const Json& j) {
  const Metric metric(signature_from_json(member(j, "signature")));
  const std::size_t n = metric.dim();
  return BlockDocument{metric,
                       square_block(j, "a", n),
                       square_block(j, "b", n),
                       square_block(j, "c", n),
                       square_block(j, "d", n),
                       optional_vector(j, "K", n),
                       optional_vector(j, "Y", n)};
}

Json to_json(const BlockLCT& lct) {
  return Json{{"signature", to_json(lct.metric().signature())},
              {"a", to_json(lct.a())},
              {"b", to_json(lct.b())},
              {"c", to_json(lct.c())},
              {"d", to_json(lct.d())}};
}

Json to_json(const InhomogeneousLCT& lct) {
  Json j = to_json(lct.lct());
  j["K"] = to_json(lct.K());
  j["Y"] = to_json(lct.Y());
  return j;
}

Generator generator_from_json(const Json& j, double tol) {
  const Metric metric(signature_from_json(member(j, "signature")));
  const std::size_t n = metric.dim();
  return Generator::make(metric, square_block(j, "lambda", n), square_block(j, "mu", n),
                         square_block(j, "phi", n), square_block(j, "theta", n), tol);
}

Json to_json(const Generator& g) {
  return Json{{"signature", to_json(g.metric().signature())},
              {"lambda", to_json(g.lambda())},
              {"mu", to_json(g.mu())},
              {"phi", to_json(g.phi())},
              {"theta", to_json(g.theta())}};
}

DispersionSpec dispersion_from_json(const Json& j, const Metric& metric) {
  const std::size_t n = metric.dim();
  if (j.contains("signature") && !(Metric(signature_from_json(j["signature"])) == metric)) {
    throw Error(Errc::MetricMismatch, "dispersion file signature differs from the transform's");
  }
  auto vec = [&](const char* key) {
    Vector v = vector_from_json(member(j, key), key);
    if (v.size() != static_cast<Index>(n)) {
      parse_error(std::string("\"") + key + "\" must have length " + std::to_string(n));
    }
    return v;
  };
  return DispersionSpec::from_windows(metric, vec("P"), vec("X"), square_block(j, "a_win", n),
                                      square_block(j, "b_win", n));
}

Json to_json(const DispersionSpec& d) {
  return Json{{"signature", to_json(d.metric().signature())},
              {"P", to_json(d.P())},
              {"X", to_json(d.X())},
              {"a_win", to_json(d.a_win())},
              {"b_win", to_json(d.b_win())},
              {"A", to_json(d.A())},
              {"B", to_json(d.B())}};
}

Grid parse_grid(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) parse_error("grid must be t0,dt,count");
  const double t0 = parse_double(parts[0], "grid t0");
  const double dt = parse_double(parts[1], "grid dt");
  const std::string_view count_text = trim(parts[2]);
  std::size_t count = 0;
  const auto [ptr, ec] =
      std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
  if (ec != std::errc() || ptr != count_text.data() + count_text.size()) {
    parse_error("grid count must be a nonnegative integer");
  }
  try {
    return Grid(t0, dt, count);
  } catch (const Error& e) {
    parse_error(std::string("invalid grid: ") + e.what());
  }
}

SampledSignal read_signal_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != "t,re,im") parse_error("CSV header must be t,re,im");
  std::vector<double> t;
  std::vector<Complex> v;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto fields = split(line, ',');
    const std::string where = "line " + std::to_string(lineno);
    if (fields.size() != 3) parse_error(where + ": expected three fields");
    t.push_back(parse_double(fields[0], where));
    v.emplace_back(parse_double(fields[1], where), parse_double(fields[2], where));
  }
  if (t.size() < 2) parse_error("signal needs at least two samples");
  const double dt = t[1] - t[0];
  if (!(dt > 0.0)) parse_error("sample times must increase");
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (std::abs(t[k] - (t[0] + static_cast<double>(k) * dt)) > 1e-9 * dt) {
      parse_error("sample times are not uniform at row " + std::to_string(k + 1));
    }
  }
  CVector samples(static_cast<Index>(v.size()));
  for (std::size_t k = 0; k < v.size(); ++k) samples(static_cast<Index>(k)) = v[k];
  return SampledSignal(Grid(t[0], dt, t.size()), std::move(samples));
}

SampledSignal read_signal_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  return read_signal_csv(in);
}

void write_signal_csv(std::ostream& out, const SampledSignal& s) {
  const auto old = out.precision(17);
  out << "t,re,im\n";
  for (std::size_t k = 0; k < s.size(); ++k) {
    const Complex z = s.samples()(static_cast<Index>(k));
    out << s.grid().at(k) << ',' << z.real() << ',' << z.imag() << '\n';
  }
  out.precision(old);
}

void write_signal_csv(const std::filesystem::path& path, const SampledSignal& s) {
  std::ofstream out(path);
  if (!out) parse_error("cannot write " + path.string());
  write_signal_csv(out, s);
  if (!out) parse_error("failed writing " + path.string());
}

}  // namespace lct::cli
