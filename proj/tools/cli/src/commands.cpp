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


#include "lct/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

namespace lct::cli {

namespace {

using Index = Eigen::Index;

constexpr double kStateGridSigmas = 10.0;
constexpr std::size_t kStateGridCount = 1024;

Matrix canonical_layout(const BlockDocument& doc) {
  const Index n = doc.a.rows();
  Matrix m(2 * n, 2 * n);
  m << doc.a.transpose(), doc.c.transpose(), doc.b.transpose(), doc.d.transpose();
  return m;
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

InhomogeneousLCT then(const InhomogeneousLCT& second, const InhomogeneousLCT& first, double tol) {
  const PhaseVector shift = apply(second, PhaseVector(first.K(), first.Y()));
  return InhomogeneousLCT(compose(second.lct(), first.lct(), tol), shift.p, shift.x);
}

}  // namespace

int exit_code_for(Errc code) noexcept {
  switch (code) {
    case Errc::EmptySignature:
    case Errc::DimensionMismatch:
    case Errc::InvalidArgument:
    case Errc::ParseError:
      return kExitUsage;
    case Errc::MetricMismatch:
    case Errc::NotSymplectic:
    case Errc::NotPseudoOrthogonal:
    case Errc::AxisSignatureMismatch:
    case Errc::ConstraintViolated:
    case Errc::InvalidGenerator:
    case Errc::InvalidDispersion:
    case Errc::NotIsodispersion:
      return kExitInvalid;
    case Errc::DegenerateKernel:
      return kExitDegenerateKernel;
    case Errc::GridTooNarrow:
      return kExitGridTooNarrow;
    case Errc::ZeroSignal:
      return kExitDomain;
  }
  return kExitDomain;
}

ClassificationReport classify(const BlockDocument& doc, double tol) {
  const Metric& metric = doc.metric;
  const Matrix m = canonical_layout(doc);
  ClassificationReport r{metric.signature(), 0, false, {}, false, 0, false, 0, false, 0, false};

  r.symplectic_residual = symplectic_residual(m, metric);
  r.symplectic = r.symplectic_residual <= tol;

  r.bogoliubov = pseudo_unitarity_residuals(to_bogoliubov(metric, doc.a, doc.b, doc.c, doc.d));
  r.pseudo_unitary = r.symplectic && is_pseudo_unitary(r.bogoliubov, tol);

  r.isodispersion_residual = isodispersion_residual(m, metric);
  r.isodispersion = r.symplectic && r.isodispersion_residual <= tol;

  const double det_gap = std::abs(doc.a.determinant() - 1.0);
  r.lorentz_residual = std::max({max_abs(doc.b), max_abs(doc.c), max_abs(doc.a - doc.d),
                                 pseudo_orthogonal_residual(doc.a, metric), det_gap});
  r.lorentz_embedded = r.lorentz_residual <= tol;

  const Matrix eta = metric.matrix();
  r.fourier_residual =
      std::max({max_abs(doc.a), max_abs(doc.d), max_abs(doc.c + doc.b),
                max_abs(doc.b.transpose() * eta * doc.b - eta)});
  r.fourier_like = r.fourier_residual <= tol;
  return r;
}

Json to_json(const ClassificationReport& r) {
  const BogoliubovResiduals& b = r.bogoliubov;
  return Json{
      {"signature", to_json(r.signature)},
      {"symplectic", {{"flag", r.symplectic}, {"residual", r.symplectic_residual}}},
      {"pseudo_unitary",
       {{"flag", r.pseudo_unitary},
        {"residuals",
         {{"v_norm", b.v_norm},
          {"unitarity", b.unitarity},
          {"norm_relation", b.norm_relation},
          {"cross_printed", b.cross_printed},
          {"cross_symmetric", b.cross_symmetric}}}}},
      {"isodispersion", {{"flag", r.isodispersion}, {"residual", r.isodispersion_residual}}},
      {"lorentz_embedded", {{"flag", r.lorentz_embedded}, {"residual", r.lorentz_residual}}},
      {"fourier_like", {{"flag", r.fourier_like}, {"residual", r.fourier_residual}}},
  };
}

int cmd_classify(const std::filesystem::path& matrix, double tol, std::ostream& out) {
  const ClassificationReport r = classify(block_document_from_json(read_json_file(matrix)), tol);
  print(out, to_json(r));
  return r.symplectic ? kExitOk : kExitInvalid;
}

int cmd_compose(const std::vector<std::filesystem::path>& matrices, double tol,
                std::ostream& out) {
  if (matrices.empty()) throw Error(Errc::InvalidArgument, "compose needs at least one file");
  bool translated = false;
  std::optional<InhomogeneousLCT> acc;
  for (const auto& path : matrices) {
    const BlockDocument doc = block_document_from_json(read_json_file(path));
    translated = translated || doc.has_translation();
    const InhomogeneousLCT next = doc.to_inhomogeneous(tol);
    acc = acc ? then(next, *acc, tol) : next;
  }
  print(out, translated ? to_json(*acc) : to_json(acc->lct()));
  return kExitOk;
}

int cmd_exp(const std::filesystem::path& generator, double tol, std::ostream& out) {
  const Generator g = generator_from_json(read_json_file(generator), tol);
  print(out, to_json(BlockLCT::from_canonical(exp_generator(g), g.metric(), tol)));
  return kExitOk;
}

int cmd_random(const RandomOptions& opt, double tol, std::ostream& out) {
  const Signature sig(opt.n_plus, opt.n_minus);
  const auto family = opt.ilct ? GeneratorFamily::Isodispersion : GeneratorFamily::Full;
  const BlockLCT l = random_lct(sig, opt.seed, opt.scale, family);
  if (!(symplectic_residual(l) <= tol)) {
    throw Error(Errc::NotSymplectic, "sampled transform misses the tolerance",
                symplectic_residual(l));
  }
  print(out, to_json(l));
  return kExitOk;
}

int cmd_apply(const ApplyOptions& opt, double tol, std::ostream& out) {
  const BlockDocument doc = block_document_from_json(read_json_file(opt.matrix));
  if (doc.has_translation()) {
    throw Error(Errc::InvalidArgument, "apply does not support translations (K, Y)");
  }
  const LCT1D l = to_lct1d(doc.to_lct(tol));
  const SampledSignal in = read_signal_csv(opt.signal);
  const Grid grid = opt.grid ? parse_grid(*opt.grid) : in.grid();
  const SampledSignal result = apply_lct(l, in, grid);
  if (opt.out) {
    write_signal_csv(*opt.out, result);
  } else {
    write_signal_csv(out, result);
  }
  return kExitOk;
}

int cmd_state(const StateOptions& opt, std::ostream& out) {
  if (!(opt.B > 0.0) || !std::isfinite(opt.B)) {
    throw Error(Errc::InvalidArgument, "--B must be a positive frequency variance");
  }
  const HermiteState h(opt.n, opt.T, opt.Omega, std::sqrt(opt.B));
  Grid grid = [&] {
    if (opt.grid) return parse_grid(*opt.grid);
    const double half = kStateGridSigmas * h.time_sigma();
    return Grid(h.T - half, 2.0 * half / static_cast<double>(kStateGridCount - 1),
                kStateGridCount);
  }();
  const SampledSignal s = hermite_state(h, grid);
  if (opt.out) write_signal_csv(*opt.out, s);
  const Moments m = signal_moments(s);
  print(out, Json{{"T", m.T}, {"Omega", m.Omega}, {"A", m.A}, {"B", m.B}, {"AB", m.A * m.B}});
  return kExitOk;
}

int cmd_disp(const std::filesystem::path& matrix, const std::filesystem::path& dispersion,
             double tol, std::ostream& out) {
  const BlockDocument doc = block_document_from_json(read_json_file(matrix));
  const InhomogeneousLCT l = doc.to_inhomogeneous(tol);
  const DispersionSpec din = dispersion_from_json(read_json_file(dispersion), doc.metric);
  const DispersionSpec dout = ilct_transform_dispersion(l, din, tol);

  Json report{{"output", to_json(dout)}, {"reduced", nullptr}};
  if (window_residual(din) <= tol && window_residual(dout) <= tol) {
    const ReducedLCT r = reduced_matrix(l, din, dout, tol);
    report["reduced"] = Json{{"action", to_json(r.action_matrix())},
                             {"symplectic_residual", symplectic_residual(r)}};
  }
  print(out, report);
  return kExitOk;
}

}  // namespace lct::cli
