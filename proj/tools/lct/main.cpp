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


#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lct/cli/commands.hpp"

namespace {

using lct::cli::kExitUsage;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear canonical transforms: classify, compose, exponentiate and apply"};
  app.require_subcommand(1);
  double tol = lct::kDefaultTol;
  app.add_option("--tol", tol, "Absolute max-norm tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::function<int()> run;

  std::string classify_file;
  auto* classify = app.add_subcommand("classify", "Residuals and class flags of a matrix file");
  classify->add_option("matrix", classify_file, "Block LCT JSON")->required();
  classify->callback([&] { run = [&] { return lct::cli::cmd_classify(classify_file, tol, std::cout); }; });

  std::vector<std::string> compose_files;
  auto* compose = app.add_subcommand("compose", "Compose files; the first one acts first");
  compose->add_option("matrices", compose_files, "Block LCT JSON files")->required();
  compose->callback([&] {
    run = [&] {
      return lct::cli::cmd_compose({compose_files.begin(), compose_files.end()}, tol, std::cout);
    };
  });

  std::string exp_file;
  auto* exp = app.add_subcommand("exp", "Exponentiate a Lie-algebra generator");
  exp->add_option("generator", exp_file, "Generator JSON")->required();
  exp->callback([&] { run = [&] { return lct::cli::cmd_exp(exp_file, tol, std::cout); }; });

  lct::cli::RandomOptions random_opt;
  auto* random = app.add_subcommand("random", "Sample exp(X) for a random generator X");
  random->add_option("n_plus", random_opt.n_plus, "Number of +1 metric directions")->required();
  random->add_option("n_minus", random_opt.n_minus, "Number of -1 metric directions")->required();
  random->add_option("--seed", random_opt.seed, "RNG seed")->capture_default_str();
  random->add_option("--scale", random_opt.scale, "Entry range [-scale, scale]")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  random->add_flag("--ilct", random_opt.ilct, "Restrict to the isodispersion subgroup");
  random->callback([&] { run = [&] { return lct::cli::cmd_random(random_opt, tol, std::cout); }; });

  lct::cli::ApplyOptions apply_opt;
  std::string apply_matrix, apply_signal, apply_grid, apply_out;
  auto* apply = app.add_subcommand("apply", "Apply a 1-D transform to a sampled signal");
  apply->add_option("matrix", apply_matrix, "1-D block LCT JSON")->required();
  apply->add_option("signal", apply_signal, "Signal CSV (t,re,im)")->required();
  auto* apply_grid_opt = apply->add_option("--grid", apply_grid, "Output grid t0,dt,count");
  auto* apply_out_opt = apply->add_option("--out", apply_out, "Output CSV (default stdout)");
  apply->callback([&] {
    apply_opt.matrix = apply_matrix;
    apply_opt.signal = apply_signal;
    if (*apply_grid_opt) apply_opt.grid = apply_grid;
    if (*apply_out_opt) apply_opt.out = apply_out;
    run = [&] { return lct::cli::cmd_apply(apply_opt, tol, std::cout); };
  });

  lct::cli::StateOptions state_opt;
  std::string state_grid, state_out;
  auto* state = app.add_subcommand("state", "Sample a Hermite-Gaussian state and print its moments");
  state->add_option("--n", state_opt.n, "Excitation number")->capture_default_str();
  state->add_option("--T", state_opt.T, "Time mean")->capture_default_str();
  state->add_option("--Omega", state_opt.Omega, "Angular-frequency mean")->capture_default_str();
  state->add_option("--B", state_opt.B, "Angular-frequency variance of the n = 0 state")
      ->capture_default_str();
  auto* state_grid_opt = state->add_option("--grid", state_grid, "Grid t0,dt,count");
  auto* state_out_opt = state->add_option("--out", state_out, "Output CSV");
  state->callback([&] {
    if (*state_grid_opt) state_opt.grid = state_grid;
    if (*state_out_opt) state_opt.out = state_out;
    run = [&] { return lct::cli::cmd_state(state_opt, std::cout); };
  });

  std::string disp_matrix, disp_spec;
  auto* disp = app.add_subcommand("disp", "Transform a dispersion spec by an isodispersion LCT");
  disp->add_option("matrix", disp_matrix, "Block LCT JSON")->required();
  disp->add_option("dispersion", disp_spec, "Dispersion JSON")->required();
  disp->callback([&] { run = [&] { return lct::cli::cmd_disp(disp_matrix, disp_spec, tol, std::cout); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    return run();
  } catch (const lct::Error& e) {
    std::cerr << "lct: " << lct::to_string(e.code()) << ": " << e.what() << '\n';
    return lct::cli::exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "lct: " << e.what() << '\n';
    return lct::cli::kExitDomain;
  }
}
