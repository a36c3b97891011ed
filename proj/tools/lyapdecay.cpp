// Copyright 2026 The lyapdecay Authors
// SPDX-License-Identifier: Apache-2.0

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lyapdecay/cli/experiments.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalidConfig = 2;
constexpr int kNumericalFailure = 3;
constexpr int kSoundnessViolation = 4;

}  // namespace

int main(int argc, char** argv) {
  using lyapdecay::cli::ExperimentConfig;
  ExperimentConfig config;

  CLI::App app{"Lyapunov solution decay: solver, numerical range, pseudospectra and decay bounds"};
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--family", config.family, "fd | jordan | two-by-two | random | file");
  app.add_option("--n", config.n, "dimensions (comma separated)")->delimiter(',');
  app.add_option("--alpha", config.alpha, "alpha values: Jordan off-diagonal, 2x2 parameter or nonnormality")
      ->delimiter(',');
  app.add_option("--t", config.t, "B = [t, 1]^T for the 2x2 family (default -alpha/2)")->delimiter(',');
  app.add_option("--eps", config.eps, "pseudospectral levels")->delimiter(',');
  app.add_option("--shifts", config.shifts, "user shifts, e.g. 2,1.5+0.5i")->delimiter(',');
  app.add_option("--strategy", config.strategy, "user | single-point | log-spaced");
  app.add_option("--k", config.k, "shift count for single-point and log-spaced");
  app.add_option("--m", config.m, "angles on the numerical range boundary");
  app.add_option("--grid", config.grid, "pseudospectrum grid points per axis");
  app.add_option("--r", config.r, "columns of B for the random family");
  app.add_option("--out", config.out, "output directory");
  app.add_option("--format", config.formats, "csv, svg, matrix")->delimiter(',');
  app.add_option("--seed", config.seed, "random seed");
  app.add_flag("--cap-override", config.cap_override, "lift the Krylov bound dimension cap");
  app.add_option("--crouzeix", config.crouzeix, "Crouzeix constant for the numerical range bound");
  app.add_option("--matrix-a", config.matrix_a, "matrix file for A (family=file)");
  app.add_option("--matrix-b", config.matrix_b, "matrix file for B (family=file, default ones)");
  app.add_option("--precision", config.precision, "standard | extended");
  app.add_option("--norm-a", config.norm_a, "strip: ||A||");
  app.add_option("--norm-b", config.norm_b, "strip: ||B||");
  app.add_option("--s1", config.s1, "strip: s_1");
  app.add_option("--sn", config.sn, "strip: s_n");

  const std::vector<std::pair<std::string, std::string>> commands{
      {"solve", "solve A X + X A^* = -B B^* and list s_k / s_1"},
      {"nrange", "numerical range boundary and Hermitian-part eigenvalues"},
      {"psa", "pseudospectrum grid and eps-contours"},
      {"bounds", "every decay bound on each instance, long format"},
      {"fig1", "decay and numerical ranges of the forward-difference operator"},
      {"fig2", "decay and numerical ranges of Jordan blocks"},
      {"sweep2x2", "closed-form 2x2 ratio against the solver over alpha"},
      {"strip", "admissible strip for the numerical abscissa"},
      {"compare", "all bounds side by side with validity flags"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidConfig;
  }
  config.id = app.get_subcommands().front()->get_name();

  try {
    const lyapdecay::cli::RunResult result = lyapdecay::cli::run_experiment(config);
    for (const std::string& line : result.summary) std::cout << line << '\n';
    for (const auto& path : result.files) std::cout << "wrote " << path.string() << '\n';
    if (!result.sound()) {
      for (const std::string& v : result.violations) std::cerr << "soundness violation: " << v << '\n';
      return kSoundnessViolation;
    }
  } catch (const lyapdecay::Error& e) {
    std::cerr << "error [" << lyapdecay::to_string(e.code()) << "]: " << e.what() << '\n';
    return e.code() == lyapdecay::ErrorCode::invalid_config ? kInvalidConfig : kNumericalFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kOk;
}
