// Copyright 2026 The lyapdecay Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "lyapdecay/bounds.hpp"
#include "lyapdecay/cli/config.hpp"
#include "lyapdecay/models.hpp"
#include "lyapdecay/spectral.hpp"

namespace lyapdecay::cli {

struct NamedProblem {
  std::string label;
  ModelProblem model;
};

/// Expands the family and parameter lists of the config into concrete instances.
std::vector<NamedProblem> build_problems(const ExperimentConfig& config, std::string_view default_family);

ShiftSet shifts_for(const ExperimentConfig& config, const ComplexMatrix& a);

struct RunResult {
  std::vector<std::filesystem::path> files;
  std::vector<std::string> summary;
  std::vector<std::string> violations;
  bool sound() const { return violations.empty(); }
};

struct DecayCurve {
  std::string label;
  Index n = 0;
  double alpha = 0.0;
  std::vector<double> ratios;  // s_k/s_1, k = 1..n
  NumericalRangeBoundary boundary;
};

std::vector<DecayCurve> fig1_curves(const ExperimentConfig& config);
std::vector<DecayCurve> fig2_curves(const ExperimentConfig& config);

struct SweepRow {
  double alpha = 0.0;
  double t = 0.0;
  double exact = 0.0;
  double solver = 0.0;
  double bound = 0.0;  // 1 - omega_1/norm(A), bounding s_2/s_1
};

std::vector<SweepRow> two_by_two_sweep(const ExperimentConfig& config);

/// Every bound evaluated on one instance; `violations` lists valid entries below the actual value.
struct Comparison {
  std::string label;
  SolutionSpectrum solution;
  std::vector<BoundReport> reports;
  std::vector<std::string> violations;
};

Comparison compare_bounds(const NamedProblem& problem, const ExperimentConfig& config);

RunResult run_solve(const ExperimentConfig& config);
RunResult run_nrange(const ExperimentConfig& config);
RunResult run_psa(const ExperimentConfig& config);
RunResult run_bounds(const ExperimentConfig& config);
RunResult run_fig1(const ExperimentConfig& config);
RunResult run_fig2(const ExperimentConfig& config);
RunResult run_two_by_two_sweep(const ExperimentConfig& config);
RunResult run_strip(const ExperimentConfig& config);
RunResult run_bounds_compare(const ExperimentConfig& config);

/// Dispatches on config.id.
RunResult run_experiment(const ExperimentConfig& config);

}  // namespace lyapdecay::cli
