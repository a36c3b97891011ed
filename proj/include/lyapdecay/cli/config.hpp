// Copyright 2026 The lyapdecay Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lyapdecay/bounds.hpp"
#include "lyapdecay/lyapunov.hpp"
#include "lyapdecay/types.hpp"

namespace lyapdecay::cli {

/// Everything an experiment needs. Unset optionals fall back to per-command defaults.
struct ExperimentConfig {
  std::string id;
  std::string family;  // fd | jordan | two-by-two | random | file; empty = command default
  std::vector<Index> n;
  std::vector<double> alpha;
  std::vector<double> eps;
  std::vector<double> t;
  std::vector<std::string> shifts;  // user shifts as text, e.g. "2", "1.5-0.5i"
  std::string strategy = "log-spaced";
  int k = 4;  // shift count for the automatic strategies
  int m = kDefaultAngles;
  int grid = kDefaultGridResolution;
  Index r = 1;
  std::string out = ".";
  std::vector<std::string> formats{"csv", "svg"};
  std::uint64_t seed = 1;
  bool cap_override = false;
  double crouzeix = kCrouzeixConstant;
  std::string matrix_a;
  std::string matrix_b;
  std::string precision;  // standard | extended; empty = command default
  double norm_a = 1.0;
  double norm_b = 1.0;
  double s1 = 1.0;
  double sn = 0.5;
};

/// Throws Error(invalid_config) when a field is out of its documented range.
void validate(const ExperimentConfig& config);

bool wants(const ExperimentConfig& config, std::string_view format);

ShiftStrategy parse_strategy(std::string_view text);
std::string_view to_string(ShiftStrategy strategy);

/// Parses "a", "a+bi", "a-bi", "bi". Throws Error(invalid_config) on anything else.
Complex parse_complex(std::string_view text);

Precision resolve_precision(const ExperimentConfig& config, Precision fallback);

}  // namespace lyapdecay::cli
