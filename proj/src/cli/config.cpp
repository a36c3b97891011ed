// Copyright 2026 The lyapdecay Authors
// SPDX-License-Identifier: Apache-2.0

#include "lyapdecay/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

namespace lyapdecay::cli {

namespace {

[[noreturn]] void reject(const std::string& what) { throw Error(ErrorCode::invalid_config, what); }

double parse_double(std::string_view text, std::string_view whole) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) reject("cannot parse number '" + std::string(whole) + "'");
  return value;
}

}  // namespace

ShiftStrategy parse_strategy(std::string_view text) {
  if (text == "user") return ShiftStrategy::user;
  if (text == "single-point") return ShiftStrategy::single_point;
  if (text == "log-spaced") return ShiftStrategy::log_spaced;
  reject("unknown shift strategy '" + std::string(text) + "' (user | single-point | log-spaced)");
}

std::string_view to_string(ShiftStrategy strategy) {
  switch (strategy) {
    case ShiftStrategy::user: return "user";
    case ShiftStrategy::single_point: return "single-point";
    case ShiftStrategy::log_spaced: return "log-spaced";
  }
  return "unknown";
}

Complex parse_complex(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  if (s.empty()) reject("empty complex number");
  if (s.back() != 'i') return {parse_double(s, text), 0.0};

  s.pop_back();
  // Split at the last sign that is not an exponent sign or the leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_of = [&](std::string part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    if (part.front() == '+') part.erase(0, 1);
    return parse_double(part, text);
  };
  if (split == std::string::npos) return {0.0, imag_of(s)};
  return {parse_double(std::string_view(s).substr(0, split), text), imag_of(s.substr(split))};
}

bool wants(const ExperimentConfig& config, std::string_view format) {
  return std::find(config.formats.begin(), config.formats.end(), format) != config.formats.end();
}

Precision resolve_precision(const ExperimentConfig& config, Precision fallback) {
  if (config.precision.empty()) return fallback;
  if (config.precision == "standard") return Precision::standard;
  if (config.precision == "extended") return Precision::extended;
  reject("unknown precision '" + config.precision + "' (standard | extended)");
}

void validate(const ExperimentConfig& config) {
  static const std::vector<std::string> ids{"solve", "nrange", "psa",    "bounds",  "fig1",
                                            "fig2",  "sweep2x2", "strip", "compare"};
  if (std::find(ids.begin(), ids.end(), config.id) == ids.end()) reject("unknown experiment '" + config.id + "'");

  static const std::vector<std::string> families{"", "fd", "jordan", "two-by-two", "random", "file"};
  if (std::find(families.begin(), families.end(), config.family) == families.end()) {
    reject("unknown family '" + config.family + "' (fd | jordan | two-by-two | random | file)");
  }
  for (Index n : config.n) {
    if (n < 1 || n > 512) reject("n = " + std::to_string(n) + " outside [1, 512]");
  }
  for (double a : config.alpha) {
    if (!std::isfinite(a) || a < 0.0) reject("alpha must be finite and >= 0");
  }
  for (double e : config.eps) {
    if (!(e > 0.0) || !std::isfinite(e)) reject("eps must be finite and > 0");
  }
  for (double t : config.t) {
    if (!std::isfinite(t)) reject("t must be finite");
  }
  const ShiftStrategy strategy = parse_strategy(config.strategy);
  if (strategy == ShiftStrategy::user) {
    for (const std::string& s : config.shifts) {
      if (!(parse_complex(s).real() > 0.0)) reject("shift '" + s + "' is not in the open right half-plane");
    }
  } else if (config.k < 0 || config.k > 256) {
    reject("k must lie in [0, 256]");
  }
  if (config.m < 8) reject("m must be >= 8");
  if (config.grid < 16 || config.grid > 4096) reject("grid must lie in [16, 4096]");
  if (config.r < 1) reject("r must be >= 1");
  if (config.out.empty()) reject("out directory must not be empty");
  for (const std::string& f : config.formats) {
    if (f != "csv" && f != "svg" && f != "matrix") reject("unknown format '" + f + "' (csv | svg | matrix)");
  }
  if (!(config.crouzeix > 0.0)) reject("crouzeix constant must be > 0");
  if (config.family == "file" && config.matrix_a.empty()) reject("family=file needs --matrix-a");
  if (!(config.norm_a > 0.0) || !(config.norm_b > 0.0) || !(config.s1 > 0.0) || !(config.sn > 0.0) ||
      config.sn > config.s1) {
    reject("strip needs positive norms and 0 < sn <= s1");
  }
  resolve_precision(config, Precision::standard);
}

}  // namespace lyapdecay::cli
