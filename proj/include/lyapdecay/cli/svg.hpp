// Copyright 2026 The lyapdecay Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace lyapdecay::cli {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool closed = false;
  bool markers_only = false;
};

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = false;
  bool equal_aspect = false;
  std::vector<Series> series;
  std::vector<std::pair<double, double>> x_bands;  // shaded vertical strips [x0, x1]
  std::vector<double> x_marks;                     // dashed vertical lines
};

std::string render_svg(const Plot& plot);
void write_svg(const std::filesystem::path& path, const Plot& plot);

}  // namespace lyapdecay::cli
