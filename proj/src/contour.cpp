// Copyright 2026 The lyapdecay Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lyapdecay/spectral.hpp"

namespace lyapdecay {

namespace {

using EdgeId = std::int64_t;

struct Crossing {
  Complex point;
  std::array<EdgeId, 2> links{-1, -1};
  int degree = 0;
  bool visited = false;
};

class ContourBuilder {
 public:
  ContourBuilder(const PseudospectrumGrid& grid, double eps) : grid_(grid), eps_(eps) {}

  EpsilonContour build() {
    const int res = grid_.resolution;
    for (int iy = 0; iy + 1 < res; ++iy) {
      for (int ix = 0; ix + 1 < res; ++ix) visit_cell(ix, iy);
    }
    return trace();
  }

 private:
  bool inside(int ix, int iy) const { return grid_.value(ix, iy) < eps_; }

  // Edge ids: 2*(iy*res + ix) for the edge (ix,iy)-(ix+1,iy), +1 for (ix,iy)-(ix,iy+1).
  EdgeId horizontal(int ix, int iy) const { return 2 * (static_cast<EdgeId>(iy) * grid_.resolution + ix); }
  EdgeId vertical(int ix, int iy) const { return horizontal(ix, iy) + 1; }

  Complex interpolate(int ix0, int iy0, int ix1, int iy1) const {
    const double v0 = grid_.value(ix0, iy0);
    const double v1 = grid_.value(ix1, iy1);
    const double t = (eps_ - v0) / (v1 - v0);
    return grid_.node(ix0, iy0) + t * (grid_.node(ix1, iy1) - grid_.node(ix0, iy0));
  }

  void add_point(EdgeId id, int ix0, int iy0, int ix1, int iy1) {
    auto [it, fresh] = crossings_.try_emplace(id);
    if (fresh) {
      it->second.point = interpolate(ix0, iy0, ix1, iy1);
      order_.push_back(id);
    }
  }

  void link(EdgeId p, EdgeId q) {
    for (auto [from, to] : {std::pair{p, q}, std::pair{q, p}}) {
      Crossing& c = crossings_.at(from);
      if (c.degree >= 2) throw Error(ErrorCode::open_contour, "epsilon_contour: inconsistent cell topology");
      c.links[c.degree++] = to;
    }
  }

  void visit_cell(int ix, int iy) {
    // Corners counterclockwise: (ix,iy), (ix+1,iy), (ix+1,iy+1), (ix,iy+1).
    const std::array<std::pair<int, int>, 4> corner{{{ix, iy}, {ix + 1, iy}, {ix + 1, iy + 1}, {ix, iy + 1}}};
    const std::array<EdgeId, 4> edge{horizontal(ix, iy), vertical(ix + 1, iy), horizontal(ix, iy + 1),
                                     vertical(ix, iy)};
    std::array<bool, 4> in{};
    for (int c = 0; c < 4; ++c) in[c] = inside(corner[c].first, corner[c].second);

    std::vector<int> crossed;
    for (int e = 0; e < 4; ++e) {
      const int c0 = e;
      const int c1 = (e + 1) % 4;
      if (in[c0] != in[c1]) {
        add_point(edge[e], corner[c0].first, corner[c0].second, corner[c1].first, corner[c1].second);
        crossed.push_back(e);
      }
    }
    if (crossed.size() == 2) {
      link(edge[crossed[0]], edge[crossed[1]]);
    } else if (crossed.size() == 4) {
      // Saddle: resolve with the cell-center average.
      double center = 0.0;
      for (const auto& [cx, cy] : corner) center += grid_.value(cx, cy);
      const bool center_in = 0.25 * center < eps_;
      if (center_in == in[0]) {
        link(edge[0], edge[1]);
        link(edge[2], edge[3]);
      } else {
        link(edge[3], edge[0]);
        link(edge[1], edge[2]);
      }
    }
  }

  EpsilonContour trace() {
    EpsilonContour out;
    out.epsilon = eps_;
    std::sort(order_.begin(), order_.end());
    for (EdgeId start : order_) {
      Crossing& first = crossings_.at(start);
      if (first.visited) continue;
      std::vector<Complex> line;
      EdgeId prev = -1;
      EdgeId cur = start;
      while (true) {
        Crossing& c = crossings_.at(cur);
        if (c.degree != 2) throw Error(ErrorCode::open_contour, "epsilon_contour: contour leaves the grid");
        c.visited = true;
        line.push_back(c.point);
        const EdgeId next = c.links[0] != prev ? c.links[0] : c.links[1];
        prev = cur;
        cur = next;
        if (cur == start) break;
      }
      line.push_back(line.front());
      for (std::size_t i = 0; i + 1 < line.size(); ++i) out.total_length += std::abs(line[i + 1] - line[i]);
      out.polylines.push_back(std::move(line));
    }
    return out;
  }

  const PseudospectrumGrid& grid_;
  double eps_;
  std::unordered_map<EdgeId, Crossing> crossings_;
  std::vector<EdgeId> order_;
};

}  // namespace

bool EpsilonContour::encloses(Complex z) const {
  bool inside = false;
  for (const auto& line : polylines) {
    for (std::size_t i = 0; i + 1 < line.size(); ++i) {
      const Complex p = line[i];
      const Complex q = line[i + 1];
      if ((p.imag() > z.imag()) != (q.imag() > z.imag())) {
        const double x = p.real() + (z.imag() - p.imag()) * (q.real() - p.real()) / (q.imag() - p.imag());
        if (z.real() < x) inside = !inside;
      }
    }
  }
  return inside;
}

int EpsilonContour::winding_number(Complex z) const {
  double total = 0.0;
  for (const auto& line : polylines) {
    for (std::size_t i = 0; i + 1 < line.size(); ++i) total += std::arg((line[i + 1] - z) / (line[i] - z));
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

EpsilonContour epsilon_contour(const PseudospectrumGrid& grid, double eps) {
  if (grid.resolution < 2 || grid.values.empty()) {
    throw Error(ErrorCode::invalid_argument, "epsilon_contour: empty grid");
  }
  if (!(eps > grid.min_value()) || !(eps < grid.max_value())) {
    throw Error(ErrorCode::level_out_of_range, "epsilon_contour: eps = " + std::to_string(eps) +
                                                   " outside the grid value range");
  }
  const int res = grid.resolution;
  for (int i = 0; i < res; ++i) {
    if (grid.value(i, 0) < eps || grid.value(i, res - 1) < eps || grid.value(0, i) < eps ||
        grid.value(res - 1, i) < eps) {
      throw Error(ErrorCode::open_contour, "epsilon_contour: sigma_eps reaches the box edge; enlarge the box");
    }
  }
  return ContourBuilder(grid, eps).build();
}

}  // namespace lyapdecay
