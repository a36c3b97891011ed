// Copyright 2026 The lyapdecay Authors
// SPDX-License-Identifier: Apache-2.0

#include "lyapdecay/cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace lyapdecay::cli {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 170.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                              "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  bool empty() const { return !(lo <= hi); }
  void pad() {
    if (empty()) {
      lo = 0.0;
      hi = 1.0;
    } else if (hi - lo < 1e-300) {
      const double d = std::max(std::abs(lo) * 0.1, 1.0);
      lo -= d;
      hi += d;
    } else {
      const double d = 0.05 * (hi - lo);
      lo -= d;
      hi += d;
    }
  }
};

// Log plots show at most this many decades below the largest value.
constexpr double kMaxDecades = 40.0;

}  // namespace

std::string render_svg(const Plot& plot) {
  const auto yv = [&](double y) { return plot.log_y ? (y > 0.0 ? std::log10(y) : std::nan("")) : y; };

  Range xr;
  Range yr;
  for (const Series& s : plot.series) {
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!std::isfinite(yv(s.y[i]))) continue;
      xr.add(s.x[i]);
      yr.add(yv(s.y[i]));
    }
  }
  for (const auto& [a, b] : plot.x_bands) {
    xr.add(a);
    xr.add(b);
  }
  for (double x : plot.x_marks) xr.add(x);
  if (plot.log_y && !yr.empty()) {
    yr.lo = std::max(std::floor(yr.lo), std::ceil(yr.hi) - kMaxDecades);
    yr.hi = std::ceil(yr.hi);
    if (yr.hi <= yr.lo) yr.hi = yr.lo + 1.0;
  } else {
    yr.pad();
  }
  xr.pad();

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  if (plot.equal_aspect) {
    // Grow the narrower range so one unit spans the same pixels on both axes.
    const double sx = (xr.hi - xr.lo) / pw;
    const double sy = (yr.hi - yr.lo) / ph;
    if (sx > sy) {
      const double mid = 0.5 * (yr.lo + yr.hi);
      yr.lo = mid - 0.5 * sx * ph;
      yr.hi = mid + 0.5 * sx * ph;
    } else {
      const double mid = 0.5 * (xr.lo + xr.hi);
      xr.lo = mid - 0.5 * sy * pw;
      xr.hi = mid + 0.5 * sy * pw;
    }
  }
  const auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  const auto py = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
    << escape(plot.title) << "</text>\n";
  o << "<defs><clipPath id=\"area\"><rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw
    << "\" height=\"" << ph << "\"/></clipPath></defs>\n";

  for (const auto& [a, b] : plot.x_bands) {
    const double x0 = px(std::min(a, b));
    o << "<rect x=\"" << num(x0) << "\" y=\"" << kTop << "\" width=\"" << num(std::abs(px(b) - px(a)))
      << "\" height=\"" << ph << "\" fill=\"#cccccc\"/>\n";
  }

  // Axes and ticks.
  o << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  const auto tick_step = [](double span) {
    const double raw = span / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
      if (m * mag >= raw) return m * mag;
    }
    return 10.0 * mag;
  };
  const double xs = tick_step(xr.hi - xr.lo);
  for (double x = std::ceil(xr.lo / xs) * xs; x <= xr.hi + 1e-12 * xs; x += xs) {
    const double tx = std::abs(x) < 1e-12 * xs ? 0.0 : x;
    o << "<line x1=\"" << num(px(tx)) << "\" y1=\"" << kTop + ph << "\" x2=\"" << num(px(tx)) << "\" y2=\""
      << kTop + ph + 5 << "\" stroke=\"black\"/>";
    o << "<text x=\"" << num(px(tx)) << "\" y=\"" << kTop + ph + 18 << "\" text-anchor=\"middle\">" << num(tx)
      << "</text>\n";
  }
  const double ys = plot.log_y ? std::max(1.0, std::ceil((yr.hi - yr.lo) / 8.0)) : tick_step(yr.hi - yr.lo);
  for (double y = std::ceil(yr.lo / ys) * ys; y <= yr.hi + 1e-12 * ys; y += ys) {
    const double ty = std::abs(y) < 1e-12 * ys ? 0.0 : y;
    o << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << num(py(ty)) << "\" x2=\"" << kLeft << "\" y2=\"" << num(py(ty))
      << "\" stroke=\"black\"/>";
    o << "<text x=\"" << kLeft - 8 << "\" y=\"" << num(py(ty) + 4) << "\" text-anchor=\"end\">"
      << (plot.log_y ? "1e" + num(ty) : num(ty)) << "</text>\n";
  }
  o << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << kHeight - 15 << "\" text-anchor=\"middle\">"
    << escape(plot.x_label) << "</text>\n";
  o << "<text transform=\"translate(18," << num(kTop + ph / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
    << escape(plot.y_label) << "</text>\n";

  for (double x : plot.x_marks) {
    o << "<line x1=\"" << num(px(x)) << "\" y1=\"" << kTop << "\" x2=\"" << num(px(x)) << "\" y2=\"" << kTop + ph
      << "\" stroke=\"black\" stroke-dasharray=\"4 3\"/>\n";
  }

  o << "<g clip-path=\"url(#area)\">\n";
  for (std::size_t si = 0; si < plot.series.size(); ++si) {
    const Series& s = plot.series[si];
    const char* color = kPalette[si % kPalette.size()];
    std::ostringstream pts;
    std::size_t count = 0;
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      const double y = yv(s.y[i]);
      if (!std::isfinite(y) || !std::isfinite(s.x[i])) continue;
      if (s.markers_only) {
        o << "<circle cx=\"" << num(px(s.x[i])) << "\" cy=\"" << num(py(y)) << "\" r=\"3\" fill=\"" << color
          << "\"/>\n";
      } else {
        pts << (count ? " " : "") << num(px(s.x[i])) << ',' << num(py(y));
      }
      ++count;
    }
    if (!s.markers_only && count > 0) {
      o << '<' << (s.closed ? "polygon" : "polyline") << " points=\"" << pts.str() << "\" fill=\"none\" stroke=\""
        << color << "\" stroke-width=\"1.5\"/>\n";
    }
  }
  o << "</g>\n";

  double ly = kTop + 10;
  for (std::size_t si = 0; si < plot.series.size(); ++si) {
    if (plot.series[si].label.empty()) continue;
    const char* color = kPalette[si % kPalette.size()];
    const double lx = kLeft + pw + 15;
    o << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 20) << "\" y2=\"" << num(ly)
      << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>";
    o << "<text x=\"" << num(lx + 26) << "\" y=\"" << num(ly + 4) << "\">" << escape(plot.series[si].label)
      << "</text>\n";
    ly += 18;
  }
  o << "</svg>\n";
  return o.str();
}

void write_svg(const std::filesystem::path& path, const Plot& plot) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << render_svg(plot);
}

}  // namespace lyapdecay::cli
