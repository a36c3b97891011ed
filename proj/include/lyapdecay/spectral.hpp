// Copyright 2026 The lyapdecay Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "lyapdecay/types.hpp"

namespace lyapdecay {

inline constexpr int kDefaultAngles = 256;
inline constexpr int kDefaultGridResolution = 256;

/// Support-point discretization of the field of values W(A).
///
/// points[j] is x^*Ax for the top eigenvector x of the Hermitian part of
/// exp(-i angles[j]) A, so consecutive points run counterclockwise around the
/// boundary. omega holds every eigenvalue of (A + A^*)/2 in descending order.
struct NumericalRangeBoundary {
  std::vector<double> angles;
  std::vector<Complex> points;
  RealVector omega;
  double scale = 0.0;  // ||A||

  /// Numerical abscissa, omega(0).
  double abscissa() const { return omega(0); }
  double max_real() const;
  /// Shoelace area of the boundary polygon.
  double area() const;
  /// Collinear boundary (e.g. Hermitian A), where W(A) is a segment.
  bool degenerate() const;
  /// Cross-product test on consecutive edges; always true for a degenerate boundary.
  bool is_convex(double tol = 1e-9) const;
  /// True when z lies in the polygon inflated by distance `inflation`.
  bool contains(Complex z, double inflation = 0.0) const;
};

NumericalRangeBoundary numerical_range(const ComplexMatrix& a, int angles = kDefaultAngles);

/// max Re z over W(A): largest eigenvalue of (A + A^*)/2.
double numerical_abscissa(const ComplexMatrix& a);

/// omega_1 >= ... >= omega_n, the eigenvalues of (A + A^*)/2.
RealVector hermitian_part_spectrum(const ComplexMatrix& a);

struct GridBox {
  double re_min = 0.0;
  double re_max = 0.0;
  double im_min = 0.0;
  double im_max = 0.0;

  bool contains(Complex z) const {
    return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min && z.imag() <= im_max;
  }
};

/// Bounding box of W(A), padded by max(2 eps_max, 0.1 ||A||) on every side.
GridBox default_box(const ComplexMatrix& a, double eps_max);

/// sigma_min(zI - A) = 1 / ||(zI - A)^{-1}|| sampled on a resolution x resolution lattice.
struct PseudospectrumGrid {
  GridBox box;
  int resolution = 0;
  std::vector<double> values;  // values[iy * resolution + ix]
  std::vector<double> levels;  // epsilon levels of interest, informational

  double re(int ix) const { return box.re_min + (box.re_max - box.re_min) * ix / (resolution - 1); }
  double im(int iy) const { return box.im_min + (box.im_max - box.im_min) * iy / (resolution - 1); }
  Complex node(int ix, int iy) const { return {re(ix), im(iy)}; }
  double value(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * resolution + ix]; }
  double spacing() const;
  double min_value() const;
  double max_value() const;
};

/// Smallest singular value of zI - A.
double resolvent_sigma_min(const ComplexMatrix& a, Complex z);

PseudospectrumGrid resolvent_grid(const ComplexMatrix& a, const GridBox& box, int resolution = kDefaultGridResolution);

/// Closed level curves of a pseudospectrum grid; total_length estimates L_eps.
struct EpsilonContour {
  double epsilon = 0.0;
  std::vector<std::vector<Complex>> polylines;  // each closed: front() == back()
  double total_length = 0.0;

  /// Even-odd test over all polylines: z inside sigma_eps.
  bool encloses(Complex z) const;
  /// Sum of winding numbers of every polyline around z.
  int winding_number(Complex z) const;
};

/// Marching squares at level eps with linear interpolation on cell edges.
/// Throws LevelOutOfRange when eps is outside the grid's value range and
/// OpenContour when the level set reaches the edge of the box.
EpsilonContour epsilon_contour(const PseudospectrumGrid& grid, double eps);

}  // namespace lyapdecay
