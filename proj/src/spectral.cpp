// Copyright 2026 The lyapdecay Authors
// SPDX-License-Identifier: Apache-2.0

#include "lyapdecay/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>

#include "lyapdecay/densela.hpp"

namespace lyapdecay {

namespace {

constexpr Index kDenseSvdMaxDim = 24;

double dense_sigma_min(const ComplexMatrix& m) {
  if (m.rows() == 1) return std::abs(m(0, 0));
  Eigen::JacobiSVD<ComplexMatrix> dec(m);
  return dec.singularValues()(m.rows() - 1);
}

// Largest eigenvalue of (R^* R)^{-1} by Lanczos with full reorthogonalization; R is upper triangular.
double lanczos_sigma_min(const ComplexMatrix& r, const ComplexVector& start) {
  const Index n = r.rows();
  for (Index i = 0; i < n; ++i) {
    if (r(i, i) == 0.0) return 0.0;
  }
  const auto upper = r.triangularView<Eigen::Upper>();
  const Index max_steps = n;
  ComplexMatrix v(n, max_steps + 1);
  std::vector<double> alpha;
  std::vector<double> beta;
  v.col(0) = start;
  double theta = 0.0;
  for (Index k = 0; k < max_steps; ++k) {
    ComplexVector w = upper.solve(upper.adjoint().solve(v.col(k)));
    if (!w.allFinite()) return 0.0;
    alpha.push_back(v.col(k).dot(w).real());
    for (int pass = 0; pass < 2; ++pass) w -= v.leftCols(k + 1) * (v.leftCols(k + 1).adjoint() * w);
    const double b = w.norm();

    const Index m = k + 1;
    RealVector diag = Eigen::Map<const RealVector>(alpha.data(), m);
    RealVector sub = m > 1 ? RealVector(Eigen::Map<const RealVector>(beta.data(), m - 1)) : RealVector();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    theta = tri.eigenvalues()(m - 1);
    const double residual = b * std::abs(tri.eigenvectors()(m - 1, m - 1));
    if (residual <= 1e-12 * theta || b <= 1e-300) break;
    beta.push_back(b);
    v.col(k + 1) = w / b;
  }
  return std::isfinite(theta) && theta > 0.0 ? 1.0 / std::sqrt(theta) : 0.0;
}

double cross(Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); }

double distance_to_segment(Complex z, Complex p, Complex q) {
  const Complex d = q - p;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(z - p);
  const double t = std::clamp(((z - p) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(z - (p + t * d));
}


// Inverse iteration for the eigenvector of the symmetric tridiagonal (d, e) at eigenvalue lambda,
// using Gaussian elimination with partial pivoting on T - lambda I.
RealVector tridiagonal_top_eigenvector(const RealVector& d, const RealVector& e, double lambda) {
  const Index n = d.size();
  RealVector x = RealVector::Ones(n);
  if (n == 1) return x;
  const double scale = std::max(d.cwiseAbs().maxCoeff(), e.size() ? e.cwiseAbs().maxCoeff() : 0.0);
  const double tiny = std::max(scale, 1.0) * std::numeric_limits<double>::epsilon();

  // Row i of U holds u0 (diagonal), u1, u2 (two superdiagonals after pivoting).
  RealVector u0(n), u1 = RealVector::Zero(n), u2 = RealVector::Zero(n), mult(n);
  std::vector<bool> swapped(static_cast<std::size_t>(n), false);
  double diag = d(0) - lambda;
  double up = e(0);
  for (Index i = 0; i + 1 < n; ++i) {
    const double below = e(i);
    const double next_diag = d(i + 1) - lambda;
    const double next_up = i + 2 < n ? e(i + 1) : 0.0;
    if (std::abs(below) > std::abs(diag)) {
      swapped[static_cast<std::size_t>(i)] = true;
      u0(i) = below;
      u1(i) = next_diag;
      u2(i) = next_up;
      const double m = diag / below;
      mult(i) = m;
      diag = up - m * next_diag;
      up = -m * next_up;
    } else {
      if (diag == 0.0) diag = tiny;
      u0(i) = diag;
      u1(i) = up;
      const double m = below / diag;
      mult(i) = m;
      diag = next_diag - m * up;
      up = next_up;
    }
  }
  u0(n - 1) = diag == 0.0 ? tiny : diag;

  for (int iter = 0; iter < 3; ++iter) {
    RealVector y = x;
    for (Index i = 0; i + 1 < n; ++i) {
      if (swapped[static_cast<std::size_t>(i)]) std::swap(y(i), y(i + 1));
      y(i + 1) -= mult(i) * y(i);
    }
    for (Index i = n - 1; i >= 0; --i) {
      double acc = y(i);
      if (i + 1 < n) acc -= u1(i) * y(i + 1);
      if (i + 2 < n) acc -= u2(i) * y(i + 2);
      y(i) = acc / (u0(i) == 0.0 ? tiny : u0(i));
    }
    x = y / y.norm();
  }
  return x;
}

}  // namespace

double NumericalRangeBoundary::max_real() const {
  double best = -std::numeric_limits<double>::infinity();
  for (const Complex& z : points) best = std::max(best, z.real());
  return best;
}

double NumericalRangeBoundary::area() const {
  const std::size_t m = points.size();
  double twice = 0.0;
  for (std::size_t j = 0; j < m; ++j) twice += cross(points[j], points[(j + 1) % m]);
  return 0.5 * std::abs(twice);
}

bool NumericalRangeBoundary::degenerate() const { return area() < 1e-12 * scale * scale; }

bool NumericalRangeBoundary::is_convex(double tol) const {
  if (degenerate()) return true;
  // Collapse repeated support points (a vertex of W(A) serves many angles).
  std::vector<Complex> distinct;
  for (const Complex& z : points) {
    if (distinct.empty() || std::abs(z - distinct.back()) > tol * scale) distinct.push_back(z);
  }
  while (distinct.size() > 1 && std::abs(distinct.front() - distinct.back()) <= tol * scale) distinct.pop_back();
  const std::size_t m = distinct.size();
  if (m < 3) return true;
  for (std::size_t j = 0; j < m; ++j) {
    const Complex e1 = distinct[(j + 1) % m] - distinct[j];
    const Complex e2 = distinct[(j + 2) % m] - distinct[(j + 1) % m];
    if (cross(e1, e2) < -tol * scale * scale) return false;
  }
  return true;
}

bool NumericalRangeBoundary::contains(Complex z, double inflation) const {
  const std::size_t m = points.size();
  if (m == 0) return false;
  if (degenerate()) {
    double best = std::abs(z - points[0]);
    for (std::size_t j = 0; j < m; ++j) best = std::min(best, distance_to_segment(z, points[j], points[(j + 1) % m]));
    return best <= inflation;
  }
  for (std::size_t j = 0; j < m; ++j) {
    const Complex e = points[(j + 1) % m] - points[j];
    const double len = std::abs(e);
    if (len == 0.0) continue;
    if (cross(e, z - points[j]) / len < -inflation) return false;
  }
  return true;
}

NumericalRangeBoundary numerical_range(const ComplexMatrix& a, int angles) {
  require_square(a, "numerical_range");
  require_finite(a, "numerical_range");
  if (angles < 8) throw Error(ErrorCode::invalid_argument, "numerical_range: need at least 8 angles");
  if (a.rows() == 0) throw Error(ErrorCode::invalid_argument, "numerical_range: empty matrix");

  NumericalRangeBoundary out;
  out.scale = spectral_norm(a);
  out.omega = hermitian_part_spectrum(a);
  out.angles.reserve(angles);
  out.points.reserve(angles);

  // H(theta) = cos(theta) Re(A) + sin(theta) Im(A), the Hermitian part of exp(-i theta) A.
  const ComplexMatrix re_part = hermitian_part(a);
  const ComplexMatrix im_part = (a - a.adjoint()) * Complex(0.0, -0.5);
  Eigen::Tridiagonalization<ComplexMatrix> tri(a.rows());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  for (int j = 0; j < angles; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / angles;
    tri.compute(std::cos(theta) * re_part + std::sin(theta) * im_part);
    const RealVector diag = tri.diagonal();
    const RealVector sub = tri.subDiagonal();
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
      throw Error(ErrorCode::no_convergence, "numerical_range: eigensolver failed at angle " + std::to_string(j));
    }
    const RealVector x = tridiagonal_top_eigenvector(diag, sub, es.eigenvalues()(a.rows() - 1));
    const ComplexVector v = tri.matrixQ() * x.cast<Complex>();
    out.angles.push_back(theta);
    out.points.push_back(v.dot(a * v));
  }
  return out;
}

RealVector hermitian_part_spectrum(const ComplexMatrix& a) {
  require_square(a, "hermitian_part_spectrum");
  return hermitian_eigenvalues(hermitian_part(a));
}

double numerical_abscissa(const ComplexMatrix& a) {
  if (a.rows() == 0) throw Error(ErrorCode::invalid_argument, "numerical_abscissa: empty matrix");
  return hermitian_part_spectrum(a)(0);
}

GridBox default_box(const ComplexMatrix& a, double eps_max) {
  require_square(a, "default_box");
  const RealVector re = hermitian_eigenvalues(hermitian_part(a));
  const RealVector im = hermitian_eigenvalues(ComplexMatrix((a - a.adjoint()) * Complex(0.0, -0.5)));
  const double pad = std::max(2.0 * eps_max, 0.1 * spectral_norm(a));
  return {re(re.size() - 1) - pad, re(0) + pad, im(im.size() - 1) - pad, im(0) + pad};
}

double PseudospectrumGrid::spacing() const {
  const double dx = (box.re_max - box.re_min) / (resolution - 1);
  const double dy = (box.im_max - box.im_min) / (resolution - 1);
  return std::max(dx, dy);
}

double PseudospectrumGrid::min_value() const { return *std::min_element(values.begin(), values.end()); }

double PseudospectrumGrid::max_value() const { return *std::max_element(values.begin(), values.end()); }

double resolvent_sigma_min(const ComplexMatrix& a, Complex z) {
  require_square(a, "resolvent_sigma_min");
  ComplexMatrix shifted = -a;
  shifted.diagonal().array() += z;
  const RealVector sv = singular_values(shifted);
  return sv(sv.size() - 1);
}

PseudospectrumGrid resolvent_grid(const ComplexMatrix& a, const GridBox& box, int resolution) {
  require_square(a, "resolvent_grid");
  require_finite(a, "resolvent_grid");
  if (resolution < 16) throw Error(ErrorCode::invalid_argument, "resolvent_grid: resolution must be >= 16");
  if (!(box.re_max > box.re_min) || !(box.im_max > box.im_min)) {
    throw Error(ErrorCode::invalid_argument, "resolvent_grid: empty box");
  }

  // sigma_min(zI - A) = sigma_min(zI - T) for the Schur form A = U T U^*.
  Eigen::ComplexSchur<ComplexMatrix> schur(a, false);
  if (schur.info() != Eigen::Success) throw Error(ErrorCode::no_convergence, "resolvent_grid: Schur failed");
  const ComplexMatrix t = schur.matrixT();
  for (Index i = 0; i < t.rows(); ++i) {
    if (!box.contains(t(i, i))) throw Error(ErrorCode::invalid_argument, "resolvent_grid: box must enclose the spectrum");
  }

  PseudospectrumGrid grid;
  grid.box = box;
  grid.resolution = resolution;
  grid.values.resize(static_cast<std::size_t>(resolution) * resolution);

  const Index n = t.rows();
  ComplexMatrix shifted = -t;
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> normal;
  ComplexVector start(n);
  for (Index i = 0; i < n; ++i) start(i) = Complex(normal(rng), normal(rng));
  start.normalize();
  for (int iy = 0; iy < resolution; ++iy) {
    for (int ix = 0; ix < resolution; ++ix) {
      const Complex z = grid.node(ix, iy);
      shifted.diagonal() = z - t.diagonal().array();
      const double value = n <= kDenseSvdMaxDim ? dense_sigma_min(shifted) : lanczos_sigma_min(shifted, start);
      grid.values[static_cast<std::size_t>(iy) * resolution + ix] = value;
    }
  }
  return grid;
}

}  // namespace lyapdecay
