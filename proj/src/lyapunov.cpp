// Copyright 2026 The lyapdecay Authors
// SPDX-License-Identifier: Apache-2.0

#include "lyapdecay/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace lyapdecay {

namespace {

ComplexVector schur_eigenvalues(const ComplexMatrix& a) {
  if (a.size() == 0) return {};
  Eigen::ComplexSchur<ComplexMatrix> schur(a, false);
  if (schur.info() != Eigen::Success) {
    throw Error(ErrorCode::no_convergence, "LyapunovProblem: Schur factorization failed");
  }
  return schur.matrixT().diagonal();
}

template <typename Real>
SolutionSpectrum finalize(const ComplexMatrixT<Real>& a, const ComplexMatrixT<Real>& b, ComplexMatrixT<Real> x,
                          double tol) {
  using Matrix = ComplexMatrixT<Real>;
  x = (x + x.adjoint()).eval() * Real(0.5);

  const Matrix bbt = b * b.adjoint();
  const Matrix r = a * x + x * a.adjoint() + bbt;
  const RealVectorT<Real> eig = hermitian_eigenvalues(x);
  RealVectorT<Real> s = eig.cwiseAbs();
  std::sort(s.data(), s.data() + s.size(), [](Real lhs, Real rhs) { return lhs > rhs; });

  const Real norm_a = spectral_norm(a);
  const Real norm_b = spectral_norm(b);
  const Real residual = spectral_norm(r);
  const Real scale = Real(2) * norm_a * s(0) + norm_b * norm_b;

  SolutionSpectrum out;
  out.x = x.template cast<Complex>();
  out.singular_values = s.template cast<double>();
  out.eigenvalues = eig.template cast<double>();
  out.residual = static_cast<double>(residual);
  out.relative_residual = scale > Real(0) ? static_cast<double>(residual / scale) : 0.0;
  out.positive_definite = eig(eig.size() - 1) > Real(0);
  if (!(out.relative_residual <= tol)) {
    throw Error(ErrorCode::solve_failure,
                "solve_lyapunov: relative residual " + std::to_string(out.relative_residual) + " above tolerance");
  }
  return out;
}

template <typename Real, typename Kernel>
SolutionSpectrum solve_in(const LyapunovProblem& p, double tol, Kernel kernel) {
  using Matrix = ComplexMatrixT<Real>;
  const Matrix a = p.a().template cast<std::complex<Real>>();
  const Matrix b = p.b().template cast<std::complex<Real>>();
  const Matrix rhs = -(b * b.adjoint());
  return finalize<Real>(a, b, kernel(a, rhs), tol);
}

}  // namespace

Index numerical_rank(const ComplexMatrix& m, double tol) {
  if (m.size() == 0) return 0;
  const RealVector sv = singular_values(m);
  if (!(sv(0) > 0.0)) return 0;
  Index rank = 0;
  for (Index k = 0; k < sv.size(); ++k) {
    if (sv(k) > tol * sv(0)) ++rank;
  }
  return rank;
}

double controllability_margin(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexVector& eigenvalues) {
  const Index n = a.rows();
  if (n == 0) return 1.0;
  ComplexMatrix ab(n, n + b.cols());
  ab << a, b;
  const double scale = spectral_norm(ab);
  if (!(scale > 0.0)) return 0.0;

  // Eigenvalues closer than this share one Hautus test.
  const double cluster = 1e-8 * scale;
  std::vector<Complex> representatives;
  for (Index i = 0; i < eigenvalues.size(); ++i) {
    const Complex lambda = eigenvalues(i);
    const bool seen = std::any_of(representatives.begin(), representatives.end(),
                                  [&](const Complex& z) { return std::abs(z - lambda) <= cluster; });
    if (!seen) representatives.push_back(lambda);
  }

  double margin = 1.0;
  ComplexMatrix hautus = ab;
  for (const Complex& lambda : representatives) {
    hautus.leftCols(n) = a;
    hautus.leftCols(n).diagonal().array() -= lambda;
    const RealVector sv = singular_values(hautus);
    margin = std::min(margin, sv(n - 1) / scale);
  }
  return margin;
}

LyapunovProblem::LyapunovProblem(ComplexMatrix a, ComplexMatrix b, const ProblemOptions& options)
    : a_(std::move(a)), b_(std::move(b)) {
  require_square(a_, "LyapunovProblem");
  require_finite(a_, "LyapunovProblem");
  require_finite(b_, "LyapunovProblem");
  if (a_.rows() == 0) throw Error(ErrorCode::invalid_argument, "LyapunovProblem: A is empty");
  if (b_.rows() != a_.rows() || b_.cols() == 0) {
    throw Error(ErrorCode::dimension_mismatch, "LyapunovProblem: B must be n x r with r >= 1");
  }

  eigenvalues_ = schur_eigenvalues(a_);
  for (Index i = 0; i < eigenvalues_.size(); ++i) {
    if (!(eigenvalues_(i).real() < 0.0)) {
      throw Error(ErrorCode::unstable, "LyapunovProblem: A has an eigenvalue with Re >= 0");
    }
  }

  rank_ = numerical_rank(b_);
  if (rank_ == 0) throw Error(ErrorCode::not_controllable, "LyapunovProblem: B is numerically zero");

  if (options.check_controllability) {
    margin_ = lyapdecay::controllability_margin(a_, b_, eigenvalues_);
    if (!(margin_ > options.controllability_tol)) {
      throw Error(ErrorCode::not_controllable,
                  "LyapunovProblem: (A, B) is not controllable (Hautus margin " + std::to_string(margin_) + ")");
    }
  }
}

SolutionSpectrum solve_lyapunov(const LyapunovProblem& p, const SolveOptions& options) {
  auto kernel = [](const auto& a, const auto& c) { return lyapunov_bartels_stewart(a, c); };
  if (options.precision == Precision::extended) return solve_in<long double>(p, options.tol, kernel);
  return solve_in<double>(p, options.tol, kernel);
}

SolutionSpectrum solve_lyapunov_oracle(const LyapunovProblem& p, const SolveOptions& options) {
  auto kernel = [](const auto& a, const auto& c) { return lyapunov_kronecker(a, c); };
  if (options.precision == Precision::extended) return solve_in<long double>(p, options.tol, kernel);
  return solve_in<double>(p, options.tol, kernel);
}

NormIdentity norm_identity_check(const LyapunovProblem& p, const SolutionSpectrum& sol) {
  const double norm_b = spectral_norm(p.b());
  return {norm_b * norm_b, 2.0 * spectral_norm(p.a()) * sol.s(1)};
}

}  // namespace lyapdecay
