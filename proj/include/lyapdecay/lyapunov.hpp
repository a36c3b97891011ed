// Copyright 2026 The lyapdecay Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <limits>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "lyapdecay/densela.hpp"
#include "lyapdecay/types.hpp"

namespace lyapdecay {

/// Largest dimension accepted by the Kronecker (n^2 x n^2) solver.
inline constexpr Index kKroneckerMaxDim = 64;

/// Relative threshold for numerical rank and controllability decisions.
inline constexpr double kRankTol = 1e-12;

/// Solves T Y + Y T^* = C for upper-triangular T with T(i,i) + conj(T(j,j)) != 0.
/// Columns are resolved right to left; each one is a shifted triangular solve.
template <typename DerivedT, typename DerivedC>
ComplexMatrixT<RealOf<DerivedT>> solve_triangular_lyapunov(const Eigen::MatrixBase<DerivedT>& t,
                                                           const Eigen::MatrixBase<DerivedC>& c) {
  using Real = RealOf<DerivedT>;
  using Matrix = ComplexMatrixT<Real>;
  using Vector = ComplexVectorT<Real>;

  const Index n = t.rows();
  const Matrix tc = to_complex(t);
  const Matrix cc = c.template cast<std::complex<Real>>();
  Matrix y = Matrix::Zero(n, n);
  Matrix shifted = tc;

  for (Index j = n - 1; j >= 0; --j) {
    Vector rhs = cc.col(j);
    const Index tail = n - 1 - j;
    if (tail > 0) rhs.noalias() -= y.rightCols(tail) * tc.row(j).tail(tail).adjoint();
    shifted.diagonal() = tc.diagonal().array() + std::conj(tc(j, j));
    y.col(j) = shifted.template triangularView<Eigen::Upper>().solve(rhs);
  }
  return y;
}

/// Bartels-Stewart: X with A X + X A^* = C, through the complex Schur form of A.
/// Throws Unstable when A has an eigenvalue with nonnegative real part.
template <typename DerivedA, typename DerivedC>
ComplexMatrixT<RealOf<DerivedA>> lyapunov_bartels_stewart(const Eigen::MatrixBase<DerivedA>& a,
                                                          const Eigen::MatrixBase<DerivedC>& c) {
  using Real = RealOf<DerivedA>;
  using Matrix = ComplexMatrixT<Real>;
  require_square(a, "lyapunov_bartels_stewart");
  if (c.rows() != a.rows() || c.cols() != a.cols()) {
    throw Error(ErrorCode::dimension_mismatch, "lyapunov_bartels_stewart: C must match A");
  }
  if (a.size() == 0) return Matrix(0, 0);

  Eigen::ComplexSchur<Matrix> schur(to_complex(a));
  if (schur.info() != Eigen::Success) {
    throw Error(ErrorCode::no_convergence, "lyapunov_bartels_stewart: Schur factorization failed");
  }
  const Matrix& u = schur.matrixU();
  const Matrix& t = schur.matrixT();
  for (Index i = 0; i < t.rows(); ++i) {
    if (!(t(i, i).real() < Real(0))) {
      throw Error(ErrorCode::unstable, "lyapunov_bartels_stewart: A has an eigenvalue with Re >= 0");
    }
  }

  const Matrix ct = u.adjoint() * c.template cast<std::complex<Real>>() * u;
  const Matrix y = solve_triangular_lyapunov(t, ct);
  return u * y * u.adjoint();
}

/// Solves (I (x) A + conj(A) (x) I) vec(X) = vec(C) directly. O(n^6); n <= kKroneckerMaxDim.
template <typename DerivedA, typename DerivedC>
ComplexMatrixT<RealOf<DerivedA>> lyapunov_kronecker(const Eigen::MatrixBase<DerivedA>& a,
                                                    const Eigen::MatrixBase<DerivedC>& c) {
  using Real = RealOf<DerivedA>;
  using Matrix = ComplexMatrixT<Real>;
  using Vector = ComplexVectorT<Real>;
  require_square(a, "lyapunov_kronecker");
  const Index n = a.rows();
  if (n > kKroneckerMaxDim) {
    throw Error(ErrorCode::too_large, "lyapunov_kronecker: n = " + std::to_string(n) + " exceeds " +
                                          std::to_string(kKroneckerMaxDim));
  }
  if (n == 0) return Matrix(0, 0);

  const Matrix ac = to_complex(a);
  Matrix op = Matrix::Zero(n * n, n * n);
  for (Index j = 0; j < n; ++j) {
    op.block(j * n, j * n, n, n) += ac;
    for (Index k = 0; k < n; ++k) {
      op.block(j * n, k * n, n, n).diagonal().array() += std::conj(ac(j, k));
    }
  }
  const Matrix cc = c.template cast<std::complex<Real>>();
  const Vector rhs = Eigen::Map<const Vector>(cc.data(), n * n);

  Eigen::PartialPivLU<Matrix> lu(op);
  if (!(lu.rcond() > std::numeric_limits<Real>::epsilon())) {
    throw Error(ErrorCode::singular, "lyapunov_kronecker: vectorized operator is singular");
  }
  Vector v = lu.solve(rhs);
  // Partial pivoting loses digits on strongly nonnormal A; two refinement sweeps recover them.
  for (int sweep = 0; sweep < 2; ++sweep) v += lu.solve(rhs - op * v);
  return Eigen::Map<const Matrix>(v.data(), n, n);
}

struct ProblemOptions {
  double controllability_tol = kRankTol;
  bool check_controllability = true;
};

/// min over eigenvalues lambda of A of sigma_min([A - lambda I, B]) / ||[A, B]||.
/// Zero exactly when (A, B) is uncontrollable (Hautus test).
double controllability_margin(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexVector& eigenvalues);

/// Number of singular values above tol * sigma_1.
Index numerical_rank(const ComplexMatrix& m, double tol = kRankTol);

/// The pair (A, B) for A X + X A^* = -B B^*. Construction validates stability and controllability.
class LyapunovProblem {
 public:
  LyapunovProblem(ComplexMatrix a, ComplexMatrix b, const ProblemOptions& options = {});

  const ComplexMatrix& a() const { return a_; }
  const ComplexMatrix& b() const { return b_; }
  Index n() const { return a_.rows(); }
  /// Numerical rank r of B.
  Index rank() const { return rank_; }
  const ComplexVector& eigenvalues() const { return eigenvalues_; }
  double controllability_margin() const { return margin_; }

 private:
  ComplexMatrix a_;
  ComplexMatrix b_;
  ComplexVector eigenvalues_;
  Index rank_ = 0;
  double margin_ = 0.0;
};

enum class Precision {
  standard,  // double
  extended,  // long double throughout the solve and the eigenvalues of X
};

struct SolveOptions {
  Precision precision = Precision::standard;
  double tol = kDefaultTol;
};

struct SolutionSpectrum {
  ComplexMatrix x;
  RealVector singular_values;  // s_1 >= ... >= s_n
  RealVector eigenvalues;      // of X, descending; equal to singular_values when X > 0
  double residual = 0.0;       // ||A X + X A^* + B B^*||
  double relative_residual = 0.0;  // residual / (2 ||A|| ||X|| + ||B||^2)
  bool positive_definite = false;

  Index n() const { return singular_values.size(); }
  /// s_k, 1-based.
  double s(Index k) const { return singular_values(k - 1); }
  /// s_k / s_1, 1-based.
  double ratio(Index k) const { return singular_values(k - 1) / singular_values(0); }
};

SolutionSpectrum solve_lyapunov(const LyapunovProblem& p, const SolveOptions& options = {});

/// Independent path through the vectorized n^2 x n^2 system. Throws TooLarge for n > 64.
SolutionSpectrum solve_lyapunov_oracle(const LyapunovProblem& p, const SolveOptions& options = {});

/// Both sides of ||B||^2 = ||A X + X A^*|| <= 2 ||A|| s_1.
struct NormIdentity {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds(double tol = 1e-10) const { return lhs <= rhs * (1.0 + tol); }
};

NormIdentity norm_identity_check(const LyapunovProblem& p, const SolutionSpectrum& sol);

}  // namespace lyapdecay
