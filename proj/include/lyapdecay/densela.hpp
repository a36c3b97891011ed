// Copyright 2026 The lyapdecay Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "lyapdecay/types.hpp"

// Dense complex factorizations. Every routine accepts any Eigen expression with
// real or complex coefficients and works in std::complex<Real>, where Real is the
// real type of the argument (double or long double in practice).

namespace lyapdecay {

template <typename Derived>
using RealOf = typename Eigen::NumTraits<typename Derived::Scalar>::Real;

template <typename Real>
struct HermitianEigenSystem {
  RealVectorT<Real> eigenvalues;      // descending
  ComplexMatrixT<Real> eigenvectors;  // unitary, column k pairs with eigenvalues(k)
};

template <typename Real>
struct SvdResult {
  RealVectorT<Real> singular_values;  // descending
  ComplexMatrixT<Real> u;
  ComplexMatrixT<Real> v;
};

template <typename Real>
struct GeneralEigenSystem {
  ComplexVectorT<Real> eigenvalues;
  ComplexMatrixT<Real> eigenvectors;  // unit-norm columns
  Real condition = Real(1);           // ||V|| ||V^-1||
  bool defective = false;             // condition >= kDefectiveCap
};

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, std::string_view where) {
  if (!m.allFinite()) {
    throw Error(ErrorCode::non_finite, std::string(where) + ": matrix has non-finite entries");
  }
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, std::string_view where) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::dimension_mismatch,
                std::string(where) + ": expected a square matrix, got " + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()));
  }
}

template <typename Derived>
ComplexMatrixT<RealOf<Derived>> to_complex(const Eigen::MatrixBase<Derived>& m) {
  return m.template cast<std::complex<RealOf<Derived>>>();
}

/// (A + A^*) / 2
template <typename Derived>
ComplexMatrixT<RealOf<Derived>> hermitian_part(const Eigen::MatrixBase<Derived>& a) {
  using Real = RealOf<Derived>;
  const ComplexMatrixT<Real> ac = to_complex(a);
  return (ac + ac.adjoint()) * Real(0.5);
}

template <typename Derived>
HermitianEigenSystem<RealOf<Derived>> hermitian_eig(const Eigen::MatrixBase<Derived>& h,
                                                    RealOf<Derived> tol = RealOf<Derived>(kDefaultTol)) {
  using Real = RealOf<Derived>;
  require_square(h, "hermitian_eig");
  require_finite(h, "hermitian_eig");
  const ComplexMatrixT<Real> hc = to_complex(h);
  if (hc.size() == 0) return {};

  const Real asym = (hc - hc.adjoint()).norm();
  if (asym > tol * hc.norm()) {
    throw Error(ErrorCode::not_hermitian, "hermitian_eig: ||H - H^*|| exceeds tol * ||H||");
  }

  Eigen::SelfAdjointEigenSolver<ComplexMatrixT<Real>> es(hc);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::no_convergence, "hermitian_eig: eigensolver did not converge");
  }
  // Eigen returns ascending order.
  HermitianEigenSystem<Real> out;
  out.eigenvalues = es.eigenvalues().reverse();
  out.eigenvectors = es.eigenvectors().rowwise().reverse();
  return out;
}

template <typename Derived>
RealVectorT<RealOf<Derived>> hermitian_eigenvalues(const Eigen::MatrixBase<Derived>& h,
                                                   RealOf<Derived> tol = RealOf<Derived>(kDefaultTol)) {
  using Real = RealOf<Derived>;
  require_square(h, "hermitian_eigenvalues");
  require_finite(h, "hermitian_eigenvalues");
  const ComplexMatrixT<Real> hc = to_complex(h);
  if (hc.size() == 0) return {};
  if ((hc - hc.adjoint()).norm() > tol * hc.norm()) {
    throw Error(ErrorCode::not_hermitian, "hermitian_eigenvalues: ||H - H^*|| exceeds tol * ||H||");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrixT<Real>> es(hc, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::no_convergence, "hermitian_eigenvalues: eigensolver did not converge");
  }
  return es.eigenvalues().reverse();
}

template <typename Derived>
SvdResult<RealOf<Derived>> svd(const Eigen::MatrixBase<Derived>& m, bool with_vectors = true) {
  using Real = RealOf<Derived>;
  require_finite(m, "svd");
  const ComplexMatrixT<Real> mc = to_complex(m);
  SvdResult<Real> out;
  if (mc.size() == 0) return out;

  const unsigned options = with_vectors ? (Eigen::ComputeThinU | Eigen::ComputeThinV) : 0u;
  Eigen::BDCSVD<ComplexMatrixT<Real>> dec(mc, options);
  if (dec.info() != Eigen::Success) {
    throw Error(ErrorCode::no_convergence, "svd: decomposition did not converge");
  }
  out.singular_values = dec.singularValues();
  if (with_vectors) {
    out.u = dec.matrixU();
    out.v = dec.matrixV();
  }
  return out;
}

template <typename Derived>
RealVectorT<RealOf<Derived>> singular_values(const Eigen::MatrixBase<Derived>& m) {
  return svd(m, false).singular_values;
}

template <typename Derived>
RealOf<Derived> spectral_norm(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return RealOf<Derived>(0);
  return singular_values(m)(0);
}

template <typename Derived>
GeneralEigenSystem<RealOf<Derived>> eig_general(const Eigen::MatrixBase<Derived>& m,
                                                RealOf<Derived> defective_cap = RealOf<Derived>(kDefectiveCap)) {
  using Real = RealOf<Derived>;
  require_square(m, "eig_general");
  require_finite(m, "eig_general");
  GeneralEigenSystem<Real> out;
  if (m.size() == 0) return out;

  Eigen::ComplexEigenSolver<ComplexMatrixT<Real>> es(to_complex(m), true);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::no_convergence, "eig_general: eigensolver did not converge");
  }
  out.eigenvalues = es.eigenvalues();
  out.eigenvectors = es.eigenvectors();

  if (!out.eigenvectors.allFinite()) {
    out.condition = std::numeric_limits<Real>::infinity();
  } else {
    const RealVectorT<Real> sv = singular_values(out.eigenvectors);
    const Real smallest = sv(sv.size() - 1);
    out.condition = smallest > Real(0) ? sv(0) / smallest : std::numeric_limits<Real>::infinity();
  }
  out.defective = !(out.condition < defective_cap);
  return out;
}

/// Solves M X = rhs by partial-pivoting LU.
template <typename DerivedM, typename DerivedR>
ComplexMatrixT<RealOf<DerivedM>> linear_solve(const Eigen::MatrixBase<DerivedM>& m,
                                              const Eigen::MatrixBase<DerivedR>& rhs) {
  using Real = RealOf<DerivedM>;
  require_square(m, "linear_solve");
  require_finite(m, "linear_solve");
  require_finite(rhs, "linear_solve");
  if (rhs.rows() != m.rows()) {
    throw Error(ErrorCode::dimension_mismatch, "linear_solve: rhs row count does not match");
  }
  if (m.size() == 0) return ComplexMatrixT<Real>(0, rhs.cols());

  Eigen::PartialPivLU<ComplexMatrixT<Real>> lu(to_complex(m));
  const Real rcond = lu.rcond();
  const RealVectorT<Real> pivots = lu.matrixLU().diagonal().cwiseAbs();
  if (!(rcond > std::numeric_limits<Real>::epsilon()) ||
      !(pivots.minCoeff() > std::numeric_limits<Real>::epsilon() * pivots.maxCoeff())) {
    throw Error(ErrorCode::singular, "linear_solve: matrix is numerically singular");
  }
  return lu.solve(rhs.template cast<std::complex<Real>>());
}

}  // namespace lyapdecay
