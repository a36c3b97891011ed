// Copyright 2026 The lyapdecay Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace lyapdecay {

using Index = Eigen::Index;

template <typename Real>
using ComplexT = std::complex<Real>;

template <typename Real>
using ComplexMatrixT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using ComplexVectorT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using RealVectorT = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using Complex = ComplexT<double>;
using ComplexMatrix = ComplexMatrixT<double>;
using ComplexVector = ComplexVectorT<double>;
using RealVector = RealVectorT<double>;

/// Relative tolerance used by factorizations unless the caller overrides it.
inline constexpr double kDefaultTol = 1e-10;

/// Eigenvector condition number at or above which a matrix is treated as defective.
inline constexpr double kDefectiveCap = 1e12;

enum class ErrorCode {
  not_hermitian,
  no_convergence,
  singular,
  non_finite,
  dimension_mismatch,
  unstable,
  not_controllable,
  solve_failure,
  too_large,
  level_out_of_range,
  open_contour,
  not_in_right_half_plane,
  generation_failed,
  invalid_argument,
  invalid_config,
};

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_hermitian: return "NotHermitian";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::singular: return "Singular";
    case ErrorCode::non_finite: return "NonFinite";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::unstable: return "Unstable";
    case ErrorCode::not_controllable: return "NotControllable";
    case ErrorCode::solve_failure: return "SolveFailure";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::level_out_of_range: return "LevelOutOfRange";
    case ErrorCode::open_contour: return "OpenContour";
    case ErrorCode::not_in_right_half_plane: return "NotInRightHalfPlane";
    case ErrorCode::generation_failed: return "GenerationFailed";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::invalid_config: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace lyapdecay
