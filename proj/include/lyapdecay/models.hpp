// Copyright 2026 The lyapdecay Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "lyapdecay/lyapunov.hpp"
#include "lyapdecay/types.hpp"

namespace lyapdecay {

enum class ModelFamily { fd_operator, jordan, two_by_two, random, custom };

std::string_view to_string(ModelFamily family);

struct Disk {
  Complex center;
  double radius = 0.0;
};

/// A generated Lyapunov instance together with whatever closed forms are known for it.
struct ModelProblem {
  ModelFamily family = ModelFamily::custom;
  Index n = 0;
  double alpha = 0.0;
  double t = 0.0;
  LyapunovProblem problem;

  std::optional<Disk> numerical_range{};      // W(A) when it is a disk
  std::optional<double> numerical_abscissa{};
  std::optional<RealVector> omega{};          // eigenvalues of (A + A^*)/2, descending
  std::optional<ComplexMatrix> exact_x{};
  std::optional<double> exact_ratio{};        // s_2 / s_1
};

/// Forward-difference discretization of d/dx - 1 on [0, 1] with u(1) = 0: diagonal -1-n,
/// superdiagonal n. B is the constant vector of unit norm.
ModelProblem fd_operator(Index n);

/// Jordan block with diagonal -1 and superdiagonal alpha. Default B = [1, ..., 1]^T.
ModelProblem jordan_family(Index n, double alpha, std::optional<ComplexMatrix> b = std::nullopt);

/// A = [[-1, alpha], [0, -1]], B = [t, 1]^T, with the exact solution attached.
ModelProblem two_by_two(double alpha, double t);

/// Closed-form X for two_by_two(alpha, t).
ComplexMatrix two_by_two_solution(double alpha, double t);

/// s_2/s_1 of the closed-form X via (tr - sqrt(tr^2 - 4 det)) / (tr + sqrt(tr^2 - 4 det)).
double two_by_two_ratio(double alpha, double t);

/// alpha^2/4 for alpha <= 2, 4/alpha^2 beyond.
double worst_case_ratio(double alpha);

/// ||A|| of the 2x2 Jordan block: sqrt(1 + alpha^2/2 + alpha sqrt(alpha^2/4 + 1)).
double two_by_two_norm(double alpha);

struct WorstCase {
  double t_star = 0.0;         // -alpha/2
  double ratio = 0.0;          // worst_case_ratio(alpha)
  double t_numeric = 0.0;      // argmax of two_by_two_ratio over t in [-10 alpha, 10 alpha]
  double ratio_numeric = 0.0;
};

WorstCase worst_case_t(double alpha);

/// X = K G K^* with K = [B AB ... A^{n-1}B], A_c the companion matrix of the
/// characteristic polynomial of A, and A_c G + G A_c^* = -e_1 e_1^*.
struct KrylovFactorization {
  ComplexMatrix krylov;
  ComplexMatrix companion;
  ComplexMatrix gram;
  ComplexVector coefficients;  // c_0, ..., c_{n-1} of the monic characteristic polynomial

  ComplexMatrix product() const { return krylov * gram * krylov.adjoint(); }
};

KrylovFactorization companion_krylov(const LyapunovProblem& p, Index max_dim = 12, bool cap_override = false);

struct RandomStableOptions {
  bool real = false;    // real A and B; complex eigenvalues come in conjugate pairs
  bool rotate = false;  // apply a random unitary similarity to Lambda + alpha S
};

/// A = Lambda + alpha S (optionally unitarily rotated) with Re lambda log-uniform in
/// [-10, -0.1], Im lambda uniform in [-5, 5], S random strictly upper triangular.
/// B is redrawn (at most 10 times) until (A, B) is controllable.
LyapunovProblem random_stable(Index n, Index r, std::uint64_t seed, double nonnormality,
                              const RandomStableOptions& options = {});

}  // namespace lyapdecay
