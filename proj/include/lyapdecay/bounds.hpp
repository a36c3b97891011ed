// Copyright 2026 The lyapdecay Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lyapdecay/lyapunov.hpp"
#include "lyapdecay/spectral.hpp"
#include "lyapdecay/types.hpp"

namespace lyapdecay {

/// Best proven value of Crouzeix's constant.
inline constexpr double kCrouzeixConstant = 11.08;

/// Slack allowed when checking that a valid bound dominates the realized ratio.
inline constexpr double kSoundnessSlack = 1e-9;

/// Default dimension cap for the Krylov/companion bound.
inline constexpr Index kKrylovMaxDim = 12;

enum class ShiftStrategy { user, single_point, log_spaced };

/// ADI shifts mu_j in the open right half-plane.
struct ShiftSet {
  std::vector<Complex> shifts;
  ShiftStrategy strategy = ShiftStrategy::user;

  /// Validates Re(mu_j) > 0; throws NotInRightHalfPlane otherwise.
  static ShiftSet user(std::vector<Complex> shifts);
  std::size_t size() const { return shifts.size(); }
};

/// single_point: sqrt(a b) repeated k times, where [-b, -a] spans Re sigma(A).
/// log_spaced: k values log-uniform on [a, b]. user: `user_shifts` after validation.
ShiftSet make_shifts(const ComplexMatrix& a, ShiftStrategy strategy, int k, std::vector<Complex> user_shifts = {});

/// prod_j |z + mu_j|^2 / |z - conj(mu_j)|^2 over the first k shifts.
double phi_modulus_squared(Complex z, std::span<const Complex> shifts);

/// phi_k(A) = prod_j (A + mu_j I)(A - conj(mu_j) I)^{-1}.
ComplexMatrix phi_matrix(const ComplexMatrix& a, std::span<const Complex> shifts);

/// ||phi_k(A)|| for the full shift set.
double phi_norm(const ComplexMatrix& a, const ShiftSet& shifts);

struct BoundEntry {
  Index index = 0;                // bounds s_index / s_1 (or s_index itself for absolute reports)
  Index k = 0;                    // shifts used, or the bound's own k
  double bound = 0.0;
  std::optional<double> actual;   // realized value; empty when index > n
  bool valid = true;
  bool vacuous = false;           // bound >= 1 on a ratio
  std::optional<double> epsilon;  // pseudospectral level that produced the bound
};

struct BoundReport {
  std::string name;
  std::string parameters;
  std::vector<BoundEntry> entries;
  bool valid = true;
  std::string note;

  /// Entries that are valid, have an actual value, and fall below it by more than slack.
  std::vector<BoundEntry> violations(double slack = kSoundnessSlack) const;
  bool sound(double slack = kSoundnessSlack) const { return violations(slack).empty(); }
  const BoundEntry* find(Index index) const;
};

/// ||phi_k(A)||^2 bounds s_{kr+1}/s_1, for every prefix of the shift set (k = 0 gives 1).
BoundReport adi_error_bound(const LyapunovProblem& p, const SolutionSpectrum& sol, const ShiftSet& shifts);

/// kappa(V)^2 max over sigma(A) of |phi_k|^2. Invalid entries when A is defective.
BoundReport eig_bound(const LyapunovProblem& p, const SolutionSpectrum& sol, const ShiftSet& shifts);

/// C^2 max over the W(A) boundary of |phi_k|^2. Invalid when a pole conj(mu_j) lies in W(A).
BoundReport nr_bound(const LyapunovProblem& p, const SolutionSpectrum& sol, const ShiftSet& shifts,
                     const NumericalRangeBoundary& nr, double crouzeix = kCrouzeixConstant);

/// (L_eps^2 / (4 pi^2 eps^2)) max over the eps-contour of |phi_k|^2. Invalid when a pole is enclosed.
BoundReport psa_bound(const LyapunovProblem& p, const SolutionSpectrum& sol, const ShiftSet& shifts,
                      const EpsilonContour& contour);

/// psa_bound at every eps in `epsilons` (skipping levels whose contour cannot be formed);
/// each index keeps the smallest valid bound across the sweep.
BoundReport psa_bound_sweep(const LyapunovProblem& p, const SolutionSpectrum& sol, const ShiftSet& shifts,
                            const PseudospectrumGrid& grid, std::span<const double> epsilons);

/// Greedy ordering that makes delta_1 >= delta_2 >= ... (each step picks the largest next delta).
std::vector<Complex> asz_ordering(std::span<const Complex> eigenvalues);

/// delta_k = -1/(2 Re l_k) prod_{j<k} |l_k - l_j|^2 / |l_k + conj(l_j)|^2 for the given order.
std::vector<double> asz_deltas(std::span<const Complex> ordered);

/// s_{k+1}/s_1 <= 2 (n-k)^2 ||A|| kappa(V)^2 delta_{k+1}. Requires r = 1 and diagonalizable A.
BoundReport asz_bound(const LyapunovProblem& p, const SolutionSpectrum& sol);

/// s_{k+1} <= (n-k)^2 kappa(V)^2 ||B||^2 delta_{k+1}, compared against s_{k+1} itself.
BoundReport asz_bound_absolute(const LyapunovProblem& p, const SolutionSpectrum& sol);

struct KrylovOptions {
  Index max_dim = kKrylovMaxDim;
  bool cap_override = false;
  double factorization_tol = 1e-4;
};

/// s_k/s_1 <= sigma_k(K)^2 ||A|| (2 ||G|| / ||B B^*||), with X = K G K^* verified first.
BoundReport krylov_bound(const LyapunovProblem& p, const SolutionSpectrum& sol, const KrylovOptions& options = {});

struct AbscissaBound {
  Index k = 0;
  double lower = 0.0;  // s_k/s_1 - 1 - ||B||^2 / (2 s_1 ||A||)
  double value = 0.0;  // omega_k / ||A||
  double upper = 0.0;  // 1 - s_{n-k+1}/s_1
  bool holds(double slack = kSoundnessSlack) const { return lower <= value + slack && value <= upper + slack; }
};

/// Two-sided bracket on every omega_k / ||A||.
std::vector<AbscissaBound> abscissa_bounds(const LyapunovProblem& p, const SolutionSpectrum& sol);

struct AbscissaStrip {
  double lower = 0.0;  // -||B||^2 / (2 s_1)
  double omega = 0.0;  // numerical abscissa
  double upper = 0.0;  // (s_1 - s_n)/(s_1 + s_n) ||A||
  bool holds(double slack = kSoundnessSlack) const { return lower <= omega + slack && omega <= upper + slack; }
};

AbscissaStrip strip_endpoints(double norm_a, double norm_b, double s1, double sn);
AbscissaStrip cor_s1n(const LyapunovProblem& p, const SolutionSpectrum& sol);

/// s_{n-k+1}/s_1 <= 1 - omega_k/||A||; entries with omega_k <= 0 are flagged vacuous.
BoundReport cor_genbnd(const LyapunovProblem& p, const SolutionSpectrum& sol);

}  // namespace lyapdecay
