// Copyright 2026 The lyapdecay Authors
// SPDX-License-Identifier: Apache-2.0

#include "lyapdecay/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/QR>
#include <boost/math/tools/minima.hpp>

namespace lyapdecay {

namespace {

ComplexMatrix bidiagonal(Index n, double diagonal, double super) {
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  a.diagonal().setConstant(diagonal);
  if (n > 1) a.diagonal(1).setConstant(super);
  return a;
}

// Eigenvalues of a tridiagonal Toeplitz matrix with diagonal d and symmetric off-diagonal e.
RealVector toeplitz_tridiagonal_spectrum(Index n, double d, double e) {
  RealVector omega(n);
  for (Index k = 1; k <= n; ++k) {
    omega(k - 1) = d + 2.0 * e * std::cos(k * std::numbers::pi / static_cast<double>(n + 1));
  }
  return omega;
}

}  // namespace

std::string_view to_string(ModelFamily family) {
  switch (family) {
    case ModelFamily::fd_operator: return "fd-operator";
    case ModelFamily::jordan: return "jordan";
    case ModelFamily::two_by_two: return "two-by-two";
    case ModelFamily::random: return "random";
    case ModelFamily::custom: return "custom";
  }
  return "unknown";
}

ModelProblem fd_operator(Index n) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "fd_operator: n must be >= 2");
  const double nd = static_cast<double>(n);
  ComplexMatrix b = ComplexMatrix::Constant(n, 1, Complex(1.0 / std::sqrt(nd), 0.0));
  ModelProblem m{ModelFamily::fd_operator, n, nd, 0.0, LyapunovProblem(bidiagonal(n, -1.0 - nd, nd), std::move(b))};
  const double radius = nd * std::cos(std::numbers::pi / (nd + 1.0));
  m.numerical_range = Disk{Complex(-1.0 - nd, 0.0), radius};
  m.numerical_abscissa = -1.0 - nd * (1.0 - std::cos(std::numbers::pi / (nd + 1.0)));
  m.omega = toeplitz_tridiagonal_spectrum(n, -1.0 - nd, 0.5 * nd);
  return m;
}

ModelProblem jordan_family(Index n, double alpha, std::optional<ComplexMatrix> b) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "jordan_family: n must be >= 2");
  if (!(alpha > 0.0)) throw Error(ErrorCode::invalid_argument, "jordan_family: alpha must be positive");
  ComplexMatrix rhs = b ? std::move(*b) : ComplexMatrix::Ones(n, 1);
  ModelProblem m{ModelFamily::jordan, n, alpha, 0.0, LyapunovProblem(bidiagonal(n, -1.0, alpha), std::move(rhs))};
  const double nd = static_cast<double>(n);
  m.numerical_range = Disk{Complex(-1.0, 0.0), alpha * std::cos(std::numbers::pi / (nd + 1.0))};
  m.numerical_abscissa = -1.0 + alpha * std::cos(std::numbers::pi / (nd + 1.0));
  m.omega = toeplitz_tridiagonal_spectrum(n, -1.0, 0.5 * alpha);
  return m;
}

ComplexMatrix two_by_two_solution(double alpha, double t) {
  ComplexMatrix x(2, 2);
  x << 2.0 * t * t + 2.0 * alpha * t + alpha * alpha, alpha + 2.0 * t, alpha + 2.0 * t, 2.0;
  return x * 0.25;
}

double two_by_two_ratio(double alpha, double t) {
  const ComplexMatrix x = two_by_two_solution(alpha, t);
  const double tr = (x(0, 0) + x(1, 1)).real();
  const double det = (x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0)).real();
  const double root = std::sqrt(std::max(tr * tr - 4.0 * det, 0.0));
  return (tr - root) / (tr + root);
}

double worst_case_ratio(double alpha) { return alpha <= 2.0 ? alpha * alpha / 4.0 : 4.0 / (alpha * alpha); }

double two_by_two_norm(double alpha) {
  return std::sqrt(1.0 + alpha * alpha / 2.0 + alpha * std::sqrt(alpha * alpha / 4.0 + 1.0));
}

ModelProblem two_by_two(double alpha, double t) {
  if (!(alpha > 0.0)) throw Error(ErrorCode::invalid_argument, "two_by_two: alpha must be positive");
  ComplexMatrix b(2, 1);
  b << t, 1.0;
  ModelProblem m{ModelFamily::two_by_two, 2, alpha, t, LyapunovProblem(bidiagonal(2, -1.0, alpha), std::move(b))};
  m.numerical_range = Disk{Complex(-1.0, 0.0), alpha / 2.0};
  m.numerical_abscissa = alpha / 2.0 - 1.0;
  m.omega = RealVector(2);
  *m.omega << alpha / 2.0 - 1.0, -alpha / 2.0 - 1.0;
  m.exact_x = two_by_two_solution(alpha, t);
  m.exact_ratio = two_by_two_ratio(alpha, t);
  return m;
}

WorstCase worst_case_t(double alpha) {
  if (!(alpha > 0.0)) throw Error(ErrorCode::invalid_argument, "worst_case_t: alpha must be positive");
  WorstCase w;
  w.t_star = -alpha / 2.0;
  w.ratio = worst_case_ratio(alpha);

  // Coarse scan for the bracket, then Brent on the neighbouring interval.
  const double lo = -10.0 * alpha;
  const double hi = 10.0 * alpha;
  constexpr int samples = 4001;
  const double step = (hi - lo) / (samples - 1);
  int best = 0;
  double best_ratio = -1.0;
  for (int i = 0; i < samples; ++i) {
    const double r = two_by_two_ratio(alpha, lo + i * step);
    if (r > best_ratio) {
      best_ratio = r;
      best = i;
    }
  }
  const double a = lo + std::max(best - 1, 0) * step;
  const double b = lo + std::min(best + 1, samples - 1) * step;
  const auto [t_opt, neg_ratio] = boost::math::tools::brent_find_minima(
      [alpha](double t) { return -two_by_two_ratio(alpha, t); }, a, b, std::numeric_limits<double>::digits);
  w.t_numeric = t_opt;
  w.ratio_numeric = -neg_ratio;
  return w;
}

KrylovFactorization companion_krylov(const LyapunovProblem& p, Index max_dim, bool cap_override) {
  const Index n = p.n();
  if (p.b().cols() != 1) throw Error(ErrorCode::invalid_argument, "companion_krylov: B must have one column");
  if (n > max_dim && !cap_override) {
    throw Error(ErrorCode::too_large, "companion_krylov: n = " + std::to_string(n) + " exceeds the cap " +
                                          std::to_string(max_dim) + " (override to force)");
  }

  KrylovFactorization f;
  f.krylov.resize(n, n);
  f.krylov.col(0) = p.b().col(0);
  for (Index j = 1; j < n; ++j) f.krylov.col(j) = p.a() * f.krylov.col(j - 1);
  if (!(singular_values(f.krylov)(n - 1) > 0.0)) {
    throw Error(ErrorCode::not_controllable, "companion_krylov: Krylov matrix is singular");
  }

  // Expand prod (z - lambda_i); poly(j) is the coefficient of z^j.
  ComplexVector poly = ComplexVector::Zero(n + 1);
  poly(0) = 1.0;
  for (Index i = 0; i < n; ++i) {
    const Complex lambda = p.eigenvalues()(i);
    for (Index j = i + 1; j >= 1; --j) poly(j) = poly(j - 1) - lambda * poly(j);
    poly(0) = -lambda * poly(0);
  }
  f.coefficients = poly.head(n);

  f.companion = ComplexMatrix::Zero(n, n);
  if (n > 1) f.companion.diagonal(-1).setOnes();
  f.companion.col(n - 1) = -f.coefficients;

  ComplexMatrix e1 = ComplexMatrix::Zero(n, n);
  e1(0, 0) = -1.0;
  f.gram = lyapunov_bartels_stewart(f.companion, e1);
  f.gram = (f.gram + f.gram.adjoint()).eval() * 0.5;
  return f;
}

LyapunovProblem random_stable(Index n, Index r, std::uint64_t seed, double nonnormality,
                              const RandomStableOptions& options) {
  if (n < 1 || r < 1 || r > n) throw Error(ErrorCode::invalid_argument, "random_stable: need n >= 1, 1 <= r <= n");
  if (!(nonnormality >= 0.0)) throw Error(ErrorCode::invalid_argument, "random_stable: nonnormality must be >= 0");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> log_re(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> im_part(-5.0, 5.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto gaussian = [&]() -> Complex {
    if (options.real) return {normal(rng), 0.0};
    const double re = normal(rng);
    return Complex(re, normal(rng)) / std::sqrt(2.0);
  };

  // Diagonal (or 2x2 real-block) part; paired[i] marks the first row of a conjugate pair.
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  std::vector<bool> paired(static_cast<std::size_t>(n), false);
  for (Index i = 0; i < n; ++i) {
    const double re = -std::exp(log_re(rng));
    const double im = im_part(rng);
    if (!options.real) {
      a(i, i) = Complex(re, im);
    } else if (i + 1 < n && coin(rng) < 0.5) {
      a(i, i) = re;
      a(i + 1, i + 1) = re;
      a(i, i + 1) = im;
      a(i + 1, i) = -im;
      paired[static_cast<std::size_t>(i)] = true;
      ++i;
    } else {
      a(i, i) = re;
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (j == i + 1 && paired[static_cast<std::size_t>(i)]) continue;
      a(i, j) += nonnormality * gaussian();
    }
  }

  if (options.rotate) {
    ComplexMatrix g(n, n);
    for (Index j = 0; j < n; ++j) {
      for (Index i = 0; i < n; ++i) g(i, j) = gaussian();
    }
    const ComplexMatrix q = Eigen::HouseholderQR<ComplexMatrix>(g).householderQ();
    a = q * a * q.adjoint();
    if (options.real) a = a.real().cast<Complex>();
  }

  for (int attempt = 0; attempt < 10; ++attempt) {
    ComplexMatrix b(n, r);
    for (Index j = 0; j < r; ++j) {
      for (Index i = 0; i < n; ++i) b(i, j) = gaussian();
    }
    try {
      return LyapunovProblem(a, std::move(b));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::not_controllable) throw;
    }
  }
  throw Error(ErrorCode::generation_failed, "random_stable: no controllable B after 10 draws");
}

}  // namespace lyapdecay
