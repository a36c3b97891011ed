// Copyright 2026 The lyapdecay Authors
// SPDX-License-Identifier: Apache-2.0

#include "lyapdecay/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

#include "lyapdecay/densela.hpp"
#include "lyapdecay/models.hpp"

namespace lyapdecay {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

BoundEntry make_entry(const SolutionSpectrum& sol, Index index, Index k, double bound, bool valid) {
  BoundEntry e;
  e.index = index;
  e.k = k;
  e.bound = bound;
  e.valid = valid;
  e.vacuous = !(bound < 1.0);
  if (index >= 1 && index <= sol.n()) e.actual = sol.ratio(index);
  return e;
}

std::string describe(const ShiftSet& shifts) {
  std::ostringstream os;
  os.precision(6);
  os << "shifts=[";
  for (std::size_t j = 0; j < shifts.size(); ++j) {
    if (j) os << ' ';
    os << shifts.shifts[j].real();
    if (shifts.shifts[j].imag() != 0.0) os << (shifts.shifts[j].imag() > 0 ? "+" : "") << shifts.shifts[j].imag() << 'i';
  }
  os << ']';
  return os.str();
}

// A = U T U^* with T upper triangular; phi_k(A) = U phi_k(T) U^* has the same norm as phi_k(T).
std::pair<ComplexMatrix, ComplexMatrix> schur_form(const ComplexMatrix& a) {
  Eigen::ComplexSchur<ComplexMatrix> schur(a);
  if (schur.info() != Eigen::Success) throw Error(ErrorCode::no_convergence, "phi: Schur factorization failed");
  return {schur.matrixU(), schur.matrixT()};
}

// m <- (T + mu I)(T - conj(mu) I)^{-1} m. The shifted factor is nonsingular whenever sigma(T) avoids conj(mu).
void apply_factor(const ComplexMatrix& t, Complex mu, ComplexMatrix& m) {
  ComplexMatrix denominator = t;
  denominator.diagonal().array() -= std::conj(mu);
  for (Index i = 0; i < t.rows(); ++i) {
    if (denominator(i, i) == 0.0) throw Error(ErrorCode::singular, "phi: conj(mu) is an eigenvalue of A");
  }
  ComplexMatrix numerator = t;
  numerator.diagonal().array() += mu;
  m = numerator.triangularView<Eigen::Upper>() * denominator.triangularView<Eigen::Upper>().solve(m);
}

// max over the point set of |phi_k|^2 for every prefix k = 0..K.
std::vector<double> prefix_maxima(std::span<const Complex> points, std::span<const Complex> shifts) {
  std::vector<double> best(shifts.size() + 1, 0.0);
  for (const Complex& z : points) {
    double value = 1.0;
    best[0] = std::max(best[0], value);
    for (std::size_t j = 0; j < shifts.size(); ++j) {
      value *= std::norm(z + shifts[j]) / std::norm(z - std::conj(shifts[j]));
      best[j + 1] = std::max(best[j + 1], value);
    }
  }
  return best;
}

BoundReport prefix_report(std::string name, const LyapunovProblem& p, const SolutionSpectrum& sol,
                          const ShiftSet& shifts, const std::vector<double>& values, double factor, bool valid) {
  BoundReport report;
  report.name = std::move(name);
  report.parameters = describe(shifts);
  report.valid = valid;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const Index index = static_cast<Index>(k) * p.rank() + 1;
    report.entries.push_back(make_entry(sol, index, static_cast<Index>(k), factor * values[k], valid));
  }
  return report;
}

}  // namespace

ShiftSet ShiftSet::user(std::vector<Complex> shifts) {
  for (const Complex& mu : shifts) {
    if (!(mu.real() > 0.0) || !std::isfinite(mu.imag())) {
      throw Error(ErrorCode::not_in_right_half_plane, "ShiftSet: every shift needs Re(mu) > 0");
    }
  }
  return {std::move(shifts), ShiftStrategy::user};
}

ShiftSet make_shifts(const ComplexMatrix& a, ShiftStrategy strategy, int k, std::vector<Complex> user_shifts) {
  if (strategy == ShiftStrategy::user) return ShiftSet::user(std::move(user_shifts));
  if (k < 0) throw Error(ErrorCode::invalid_argument, "make_shifts: k must be >= 0");
  require_square(a, "make_shifts");

  const ComplexVector lambda = eig_general(a).eigenvalues;
  double lo = kInf;
  double hi = 0.0;
  for (Index i = 0; i < lambda.size(); ++i) {
    if (!(lambda(i).real() < 0.0)) throw Error(ErrorCode::unstable, "make_shifts: A is not stable");
    lo = std::min(lo, -lambda(i).real());
    hi = std::max(hi, -lambda(i).real());
  }

  ShiftSet out;
  out.strategy = strategy;
  const double geometric = std::sqrt(lo * hi);
  for (int j = 0; j < k; ++j) {
    if (strategy == ShiftStrategy::single_point || k == 1) {
      out.shifts.emplace_back(geometric, 0.0);
    } else {
      out.shifts.emplace_back(lo * std::pow(hi / lo, static_cast<double>(j) / (k - 1)), 0.0);
    }
  }
  return out;
}

double phi_modulus_squared(Complex z, std::span<const Complex> shifts) {
  double value = 1.0;
  for (const Complex& mu : shifts) value *= std::norm(z + mu) / std::norm(z - std::conj(mu));
  return value;
}

ComplexMatrix phi_matrix(const ComplexMatrix& a, std::span<const Complex> shifts) {
  require_square(a, "phi_matrix");
  const auto [u, t] = schur_form(a);
  ComplexMatrix m = ComplexMatrix::Identity(a.rows(), a.cols());
  for (const Complex& mu : shifts) apply_factor(t, mu, m);
  return u * m * u.adjoint();
}

double phi_norm(const ComplexMatrix& a, const ShiftSet& shifts) { return spectral_norm(phi_matrix(a, shifts.shifts)); }

std::vector<BoundEntry> BoundReport::violations(double slack) const {
  std::vector<BoundEntry> out;
  for (const BoundEntry& e : entries) {
    if (e.valid && e.actual && e.bound < *e.actual - slack) out.push_back(e);
  }
  return out;
}

const BoundEntry* BoundReport::find(Index index) const {
  for (const BoundEntry& e : entries) {
    if (e.index == index) return &e;
  }
  return nullptr;
}

BoundReport adi_error_bound(const LyapunovProblem& p, const SolutionSpectrum& sol, const ShiftSet& shifts) {
  const auto [u, t] = schur_form(p.a());
  std::vector<double> values{1.0};
  ComplexMatrix m = ComplexMatrix::Identity(p.n(), p.n());
  for (const Complex& mu : shifts.shifts) {
    apply_factor(t, mu, m);
    const double norm = spectral_norm(m);
    values.push_back(norm * norm);
  }
  return prefix_report("adi", p, sol, shifts, values, 1.0, true);
}

BoundReport eig_bound(const LyapunovProblem& p, const SolutionSpectrum& sol, const ShiftSet& shifts) {
  const auto es = eig_general(p.a());
  const std::vector<Complex> lambda(es.eigenvalues.data(), es.eigenvalues.data() + es.eigenvalues.size());
  const std::vector<double> maxima = prefix_maxima(lambda, shifts.shifts);
  if (es.defective) {
    BoundReport r = prefix_report("eig", p, sol, shifts, std::vector<double>(maxima.size(), kInf), 1.0, false);
    r.note = "A is defective (kappa(V) >= 1e12)";
    return r;
  }
  BoundReport r = prefix_report("eig", p, sol, shifts, maxima, es.condition * es.condition, true);
  r.parameters += " kappa=" + std::to_string(es.condition);
  return r;
}

BoundReport nr_bound(const LyapunovProblem& p, const SolutionSpectrum& sol, const ShiftSet& shifts,
                     const NumericalRangeBoundary& nr, double crouzeix) {
  bool valid = true;
  if (nr.abscissa() >= 0.0) {
    // A pole within one boundary spacing of the polygon counts as enclosed.
    double spacing = 0.0;
    for (std::size_t j = 0; j < nr.points.size(); ++j) {
      spacing = std::max(spacing, std::abs(nr.points[(j + 1) % nr.points.size()] - nr.points[j]));
    }
    for (const Complex& mu : shifts.shifts) {
      if (nr.contains(std::conj(mu), spacing)) valid = false;
    }
  }
  const std::vector<double> maxima = prefix_maxima(nr.points, shifts.shifts);
  BoundReport r = prefix_report("nr", p, sol, shifts, valid ? maxima : std::vector<double>(maxima.size(), kInf),
                                crouzeix * crouzeix, valid);
  r.parameters += " C=" + std::to_string(crouzeix);
  if (!valid) r.note = "a pole conj(mu_j) lies in W(A)";
  return r;
}

BoundReport psa_bound(const LyapunovProblem& p, const SolutionSpectrum& sol, const ShiftSet& shifts,
                      const EpsilonContour& contour) {
  bool valid = contour.total_length > 0.0;
  bool pole_inside = false;
  for (const Complex& mu : shifts.shifts) {
    if (contour.encloses(std::conj(mu))) pole_inside = true;
  }
  // An under-resolved grid can drop whole components of sigma_eps; every eigenvalue must be enclosed.
  bool missed = false;
  for (Index i = 0; i < p.eigenvalues().size(); ++i) {
    if (!contour.encloses(p.eigenvalues()(i))) missed = true;
  }
  valid = valid && !pole_inside && !missed;
  std::vector<Complex> points;
  for (const auto& line : contour.polylines) points.insert(points.end(), line.begin(), line.end());
  const std::vector<double> maxima = prefix_maxima(points, shifts.shifts);

  const double eps = contour.epsilon;
  const double factor = contour.total_length * contour.total_length / (4.0 * std::numbers::pi * std::numbers::pi * eps * eps);
  BoundReport r = prefix_report("psa", p, sol, shifts, valid ? maxima : std::vector<double>(maxima.size(), kInf),
                                factor, valid);
  r.parameters += " eps=" + std::to_string(eps) + " L=" + std::to_string(contour.total_length);
  for (BoundEntry& e : r.entries) e.epsilon = eps;
  if (pole_inside) r.note = "a pole conj(mu_j) lies inside the eps-pseudospectrum";
  if (missed) r.note = "contour misses part of the spectrum; refine the grid";
  return r;
}

BoundReport psa_bound_sweep(const LyapunovProblem& p, const SolutionSpectrum& sol, const ShiftSet& shifts,
                            const PseudospectrumGrid& grid, std::span<const double> epsilons) {
  BoundReport best;
  best.name = "psa";
  best.parameters = describe(shifts) + " eps-sweep";
  best.valid = false;
  for (std::size_t k = 0; k <= shifts.size(); ++k) {
    best.entries.push_back(make_entry(sol, static_cast<Index>(k) * p.rank() + 1, static_cast<Index>(k), kInf, false));
  }
  for (const double eps : epsilons) {
    EpsilonContour contour;
    try {
      contour = epsilon_contour(grid, eps);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::level_out_of_range && e.code() != ErrorCode::open_contour) throw;
      best.note += "eps=" + std::to_string(eps) + " skipped (" + std::string(to_string(e.code())) + "); ";
      continue;
    }
    const BoundReport r = psa_bound(p, sol, shifts, contour);
    if (!r.valid) {
      best.note += "eps=" + std::to_string(eps) + " invalid; ";
      continue;
    }
    best.valid = true;
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
      BoundEntry& b = best.entries[i];
      if (!b.valid || r.entries[i].bound < b.bound) {
        b.bound = r.entries[i].bound;
        b.valid = true;
        b.vacuous = !(b.bound < 1.0);
        b.epsilon = eps;
      }
    }
  }
  return best;
}

std::vector<Complex> asz_ordering(std::span<const Complex> eigenvalues) {
  std::vector<Complex> remaining(eigenvalues.begin(), eigenvalues.end());
  std::vector<Complex> ordered;
  ordered.reserve(remaining.size());
  while (!remaining.empty()) {
    std::size_t pick = 0;
    double pick_delta = -1.0;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      std::vector<Complex> trial = ordered;
      trial.push_back(remaining[i]);
      const double d = asz_deltas(trial).back();
      if (d > pick_delta) {
        pick_delta = d;
        pick = i;
      }
    }
    ordered.push_back(remaining[pick]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return ordered;
}

std::vector<double> asz_deltas(std::span<const Complex> ordered) {
  std::vector<double> delta(ordered.size());
  for (std::size_t k = 0; k < ordered.size(); ++k) {
    const Complex lk = ordered[k];
    double d = -1.0 / (2.0 * lk.real());
    for (std::size_t j = 0; j < k; ++j) d *= std::norm(lk - ordered[j]) / std::norm(lk + std::conj(ordered[j]));
    delta[k] = d;
  }
  return delta;
}

namespace {

BoundReport asz_common(const LyapunovProblem& p, const SolutionSpectrum& sol, bool relative) {
  BoundReport r;
  r.name = relative ? "asz" : "asz-abs";
  const Index n = p.n();
  const auto es = eig_general(p.a());
  const bool valid = p.rank() == 1 && !es.defective;
  r.valid = valid;
  if (p.rank() != 1) r.note = "requires rank(B) = 1";
  if (es.defective) r.note = "A is defective (kappa(V) >= 1e12)";

  const std::vector<Complex> lambda(es.eigenvalues.data(), es.eigenvalues.data() + n);
  const std::vector<double> delta = asz_deltas(asz_ordering(lambda));
  const double kappa2 = es.condition * es.condition;
  const double norm_b = spectral_norm(p.b());
  const double norm_a = spectral_norm(p.a());
  r.parameters = "kappa=" + std::to_string(es.condition);

  for (Index k = 0; k < n; ++k) {
    const double nk = static_cast<double>(n - k);
    double bound = kInf;
    if (valid) {
      bound = relative ? 2.0 * nk * nk * norm_a * kappa2 * delta[static_cast<std::size_t>(k)]
                       : nk * nk * kappa2 * norm_b * norm_b * delta[static_cast<std::size_t>(k)];
    }
    BoundEntry e = make_entry(sol, k + 1, k, bound, valid);
    if (!relative) {
      e.actual = sol.s(k + 1);
      e.vacuous = false;
    }
    r.entries.push_back(e);
  }
  return r;
}

}  // namespace

BoundReport asz_bound(const LyapunovProblem& p, const SolutionSpectrum& sol) { return asz_common(p, sol, true); }

BoundReport asz_bound_absolute(const LyapunovProblem& p, const SolutionSpectrum& sol) {
  return asz_common(p, sol, false);
}

BoundReport krylov_bound(const LyapunovProblem& p, const SolutionSpectrum& sol, const KrylovOptions& options) {
  BoundReport r;
  r.name = "krylov";
  const Index n = p.n();
  if (p.b().cols() != 1) {
    r.valid = false;
    r.note = "requires B with one column";
    for (Index k = 1; k <= n; ++k) r.entries.push_back(make_entry(sol, k, k, kInf, false));
    return r;
  }

  const KrylovFactorization f = companion_krylov(p, options.max_dim, options.cap_override);
  const double residual = spectral_norm(ComplexMatrix(f.product() - sol.x)) / sol.s(1);
  r.valid = residual <= options.factorization_tol;
  r.parameters = "factorization_residual=" + std::to_string(residual);
  if (!r.valid) r.note = "X = K G K^* check failed";

  const RealVector sk = singular_values(f.krylov);
  const double norm_b = spectral_norm(p.b());
  const double factor = spectral_norm(p.a()) * 2.0 * spectral_norm(f.gram) / (norm_b * norm_b);
  for (Index k = 1; k <= n; ++k) {
    r.entries.push_back(make_entry(sol, k, k, sk(k - 1) * sk(k - 1) * factor, r.valid));
  }
  return r;
}

std::vector<AbscissaBound> abscissa_bounds(const LyapunovProblem& p, const SolutionSpectrum& sol) {
  const Index n = p.n();
  const RealVector omega = hermitian_part_spectrum(p.a());
  const double norm_a = spectral_norm(p.a());
  const double norm_b = spectral_norm(p.b());
  const double s1 = sol.s(1);
  std::vector<AbscissaBound> out;
  for (Index k = 1; k <= n; ++k) {
    AbscissaBound b;
    b.k = k;
    b.lower = sol.ratio(k) - 1.0 - norm_b * norm_b / (2.0 * s1 * norm_a);
    b.value = omega(k - 1) / norm_a;
    b.upper = 1.0 - sol.ratio(n - k + 1);
    out.push_back(b);
  }
  return out;
}

AbscissaStrip strip_endpoints(double norm_a, double norm_b, double s1, double sn) {
  AbscissaStrip s;
  s.lower = -norm_b * norm_b / (2.0 * s1);
  s.upper = (s1 - sn) / (s1 + sn) * norm_a;
  return s;
}

AbscissaStrip cor_s1n(const LyapunovProblem& p, const SolutionSpectrum& sol) {
  AbscissaStrip s = strip_endpoints(spectral_norm(p.a()), spectral_norm(p.b()), sol.s(1), sol.s(sol.n()));
  s.omega = numerical_abscissa(p.a());
  return s;
}

BoundReport cor_genbnd(const LyapunovProblem& p, const SolutionSpectrum& sol) {
  BoundReport r;
  r.name = "cor_genbnd";
  const Index n = p.n();
  const RealVector omega = hermitian_part_spectrum(p.a());
  const double norm_a = spectral_norm(p.a());
  for (Index k = 1; k <= n; ++k) {
    BoundEntry e = make_entry(sol, n - k + 1, k, 1.0 - omega(k - 1) / norm_a, true);
    r.entries.push_back(e);
  }
  std::sort(r.entries.begin(), r.entries.end(), [](const BoundEntry& x, const BoundEntry& y) { return x.index < y.index; });
  return r;
}

}  // namespace lyapdecay
