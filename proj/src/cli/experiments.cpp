// Copyright 2026 The lyapdecay Authors
// SPDX-License-Identifier: Apache-2.0

#include "lyapdecay/cli/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include "lyapdecay/cli/csv.hpp"
#include "lyapdecay/cli/matrix_io.hpp"
#include "lyapdecay/cli/svg.hpp"
#include "lyapdecay/densela.hpp"

namespace lyapdecay::cli {

namespace {

std::string tag(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string fmt(double v) { return format_number(v); }
std::string fmt(Index v) { return std::to_string(v); }

std::filesystem::path output(const ExperimentConfig& config, RunResult& result, const std::string& name) {
  std::filesystem::create_directories(config.out);
  std::filesystem::path path = std::filesystem::path(config.out) / name;
  result.files.push_back(path);
  return path;
}

template <typename Fn>
auto as_config_error(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::invalid_argument) throw Error(ErrorCode::invalid_config, e.what());
    throw;
  }
}

ModelProblem wrap(ModelFamily family, Index n, double alpha, LyapunovProblem p) {
  return ModelProblem{family, n, alpha, 0.0, std::move(p)};
}

std::vector<double> or_default(const std::vector<double>& v, std::vector<double> fallback) {
  return v.empty() ? std::move(fallback) : v;
}

std::vector<Index> or_default(const std::vector<Index>& v, std::vector<Index> fallback) {
  return v.empty() ? std::move(fallback) : v;
}

std::vector<double> default_eps(const ExperimentConfig& config) { return or_default(config.eps, {1e-1, 1e-2, 1e-3}); }

Series boundary_series(const std::string& label, const std::vector<Complex>& points, bool closed = true) {
  Series s;
  s.label = label;
  s.closed = closed;
  for (const Complex& z : points) {
    s.x.push_back(z.real());
    s.y.push_back(z.imag());
  }
  return s;
}

Series eigenvalue_series(const ComplexVector& lambda) {
  Series s;
  s.label = "eigenvalues";
  s.markers_only = true;
  for (Index i = 0; i < lambda.size(); ++i) {
    s.x.push_back(lambda(i).real());
    s.y.push_back(lambda(i).imag());
  }
  return s;
}

Series ratio_series(const std::string& label, const std::vector<double>& ratios, std::size_t kmax) {
  Series s;
  s.label = label;
  for (std::size_t k = 1; k <= std::min(kmax, ratios.size()); ++k) {
    s.x.push_back(static_cast<double>(k));
    s.y.push_back(ratios[k - 1]);
  }
  return s;
}

std::vector<double> ratios_of(const SolutionSpectrum& sol) {
  std::vector<double> r;
  for (Index k = 1; k <= sol.n(); ++k) r.push_back(sol.ratio(k));
  return r;
}

void collect(std::vector<std::string>& out, const std::string& label, const BoundReport& report) {
  for (const BoundEntry& e : report.violations()) {
    out.push_back(label + ": " + report.name + " bound " + fmt(e.bound) + " < actual " + fmt(*e.actual) +
                  " at index " + std::to_string(e.index));
  }
}

std::vector<DecayCurve> curves(const std::vector<NamedProblem>& problems, const ExperimentConfig& config) {
  const Precision precision = resolve_precision(config, Precision::extended);
  std::vector<DecayCurve> out;
  for (const NamedProblem& np : problems) {
    DecayCurve c;
    c.label = np.label;
    c.n = np.model.n;
    c.alpha = np.model.alpha;
    c.ratios = ratios_of(solve_lyapunov(np.model.problem, {precision}));
    c.boundary = numerical_range(np.model.problem.a(), config.m);
    out.push_back(std::move(c));
  }
  return out;
}

void write_curves(const std::string& stem, const std::string& title, const std::vector<DecayCurve>& curves,
                  const ExperimentConfig& config, RunResult& result, std::size_t kmax) {
  if (wants(config, "csv")) {
    CsvTable decay({"n", "alpha", "k", "ratio"});
    CsvTable boundary({"n", "alpha", "j", "theta", "re", "im"});
    for (const DecayCurve& c : curves) {
      for (std::size_t k = 1; k <= c.ratios.size(); ++k) {
        decay.add_row({fmt(c.n), fmt(c.alpha), std::to_string(k), fmt(c.ratios[k - 1])});
      }
      for (std::size_t j = 0; j < c.boundary.points.size(); ++j) {
        boundary.add_row({fmt(c.n), fmt(c.alpha), std::to_string(j), fmt(c.boundary.angles[j]),
                          fmt(c.boundary.points[j].real()), fmt(c.boundary.points[j].imag())});
      }
    }
    decay.write(output(config, result, stem + "_decay.csv"));
    boundary.write(output(config, result, stem + "_boundary.csv"));
  }
  if (wants(config, "svg")) {
    Plot decay{title + ": s_k / s_1", "k", "s_k / s_1", true, false, {}, {}, {}};
    Plot nr{title + ": numerical range boundaries", "Re z", "Im z", false, true, {}, {}, {}};
    for (const DecayCurve& c : curves) {
      decay.series.push_back(ratio_series(c.label, c.ratios, kmax));
      nr.series.push_back(boundary_series(c.label, c.boundary.points));
    }
    write_svg(output(config, result, stem + "_decay.svg"), decay);
    write_svg(output(config, result, stem + "_nrange.svg"), nr);
  }
}

std::string flag_of(const BoundEntry* e) {
  if (!e) return "na";
  if (!e->valid) return "invalid";
  return e->vacuous ? "vacuous" : "valid";
}

BoundReport invalid_report(std::string name, const SolutionSpectrum& sol, std::string note) {
  BoundReport r;
  r.name = std::move(name);
  r.valid = false;
  r.note = std::move(note);
  for (Index k = 1; k <= sol.n(); ++k) {
    BoundEntry e;
    e.index = k;
    e.k = k;
    e.bound = std::numeric_limits<double>::infinity();
    e.valid = false;
    e.actual = sol.ratio(k);
    r.entries.push_back(e);
  }
  return r;
}

std::vector<NamedProblem> compare_defaults() {
  std::vector<NamedProblem> out;
  for (Index n : {16, 32}) out.push_back({"fd-n" + std::to_string(n), fd_operator(n)});
  for (double a : {0.5, 1.0, 2.0, 4.0}) out.push_back({"jordan-n64-a" + tag(a), jordan_family(64, a)});
  return out;
}

}  // namespace

std::vector<NamedProblem> build_problems(const ExperimentConfig& config, std::string_view default_family) {
  const std::string family = config.family.empty() ? std::string(default_family) : config.family;
  std::vector<NamedProblem> out;
  if (family == "fd") {
    for (Index n : or_default(config.n, {16})) {
      out.push_back({"fd-n" + std::to_string(n), as_config_error([&] { return fd_operator(n); })});
    }
  } else if (family == "jordan") {
    for (Index n : or_default(config.n, {64})) {
      for (double a : or_default(config.alpha, {1.0})) {
        out.push_back({"jordan-n" + std::to_string(n) + "-a" + tag(a),
                       as_config_error([&] { return jordan_family(n, a); })});
      }
    }
  } else if (family == "two-by-two") {
    for (double a : or_default(config.alpha, {2.0})) {
      for (double t : or_default(config.t, {-a / 2.0})) {
        out.push_back({"2x2-a" + tag(a) + "-t" + tag(t), as_config_error([&] { return two_by_two(a, t); })});
      }
    }
  } else if (family == "random") {
    for (Index n : or_default(config.n, {8})) {
      for (double a : or_default(config.alpha, {1.0})) {
        LyapunovProblem p = as_config_error([&] { return random_stable(n, std::min(config.r, n), config.seed, a); });
        out.push_back({"random-n" + std::to_string(n) + "-a" + tag(a) + "-s" + std::to_string(config.seed),
                       wrap(ModelFamily::random, n, a, std::move(p))});
      }
    }
  } else if (family == "file") {
    ComplexMatrix a = read_matrix(std::filesystem::path(config.matrix_a));
    ComplexMatrix b = config.matrix_b.empty() ? ComplexMatrix(ComplexMatrix::Ones(a.rows(), 1))
                                              : read_matrix(std::filesystem::path(config.matrix_b));
    const Index n = a.rows();
    out.push_back({"file", wrap(ModelFamily::custom, n, 0.0, LyapunovProblem(std::move(a), std::move(b)))});
  } else {
    throw Error(ErrorCode::invalid_config, "unknown family '" + family + "'");
  }
  return out;
}

ShiftSet shifts_for(const ExperimentConfig& config, const ComplexMatrix& a) {
  const ShiftStrategy strategy = parse_strategy(config.strategy);
  std::vector<Complex> user;
  for (const std::string& s : config.shifts) user.push_back(parse_complex(s));
  return make_shifts(a, strategy, config.k, std::move(user));
}

std::vector<DecayCurve> fig1_curves(const ExperimentConfig& config) {
  ExperimentConfig c = config;
  c.family = "fd";
  c.n = or_default(config.n, {16, 32, 64, 128, 256});
  return curves(build_problems(c, "fd"), config);
}

std::vector<DecayCurve> fig2_curves(const ExperimentConfig& config) {
  ExperimentConfig c = config;
  c.family = "jordan";
  c.n = or_default(config.n, {64});
  c.alpha = or_default(config.alpha, {0.5, 1.0, 2.0, 4.0});
  return curves(build_problems(c, "jordan"), config);
}

std::vector<SweepRow> two_by_two_sweep(const ExperimentConfig& config) {
  std::vector<double> alphas = config.alpha;
  if (alphas.empty()) {
    constexpr int kPoints = 200;
    for (int i = 0; i < kPoints; ++i) alphas.push_back(0.1 + (10.0 - 0.1) * i / (kPoints - 1));
  }
  const Precision precision = resolve_precision(config, Precision::standard);
  std::vector<SweepRow> rows;
  for (double a : alphas) {
    const double t = config.t.empty() ? -a / 2.0 : config.t.front();
    const ModelProblem m = as_config_error([&] { return two_by_two(a, t); });
    const SolutionSpectrum sol = solve_lyapunov(m.problem, {precision});
    const BoundReport bound = cor_genbnd(m.problem, sol);
    rows.push_back({a, t, *m.exact_ratio, sol.ratio(2), bound.find(2)->bound});
  }
  return rows;
}

Comparison compare_bounds(const NamedProblem& problem, const ExperimentConfig& config) {
  const LyapunovProblem& p = problem.model.problem;
  const ComplexMatrix& a = p.a();
  Comparison c;
  c.label = problem.label;
  c.solution = solve_lyapunov(p, {resolve_precision(config, Precision::standard)});
  const SolutionSpectrum& sol = c.solution;
  const ShiftSet shifts = shifts_for(config, a);

  c.reports.push_back(adi_error_bound(p, sol, shifts));
  c.reports.push_back(eig_bound(p, sol, shifts));
  c.reports.push_back(nr_bound(p, sol, shifts, numerical_range(a, config.m), config.crouzeix));

  const std::vector<double> eps = default_eps(config);
  const PseudospectrumGrid grid = resolvent_grid(a, default_box(a, *std::max_element(eps.begin(), eps.end())), config.grid);
  c.reports.push_back(psa_bound_sweep(p, sol, shifts, grid, eps));

  c.reports.push_back(asz_bound(p, sol));
  try {
    c.reports.push_back(krylov_bound(p, sol, {kKrylovMaxDim, config.cap_override, 1e-4}));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::too_large && e.code() != ErrorCode::not_controllable) throw;
    c.reports.push_back(invalid_report("krylov", sol, e.what()));
  }
  c.reports.push_back(cor_genbnd(p, sol));

  for (const BoundReport& r : c.reports) collect(c.violations, c.label, r);
  return c;
}

RunResult run_solve(const ExperimentConfig& config) {
  RunResult result;
  const Precision precision = resolve_precision(config, Precision::standard);
  for (const NamedProblem& np : build_problems(config, "fd")) {
    const SolutionSpectrum sol = solve_lyapunov(np.model.problem, {precision});
    if (wants(config, "csv")) {
      CsvTable t({"k", "s_k", "ratio"});
      for (Index k = 1; k <= sol.n(); ++k) t.add_row({fmt(k), fmt(sol.s(k)), fmt(sol.ratio(k))});
      t.write(output(config, result, "solve_" + np.label + ".csv"));
    }
    if (wants(config, "matrix")) write_matrix(output(config, result, "solve_" + np.label + "_X.txt"), sol.x);
    if (wants(config, "svg")) {
      Plot plot{np.label + ": s_k / s_1", "k", "s_k / s_1", true, false, {}, {}, {}};
      plot.series.push_back(ratio_series(np.label, ratios_of(sol), static_cast<std::size_t>(sol.n())));
      write_svg(output(config, result, "solve_" + np.label + ".svg"), plot);
    }
    result.summary.push_back(np.label + ": n=" + std::to_string(sol.n()) + " s1=" + fmt(sol.s(1)) +
                             " sn=" + fmt(sol.s(sol.n())) + " relative_residual=" + fmt(sol.relative_residual));
  }
  return result;
}

RunResult run_nrange(const ExperimentConfig& config) {
  RunResult result;
  for (const NamedProblem& np : build_problems(config, "fd")) {
    const ComplexMatrix& a = np.model.problem.a();
    const NumericalRangeBoundary nr = numerical_range(a, config.m);
    if (wants(config, "csv")) {
      CsvTable b({"j", "theta", "re", "im"});
      for (std::size_t j = 0; j < nr.points.size(); ++j) {
        b.add_row({std::to_string(j), fmt(nr.angles[j]), fmt(nr.points[j].real()), fmt(nr.points[j].imag())});
      }
      b.write(output(config, result, "nrange_" + np.label + "_boundary.csv"));
      CsvTable o({"k", "omega"});
      for (Index k = 0; k < nr.omega.size(); ++k) o.add_row({fmt(k + 1), fmt(nr.omega(k))});
      o.write(output(config, result, "nrange_" + np.label + "_omega.csv"));
    }
    if (wants(config, "svg")) {
      Plot plot{np.label + ": W(A)", "Re z", "Im z", false, true, {}, {}, {}};
      plot.series.push_back(boundary_series("boundary of W(A)", nr.points));
      plot.series.push_back(eigenvalue_series(np.model.problem.eigenvalues()));
      plot.x_marks.push_back(nr.abscissa());
      write_svg(output(config, result, "nrange_" + np.label + ".svg"), plot);
    }
    result.summary.push_back(np.label + ": numerical abscissa " + fmt(nr.abscissa()) + ", max Re on boundary " +
                             fmt(nr.max_real()));
  }
  return result;
}

RunResult run_psa(const ExperimentConfig& config) {
  RunResult result;
  const std::vector<double> eps = default_eps(config);
  for (const NamedProblem& np : build_problems(config, "fd")) {
    const ComplexMatrix& a = np.model.problem.a();
    const PseudospectrumGrid grid = resolvent_grid(a, default_box(a, *std::max_element(eps.begin(), eps.end())), config.grid);
    CsvTable lines({"eps", "polyline", "vertex", "re", "im"});
    CsvTable lengths({"eps", "polylines", "length"});
    Plot plot{np.label + ": eps-pseudospectra", "Re z", "Im z", false, true, {}, {}, {}};
    for (double e : eps) {
      EpsilonContour contour;
      try {
        contour = epsilon_contour(grid, e);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::level_out_of_range && err.code() != ErrorCode::open_contour) throw;
        result.summary.push_back(np.label + ": eps=" + tag(e) + " skipped: " + err.what());
        continue;
      }
      lengths.add_row({fmt(e), std::to_string(contour.polylines.size()), fmt(contour.total_length)});
      for (std::size_t li = 0; li < contour.polylines.size(); ++li) {
        const auto& line = contour.polylines[li];
        for (std::size_t v = 0; v < line.size(); ++v) {
          lines.add_row({fmt(e), std::to_string(li), std::to_string(v), fmt(line[v].real()), fmt(line[v].imag())});
        }
        plot.series.push_back(boundary_series(li == 0 ? "eps=" + tag(e) : "", line, false));
      }
      result.summary.push_back(np.label + ": eps=" + tag(e) + " L=" + fmt(contour.total_length));
    }
    if (wants(config, "csv")) {
      lines.write(output(config, result, "psa_" + np.label + "_contours.csv"));
      lengths.write(output(config, result, "psa_" + np.label + "_lengths.csv"));
    }
    if (wants(config, "svg")) {
      plot.series.push_back(eigenvalue_series(np.model.problem.eigenvalues()));
      write_svg(output(config, result, "psa_" + np.label + ".svg"), plot);
    }
  }
  return result;
}

RunResult run_bounds(const ExperimentConfig& config) {
  RunResult result;
  for (const NamedProblem& np : build_problems(config, "fd")) {
    Comparison c = compare_bounds(np, config);
    const LyapunovProblem& p = np.model.problem;
    c.reports.push_back(asz_bound_absolute(p, c.solution));
    collect(c.violations, c.label, c.reports.back());

    CsvTable t({"bound", "index", "k", "value", "actual", "flag", "eps", "parameters", "note"});
    for (const BoundReport& r : c.reports) {
      for (const BoundEntry& e : r.entries) {
        t.add_row({r.name, fmt(e.index), fmt(e.k), fmt(e.bound), format_number(e.actual), flag_of(&e),
                   format_number(e.epsilon), "\"" + r.parameters + "\"", "\"" + r.note + "\""});
      }
    }
    CsvTable abscissa({"k", "lower", "omega_over_norm", "upper", "holds"});
    for (const AbscissaBound& b : abscissa_bounds(p, c.solution)) {
      abscissa.add_row({fmt(b.k), fmt(b.lower), fmt(b.value), fmt(b.upper), b.holds() ? "true" : "false"});
      if (!b.holds()) c.violations.push_back(c.label + ": two-sided abscissa bound fails at k=" + std::to_string(b.k));
    }
    const AbscissaStrip strip = cor_s1n(p, c.solution);
    if (!strip.holds()) c.violations.push_back(c.label + ": numerical abscissa outside the strip");
    if (wants(config, "csv")) {
      t.write(output(config, result, "bounds_" + np.label + ".csv"));
      abscissa.write(output(config, result, "bounds_" + np.label + "_abscissa.csv"));
    }
    result.summary.push_back(np.label + ": strip [" + fmt(strip.lower) + ", " + fmt(strip.upper) + "] omega " +
                             fmt(strip.omega) + ", " + std::to_string(c.violations.size()) + " violation(s)");
    result.violations.insert(result.violations.end(), c.violations.begin(), c.violations.end());
  }
  return result;
}

RunResult run_fig1(const ExperimentConfig& config) {
  RunResult result;
  const std::vector<DecayCurve> cs = fig1_curves(config);
  write_curves("fig1", "Forward-difference operator", cs, config, result, 40);
  for (const DecayCurve& c : cs) {
    result.summary.push_back(c.label + ": s_10/s_1 = " + (c.ratios.size() >= 10 ? fmt(c.ratios[9]) : "n/a") +
                             ", numerical abscissa " + fmt(c.boundary.abscissa()));
  }
  return result;
}

RunResult run_fig2(const ExperimentConfig& config) {
  RunResult result;
  const std::vector<DecayCurve> cs = fig2_curves(config);
  write_curves("fig2", "Jordan blocks", cs, config, result, 64);
  for (const DecayCurve& c : cs) {
    result.summary.push_back(c.label + ": s_10/s_1 = " + (c.ratios.size() >= 10 ? fmt(c.ratios[9]) : "n/a"));
  }
  return result;
}

RunResult run_two_by_two_sweep(const ExperimentConfig& config) {
  RunResult result;
  const std::vector<SweepRow> rows = two_by_two_sweep(config);
  double max_error = 0.0;
  for (const SweepRow& r : rows) {
    max_error = std::max(max_error, std::abs(r.exact - r.solver));
    if (r.bound < r.solver - kSoundnessSlack) {
      result.violations.push_back("2x2 alpha=" + fmt(r.alpha) + ": bound " + fmt(r.bound) + " < ratio " +
                                  fmt(r.solver));
    }
  }
  if (wants(config, "csv")) {
    CsvTable t({"alpha", "t", "exact_ratio", "solver_ratio", "abs_error", "cor_genbnd"});
    for (const SweepRow& r : rows) {
      t.add_row({fmt(r.alpha), fmt(r.t), fmt(r.exact), fmt(r.solver), fmt(std::abs(r.exact - r.solver)), fmt(r.bound)});
    }
    t.write(output(config, result, "sweep2x2.csv"));
  }
  if (wants(config, "svg")) {
    Plot plot{"2x2 Jordan block: s_2 / s_1 at t = -alpha/2", "alpha", "ratio", true, false, {}, {}, {2.0}};
    Series exact{"exact s_2/s_1", {}, {}, false, false};
    Series solver{"solver s_2/s_1", {}, {}, false, true};
    Series bound{"1 - omega_1/||A||", {}, {}, false, false};
    for (const SweepRow& r : rows) {
      exact.x.push_back(r.alpha);
      exact.y.push_back(r.exact);
      solver.x.push_back(r.alpha);
      solver.y.push_back(r.solver);
      bound.x.push_back(r.alpha);
      bound.y.push_back(r.bound);
    }
    plot.series = {exact, solver, bound};
    write_svg(output(config, result, "sweep2x2.svg"), plot);
  }
  result.summary.push_back(std::to_string(rows.size()) + " alpha values, max |exact - solver| = " + fmt(max_error));
  return result;
}

RunResult run_strip(const ExperimentConfig& config) {
  RunResult result;
  CsvTable t({"label", "norm_a", "norm_b", "s1", "sn", "lower", "omega", "upper"});
  Plot plot{"Admissible numerical abscissa", "Re z", "", false, false, {}, {}, {0.0}};

  if (config.family.empty()) {
    const AbscissaStrip s = strip_endpoints(config.norm_a, config.norm_b, config.s1, config.sn);
    t.add_row({"given", fmt(config.norm_a), fmt(config.norm_b), fmt(config.s1), fmt(config.sn), fmt(s.lower), "",
               fmt(s.upper)});
    plot.x_bands.emplace_back(s.lower, s.upper);
    plot.x_marks.push_back(-config.norm_a);
    plot.x_marks.push_back(config.norm_a);
    result.summary.push_back("strip [" + fmt(s.lower) + ", " + fmt(s.upper) + "]");
  } else {
    for (const NamedProblem& np : build_problems(config, "fd")) {
      const LyapunovProblem& p = np.model.problem;
      const SolutionSpectrum sol = solve_lyapunov(p, {resolve_precision(config, Precision::standard)});
      const AbscissaStrip s = cor_s1n(p, sol);
      t.add_row({np.label, fmt(spectral_norm(p.a())), fmt(spectral_norm(p.b())), fmt(sol.s(1)), fmt(sol.s(sol.n())),
                 fmt(s.lower), fmt(s.omega), fmt(s.upper)});
      plot.x_bands.emplace_back(s.lower, s.upper);
      plot.x_marks.push_back(s.omega);
      if (!s.holds()) result.violations.push_back(np.label + ": numerical abscissa outside the strip");
      result.summary.push_back(np.label + ": strip [" + fmt(s.lower) + ", " + fmt(s.upper) + "] omega " +
                               fmt(s.omega));
    }
  }
  if (wants(config, "csv")) t.write(output(config, result, "strip.csv"));
  if (wants(config, "svg")) write_svg(output(config, result, "strip.svg"), plot);
  return result;
}

RunResult run_bounds_compare(const ExperimentConfig& config) {
  RunResult result;
  const bool defaults = config.family.empty() && config.n.empty() && config.alpha.empty();
  const std::vector<NamedProblem> problems = defaults ? compare_defaults() : build_problems(config, "fd");
  for (const NamedProblem& np : problems) {
    const Comparison c = compare_bounds(np, config);
    std::vector<std::string> header{"index", "actual"};
    for (const BoundReport& r : c.reports) {
      header.push_back(r.name);
      header.push_back(r.name + "_flag");
    }
    CsvTable t(header);
    Plot plot{np.label + ": bounds on s_k / s_1", "k", "ratio", true, false, {}, {}, {}};
    plot.series.push_back(ratio_series("actual", ratios_of(c.solution), static_cast<std::size_t>(c.solution.n())));
    for (Index i = 1; i <= c.solution.n(); ++i) {
      std::vector<std::string> row{fmt(i), fmt(c.solution.ratio(i))};
      for (const BoundReport& r : c.reports) {
        const BoundEntry* e = r.find(i);
        row.push_back(e ? fmt(e->bound) : "");
        row.push_back(flag_of(e));
      }
      t.add_row(std::move(row));
    }
    for (const BoundReport& r : c.reports) {
      Series s{r.name, {}, {}, false, false};
      for (const BoundEntry& e : r.entries) {
        if (e.valid && std::isfinite(e.bound) && e.index <= c.solution.n()) {
          s.x.push_back(static_cast<double>(e.index));
          s.y.push_back(e.bound);
        }
      }
      if (!s.x.empty()) plot.series.push_back(std::move(s));
    }
    if (wants(config, "csv")) t.write(output(config, result, "compare_" + np.label + ".csv"));
    if (wants(config, "svg")) write_svg(output(config, result, "compare_" + np.label + ".svg"), plot);

    std::string line = np.label + ":";
    for (const BoundReport& r : c.reports) line += " " + r.name + (r.valid ? "" : "(invalid)");
    line += ", " + std::to_string(c.violations.size()) + " violation(s)";
    result.summary.push_back(line);
    result.violations.insert(result.violations.end(), c.violations.begin(), c.violations.end());
  }
  return result;
}

RunResult run_experiment(const ExperimentConfig& config) {
  validate(config);
  if (config.id == "solve") return run_solve(config);
  if (config.id == "nrange") return run_nrange(config);
  if (config.id == "psa") return run_psa(config);
  if (config.id == "bounds") return run_bounds(config);
  if (config.id == "fig1") return run_fig1(config);
  if (config.id == "fig2") return run_fig2(config);
  if (config.id == "sweep2x2") return run_two_by_two_sweep(config);
  if (config.id == "strip") return run_strip(config);
  return run_bounds_compare(config);
}

}  // namespace lyapdecay::cli
