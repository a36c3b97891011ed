#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "lyapdecay/cli/config.hpp"
#include "lyapdecay/cli/csv.hpp"
#include "lyapdecay/cli/experiments.hpp"
#include "lyapdecay/cli/matrix_io.hpp"
#include "lyapdecay/cli/svg.hpp"

using namespace lyapdecay;
using namespace lyapdecay::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("lyapdecay_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int run_tool(const std::string& args) {
  const std::string cmd = std::string("\"") + LYAPDECAY_TOOL + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST_CASE("complex parsing") {
  CHECK(parse_complex("2") == Complex(2.0, 0.0));
  CHECK(parse_complex("1.5+0.5i") == Complex(1.5, 0.5));
  CHECK(parse_complex("1.5-0.5i") == Complex(1.5, -0.5));
  CHECK(parse_complex("-3i") == Complex(0.0, -3.0));
  CHECK(parse_complex("1e-2") == Complex(0.01, 0.0));
  CHECK(code_of([] { parse_complex("abc"); }) == ErrorCode::invalid_config);
  CHECK(code_of([] { parse_complex("1+"); }) == ErrorCode::invalid_config);
}

TEST_CASE("config validation") {
  ExperimentConfig c;
  c.id = "solve";
  CHECK_NOTHROW(validate(c));

  auto bad = [&](auto&& edit) {
    ExperimentConfig d = c;
    edit(d);
    return code_of([&] { validate(d); });
  };
  CHECK(bad([](ExperimentConfig& d) { d.id = "plot"; }) == ErrorCode::invalid_config);
  CHECK(bad([](ExperimentConfig& d) { d.family = "toeplitz"; }) == ErrorCode::invalid_config);
  CHECK(bad([](ExperimentConfig& d) { d.eps = {-0.1}; }) == ErrorCode::invalid_config);
  CHECK(bad([](ExperimentConfig& d) { d.strategy = "optimal"; }) == ErrorCode::invalid_config);
  CHECK(bad([](ExperimentConfig& d) {
          d.strategy = "user";
          d.shifts = {"-1"};
        }) == ErrorCode::invalid_config);
  CHECK(bad([](ExperimentConfig& d) { d.m = 4; }) == ErrorCode::invalid_config);
  CHECK(bad([](ExperimentConfig& d) { d.grid = 8; }) == ErrorCode::invalid_config);
  CHECK(bad([](ExperimentConfig& d) { d.formats = {"png"}; }) == ErrorCode::invalid_config);
  CHECK(bad([](ExperimentConfig& d) { d.sn = 2.0; }) == ErrorCode::invalid_config);

  CHECK(parse_strategy("single-point") == ShiftStrategy::single_point);
  CHECK(to_string(ShiftStrategy::log_spaced) == "log-spaced");
}

TEST_CASE("matrix files round trip") {
  ComplexMatrix m(2, 3);
  m << Complex(1.0, 0.5), 2.0, 1.0 / 3.0, -4.0, Complex(0.0, -1e-300), 6.0;
  std::stringstream s;
  write_matrix(s, m);
  CHECK(read_matrix(s) == m);

  ComplexMatrix r(2, 2);
  r << 1.0 / 7.0, 2.0, 3.0, -1e17;
  std::stringstream t;
  write_matrix(t, r);
  CHECK(t.str().find("real") != std::string::npos);
  CHECK(read_matrix(t) == r);

  std::istringstream commented("# a comment\n2 2 real\n-1 0 # row one\n0 -2\n");
  const ComplexMatrix c = read_matrix(commented);
  CHECK(c(1, 1) == Complex(-2.0));

  std::istringstream truncated("2 2 real\n1 2 3\n");
  CHECK_THROWS_AS(read_matrix(truncated), Error);
}

TEST_CASE("csv formatting") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(format_number(-INFINITY) == "-inf");
  CHECK(format_number(std::optional<double>{}) == "");

  CsvTable t({"a", "b"});
  t.add_row({"1", "2"});
  CHECK_THROWS(t.add_row({"1"}));
  std::ostringstream o;
  t.write(o);
  CHECK(o.str() == "a,b\n1,2\n");
}

TEST_CASE("svg output is well formed") {
  Plot p{"decay <test>", "k", "ratio", true, false, {}, {}, {}};
  p.series.push_back({"curve", {1, 2, 3}, {1.0, 1e-3, 0.0}, false, false});
  const std::string svg = render_svg(p);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("&lt;test&gt;") != std::string::npos);
  CHECK(svg.find("nan") == std::string::npos);
}

TEST_CASE("outputs are deterministic") {
  const fs::path a = scratch("det_a");
  const fs::path b = scratch("det_b");
  ExperimentConfig c;
  c.id = "bounds";
  c.family = "random";
  c.n = {6};
  c.grid = 64;
  c.out = a.string();
  const RunResult ra = run_experiment(c);
  c.out = b.string();
  const RunResult rb = run_experiment(c);
  REQUIRE(ra.files.size() == rb.files.size());
  REQUIRE_FALSE(ra.files.empty());
  for (std::size_t i = 0; i < ra.files.size(); ++i) {
    CHECK(ra.files[i].filename() == rb.files[i].filename());
    CHECK(slurp(ra.files[i]) == slurp(rb.files[i]));
  }
  CHECK(ra.sound());
}

TEST_CASE("strip experiment") {
  const fs::path dir = scratch("strip");
  ExperimentConfig c;
  c.id = "strip";
  c.out = dir.string();
  const RunResult r = run_experiment(c);
  CHECK(fs::exists(dir / "strip.csv"));
  CHECK(fs::exists(dir / "strip.svg"));
  const AbscissaStrip s = strip_endpoints(c.norm_a, c.norm_b, c.s1, c.sn);
  CHECK(s.lower == doctest::Approx(-0.5));
  CHECK(s.upper == doctest::Approx(1.0 / 3.0));
  CHECK(strip_endpoints(1.0, 1.0, 1.0, 1.0).upper == 0.0);
  CHECK(strip_endpoints(1.0, 1.0, 1.0, 1e-12).upper == doctest::Approx(1.0));
  CHECK(r.summary.front().find("strip [") != std::string::npos);
}

TEST_CASE("figure 1 single curve decreases") {
  ExperimentConfig c;
  c.n = {16};
  const auto curves = fig1_curves(c);
  REQUIRE(curves.size() == 1);
  const auto& r = curves.front().ratios;
  CHECK(r.size() == 16);
  CHECK(r[0] == 1.0);
  for (std::size_t k = 1; k < r.size(); ++k) CHECK(r[k] < r[k - 1]);
}

TEST_CASE("figure 2 numerical range radii") {
  ExperimentConfig c;
  const auto curves = fig2_curves(c);
  REQUIRE(curves.size() == 4);
  const double radii[] = {0.4994, 0.9988, 1.9977, 3.9953};
  for (std::size_t i = 0; i < 4; ++i) {
    double worst = 0.0;
    for (const Complex& z : curves[i].boundary.points) worst = std::max(worst, std::abs(std::abs(z + 1.0) - radii[i]));
    CHECK(worst < 1e-4);
  }
  CHECK(curves[1].ratios[9] > curves[0].ratios[9]);
  CHECK(curves[1].ratios[9] > curves[2].ratios[9]);
  CHECK(curves[1].ratios[9] > curves[3].ratios[9]);
  CHECK(curves[3].ratios[9] < curves[2].ratios[9]);
}

TEST_CASE("2x2 sweep") {
  ExperimentConfig c;
  c.alpha = {1.0, 2.0, 4.0, 1e3};
  const auto rows = two_by_two_sweep(c);
  CHECK(rows[0].solver == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(rows[1].solver == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rows[2].solver == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(rows[3].bound == doctest::Approx(0.5).epsilon(1e-3));
  for (const SweepRow& r : rows) CHECK(r.bound >= r.solver - 1e-12);

  const auto full = two_by_two_sweep(ExperimentConfig{});
  CHECK(full.size() == 200);
  double peak = 0.0;
  for (const SweepRow& r : full) {
    CHECK(std::abs(r.exact - r.solver) <= 1e-10);
    peak = std::max(peak, r.exact);
  }
  CHECK(peak <= 1.0);
  CHECK(peak > 0.99);
}

TEST_CASE("bound comparison") {
  ExperimentConfig c;
  c.id = "compare";
  c.grid = 96;
  c.family = "fd";
  c.n = {16};
  const auto problems = build_problems(c, "fd");
  const Comparison fd = compare_bounds(problems.front(), c);
  CHECK(fd.violations.empty());
  CHECK(fd.reports.size() == 7);

  c.family = "jordan";
  c.n = {64};
  c.alpha = {4.0};
  const Comparison j = compare_bounds(build_problems(c, "fd").front(), c);
  CHECK(j.violations.empty());
  for (const BoundReport& r : j.reports) {
    if (r.name == "nr") CHECK_FALSE(r.valid);
    if (r.name == "cor_genbnd") CHECK_FALSE(r.entries.back().vacuous);
  }
}

TEST_CASE("compare csv") {
  const fs::path dir = scratch("compare");
  ExperimentConfig c;
  c.id = "compare";
  c.family = "two-by-two";
  c.grid = 64;
  c.formats = {"csv"};
  c.out = dir.string();
  const RunResult r = run_experiment(c);
  REQUIRE(r.files.size() == 1);
  const std::string text = slurp(r.files.front());
  CHECK(text.rfind("index,actual,adi,adi_flag,eig,eig_flag,nr,nr_flag,psa,psa_flag,asz,asz_flag,krylov,krylov_flag", 0) == 0);
  CHECK(text.find("invalid") != std::string::npos);
}

TEST_CASE("exit codes") {
  const fs::path dir = scratch("exit");
  const std::string out = " --out \"" + dir.string() + "\"";
  CHECK(run_tool("solve --family fd --n 8" + out) == 0);
  CHECK(run_tool("sweep2x2 --alpha 1,2,3" + out) == 0);
  CHECK(run_tool("solve --family toeplitz" + out) == 2);
  CHECK(run_tool("solve --n abc" + out) == 2);
  CHECK(run_tool("frobnicate" + out) == 2);
  CHECK(run_tool("" + out) == 2);

  const fs::path unstable = dir / "unstable.txt";
  std::ofstream(unstable) << "2 2 real\n1 0\n0 -1\n";
  CHECK(run_tool("solve --family file --matrix-a \"" + unstable.string() + "\"" + out) == 3);
  CHECK(run_tool("compare --family fd --n 16 --grid 64 --crouzeix 0.001" + out) == 4);
  CHECK(run_tool("compare --family fd --n 16 --grid 64" + out) == 0);
}

TEST_CASE("config file with flag override") {
  const fs::path dir = scratch("config");
  const fs::path cfg = dir / "run.cfg";
  std::ofstream(cfg) << "family=fd\nn=8\nformat=csv\nout=" << dir.string() << "\n";
  CHECK(run_tool("solve --config \"" + cfg.string() + "\"") == 0);
  CHECK(fs::exists(dir / "solve_fd-n8.csv"));
  CHECK_FALSE(fs::exists(dir / "solve_fd-n8.svg"));
  CHECK(run_tool("solve --config \"" + cfg.string() + "\" --n 6") == 0);
  CHECK(fs::exists(dir / "solve_fd-n6.csv"));

  std::ofstream(dir / "bad.cfg") << "family=nonsense\n";
  CHECK(run_tool("solve --config \"" + (dir / "bad.cfg").string() + "\" --out \"" + dir.string() + "\"") == 2);
}
