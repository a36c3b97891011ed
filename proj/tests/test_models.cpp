#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "lyapdecay/densela.hpp"
#include "lyapdecay/models.hpp"
#include "lyapdecay/spectral.hpp"
#include "oracles.hpp"

using namespace lyapdecay;
using std::numbers::pi;

TEST_CASE("forward-difference operator") {
  const ModelProblem m = fd_operator(2);
  const ComplexMatrix& a = m.problem.a();
  CHECK(a(0, 0) == Complex(-3.0));
  CHECK(a(0, 1) == Complex(2.0));
  CHECK(a(1, 0) == Complex(0.0));
  CHECK(a(1, 1) == Complex(-3.0));
  CHECK(m.problem.b().norm() == doctest::Approx(1.0));

  for (Index n : {4, 16, 33}) {
    const ModelProblem f = fd_operator(n);
    CHECK(f.numerical_range->center == Complex(-1.0 - n));
    CHECK(f.numerical_range->radius == doctest::Approx(n * std::cos(pi / (n + 1))));
    CHECK(*f.numerical_abscissa == doctest::Approx(-1.0 - n * (1.0 - std::cos(pi / (n + 1)))));
    // single eigenvalue -1-n; the eigensolver scatters a defective cluster, but its mean is exact
    const ComplexVector lambda = f.problem.eigenvalues();
    CHECK(std::abs(lambda.mean() - Complex(-1.0 - n)) < 1e-9 * n);
  }
  CHECK(*fd_operator(16).numerical_abscissa == doctest::Approx(-1.27243).epsilon(1e-5));
  CHECK_THROWS_AS(fd_operator(1), Error);
}

TEST_CASE("Jordan family") {
  const ModelProblem m = jordan_family(2, 2.0);
  CHECK(m.problem.a()(0, 1) == Complex(2.0));
  CHECK(m.problem.a()(0, 0) == Complex(-1.0));
  CHECK(m.problem.b().norm() == doctest::Approx(std::sqrt(2.0)));
  CHECK(jordan_family(64, 1.0).numerical_range->radius == doctest::Approx(0.998834).epsilon(1e-6));
  for (double alpha : {0.5, 1.0, 2.0, 4.0}) {
    const ModelProblem j = jordan_family(64, alpha);
    CHECK(j.numerical_range->radius == doctest::Approx(alpha * std::cos(pi / 65.0)));
  }
  CHECK_THROWS_AS(jordan_family(8, 0.0), Error);
}

TEST_CASE("closed-form disks match the computed numerical range") {
  for (const ModelProblem& m : {fd_operator(24), jordan_family(20, 3.0)}) {
    const auto nr = numerical_range(m.problem.a());
    for (const Complex& z : nr.points) {
      CHECK(std::abs(std::abs(z - m.numerical_range->center) - m.numerical_range->radius) < 1e-6);
    }
    CHECK(std::abs(nr.abscissa() - *m.numerical_abscissa) < 1e-10);
  }
}

TEST_CASE("2x2 closed forms") {
  const ModelProblem m = two_by_two(2.0, -1.0);
  CHECK((*m.exact_x - 0.5 * ComplexMatrix::Identity(2, 2)).norm() < 1e-15);
  CHECK(*m.exact_ratio == doctest::Approx(1.0));
  CHECK(two_by_two_ratio(1.0, -0.5) == doctest::Approx(0.25));
  CHECK(two_by_two_ratio(4.0, -2.0) == doctest::Approx(0.25));
  CHECK(worst_case_ratio(1.0) == doctest::Approx(0.25));
  CHECK(worst_case_ratio(10.0) == doctest::Approx(0.04));
  // the two branches meet at alpha = 2
  CHECK(worst_case_ratio(2.0 - 1e-9) == doctest::Approx(worst_case_ratio(2.0 + 1e-9)).epsilon(1e-8));

  for (double alpha : {0.3, 2.0, 7.5}) {
    ComplexMatrix a(2, 2);
    a << -1.0, alpha, 0.0, -1.0;
    CHECK(std::abs(two_by_two_norm(alpha) - spectral_norm(a)) < 1e-13);
  }
}

TEST_CASE("2x2 exact solution agrees with the solver") {
  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> ua(0.05, 10.0);
  std::uniform_real_distribution<double> ut(-10.0, 10.0);
  for (int i = 0; i < 50; ++i) {
    const double alpha = ua(rng);
    const double t = ut(rng);
    const ModelProblem m = two_by_two(alpha, t);
    const auto sol = solve_lyapunov(m.problem);
    CHECK((sol.x - two_by_two_solution(alpha, t)).norm() <= 1e-12 * sol.x.norm());
    CHECK(std::abs(sol.ratio(2) - two_by_two_ratio(alpha, t)) < 1e-12);
  }
}

TEST_CASE("worst case t") {
  const WorstCase w2 = worst_case_t(2.0);
  CHECK(w2.t_star == -1.0);
  CHECK(w2.ratio == doctest::Approx(1.0));
  const WorstCase w1 = worst_case_t(1.0);
  CHECK(w1.t_star == -0.5);
  CHECK(w1.ratio == doctest::Approx(0.25));
  const WorstCase w10 = worst_case_t(10.0);
  CHECK(w10.t_star == -5.0);
  CHECK(w10.ratio == doctest::Approx(0.04));
  for (double alpha : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    const WorstCase w = worst_case_t(alpha);
    CHECK(std::abs(w.t_numeric - w.t_star) <= 1e-6);
    CHECK(std::abs(w.ratio_numeric - w.ratio) <= 1e-10);
  }
}

TEST_CASE("companion Krylov factorization") {
  ComplexMatrix a(1, 1);
  a << -1.0;
  const KrylovFactorization one = companion_krylov(LyapunovProblem(a, ComplexMatrix::Ones(1, 1)));
  CHECK(one.krylov(0, 0) == Complex(1.0));
  CHECK(one.companion(0, 0) == Complex(-1.0));
  CHECK(one.gram(0, 0).real() == doctest::Approx(0.5));

  for (std::uint64_t seed = 10; seed < 15; ++seed) {
    const LyapunovProblem p = random_stable(5, 1, seed, 1.0);
    const auto sol = solve_lyapunov(p);
    CHECK((companion_krylov(p).product() - sol.x).norm() <= 1e-6 * sol.x.norm());
  }
  CHECK_THROWS_AS(companion_krylov(random_stable(4, 2, 1, 1.0)), Error);
}

TEST_CASE("random stable generator") {
  const LyapunovProblem a = random_stable(9, 2, 1234, 3.0);
  const LyapunovProblem b = random_stable(9, 2, 1234, 3.0);
  CHECK(a.a() == b.a());
  CHECK(a.b() == b.b());
  CHECK(a.rank() == 2);
  CHECK(random_stable(9, 2, 1235, 3.0).a() != a.a());
  for (Index i = 0; i < 9; ++i) CHECK(a.eigenvalues()(i).real() < 0.0);

  const LyapunovProblem normal = random_stable(7, 1, 5, 0.0);
  const ComplexMatrix& d = normal.a();
  CHECK((d - ComplexMatrix(d.diagonal().asDiagonal())).norm() == 0.0);
  for (Index i = 0; i < 7; ++i) {
    CHECK(d(i, i).real() <= -0.1);
    CHECK(d(i, i).real() >= -10.0);
    CHECK(std::abs(d(i, i).imag()) <= 5.0);
  }

  const LyapunovProblem real = random_stable(8, 1, 9, 1.0, {.real = true});
  CHECK(real.a().imag().norm() == 0.0);
  CHECK(real.b().imag().norm() == 0.0);

  const LyapunovProblem rotated = random_stable(8, 1, 9, 0.0, {.rotate = true});
  const auto sol = solve_lyapunov(rotated);
  CHECK(sol.positive_definite);
  CHECK_THROWS_AS(random_stable(3, 4, 1, 1.0), Error);
}
