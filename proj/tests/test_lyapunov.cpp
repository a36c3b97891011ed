#include <cmath>
#include <random>

#include "doctest.h"
#include "lyapdecay/lyapunov.hpp"
#include "lyapdecay/models.hpp"
#include "oracles.hpp"

using namespace lyapdecay;

namespace {

ComplexMatrix mat(std::initializer_list<std::initializer_list<Complex>> rows) {
  ComplexMatrix m(rows.size(), rows.begin()->size());
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (const Complex& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
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

TEST_CASE("scalar equation") {
  const LyapunovProblem p(mat({{-1.0}}), mat({{1.0}}));
  const auto sol = solve_lyapunov(p);
  CHECK(sol.x(0, 0).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(sol.s(1) == doctest::Approx(0.5));
  CHECK(sol.positive_definite);

  const LyapunovProblem q(mat({{-1.0}}), mat({{2.0}}));
  CHECK(solve_lyapunov_oracle(q).x(0, 0).real() == doctest::Approx(2.0));

  const auto id = norm_identity_check(p, sol);
  CHECK(id.lhs == doctest::Approx(1.0));
  CHECK(id.rhs == doctest::Approx(1.0));
  CHECK(id.holds());
}

TEST_CASE("2x2 Jordan with t = -1 gives half the identity") {
  const LyapunovProblem p(mat({{-1.0, 2.0}, {0.0, -1.0}}), mat({{-1.0}, {1.0}}));
  for (const auto& sol : {solve_lyapunov(p), solve_lyapunov_oracle(p)}) {
    CHECK((sol.x - 0.5 * ComplexMatrix::Identity(2, 2)).norm() < 1e-14);
    CHECK(sol.s(1) == doctest::Approx(0.5));
    CHECK(sol.s(2) == doctest::Approx(0.5));
  }
  const auto id = norm_identity_check(p, solve_lyapunov(p));
  CHECK(id.lhs == doctest::Approx(2.0));
  CHECK(id.rhs == doctest::Approx(1.0 + std::sqrt(2.0)));
}

TEST_CASE("diagonal A has entrywise solution") {
  const LyapunovProblem p(mat({{-1.0, 0.0}, {0.0, -4.0}}), mat({{1.0}, {1.0}}));
  const ComplexMatrix expected = mat({{0.5, 0.2}, {0.2, 0.125}});
  CHECK((solve_lyapunov(p).x - expected).norm() < 1e-15);
  CHECK((solve_lyapunov_oracle(p).x - expected).norm() < 1e-15);

  std::mt19937_64 rng(7);
  ComplexVector lambda(6);
  for (Index i = 0; i < 6; ++i) lambda(i) = Complex(-0.5 - i, 0.3 * i);
  const ComplexVector b = oracle::random_matrix(rng, 6, 1);
  const LyapunovProblem q(ComplexMatrix(lambda.asDiagonal()), b);
  const ComplexMatrix ref = oracle::diagonal_lyapunov(lambda, b);
  CHECK((solve_lyapunov(q).x - ref).norm() < 1e-12 * ref.norm());
}

TEST_CASE("agrees with the Kronecker oracle on random instances") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Index n = 2 + seed % 9;
    const Index r = 1 + seed % 3;
    const LyapunovProblem p = random_stable(n, r, seed, 0.5 * (seed % 5));
    const auto sol = solve_lyapunov(p);
    const ComplexMatrix ref = oracle::kronecker_lyapunov(p.a(), p.b());
    CAPTURE(seed);
    CHECK((sol.x - ref).norm() <= 1e-8 * ref.norm());
    CHECK((solve_lyapunov_oracle(p).x - ref).norm() <= 1e-8 * ref.norm());
    CHECK((sol.x - sol.x.adjoint()).norm() <= 1e-12 * sol.x.norm());
    CHECK(sol.relative_residual < 1e-12);
    CHECK(sol.positive_definite);
    CHECK(sol.eigenvalues(n - 1) > 0.0);
    CHECK((sol.eigenvalues - sol.singular_values).norm() < 1e-12 * sol.s(1));
    CHECK(norm_identity_check(p, sol).holds());
  }
}

TEST_CASE("oracle refuses large dimensions") {
  const ModelProblem m = fd_operator(65);
  CHECK(code_of([&] { solve_lyapunov_oracle(m.problem); }) == ErrorCode::too_large);
}

TEST_CASE("invalid problems") {
  CHECK(code_of([] { LyapunovProblem(mat({{1.0}}), mat({{1.0}})); }) == ErrorCode::unstable);
  CHECK(code_of([] { LyapunovProblem(mat({{-1.0, 0.0}, {0.0, 0.0}}), mat({{1.0}, {1.0}})); }) ==
        ErrorCode::unstable);
  CHECK(code_of([] { LyapunovProblem(mat({{-1.0, 0.0}, {0.0, -2.0}}), mat({{1.0}, {0.0}})); }) ==
        ErrorCode::not_controllable);
  CHECK(code_of([] { LyapunovProblem(mat({{-1.0, 0.0}, {0.0, -2.0}}), mat({{1.0}})); }) ==
        ErrorCode::dimension_mismatch);
  // repeated eigenvalue with a single input and diagonal A is not controllable
  CHECK(code_of([] { LyapunovProblem(mat({{-1.0, 0.0}, {0.0, -1.0}}), mat({{1.0}, {1.0}})); }) ==
        ErrorCode::not_controllable);
}

TEST_CASE("rank of B") {
  ComplexMatrix b(3, 2);
  b << 1, 2, 1, 2, 1, 2;
  ComplexMatrix a = ComplexMatrix::Zero(3, 3);
  a.diagonal() << -1.0, -2.0, -3.0;
  CHECK(LyapunovProblem(a, b).rank() == 1);
  CHECK(numerical_rank(ComplexMatrix::Identity(4, 4)) == 4);
}

TEST_CASE("scale covariance") {
  const LyapunovProblem p = random_stable(7, 2, 99, 2.0);
  const auto sol = solve_lyapunov(p);
  const Complex c(0.3, -1.7);
  const LyapunovProblem q(p.a(), c * p.b());
  const auto scaled = solve_lyapunov(q);
  CHECK((scaled.x - std::norm(c) * sol.x).norm() < 1e-12 * scaled.x.norm());
  for (Index k = 1; k <= 7; ++k) CHECK(std::abs(scaled.ratio(k) - sol.ratio(k)) < 1e-12);
}

TEST_CASE("unitary covariance") {
  std::mt19937_64 rng(4);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const LyapunovProblem p = random_stable(8, 1, seed, 3.0);
    const ComplexMatrix q = oracle::random_unitary(rng, 8);
    const LyapunovProblem rotated(q * p.a() * q.adjoint(), q * p.b());
    const auto s0 = solve_lyapunov(p).singular_values;
    const auto s1 = solve_lyapunov(rotated).singular_values;
    for (Index k = 0; k < 8; ++k) CHECK(std::abs(s0(k) - s1(k)) <= 1e-10 * s0(0));
  }
}

TEST_CASE("extended precision agrees with standard") {
  const ModelProblem m = jordan_family(32, 1.0);
  const auto a = solve_lyapunov(m.problem);
  const auto b = solve_lyapunov(m.problem, {.precision = Precision::extended});
  for (Index k = 1; k <= 12; ++k) CHECK(std::abs(a.ratio(k) - b.ratio(k)) < 1e-9);
  CHECK(b.relative_residual < 1e-14);
}

TEST_CASE("controllability margin") {
  const LyapunovProblem p = random_stable(5, 1, 8, 1.0);
  CHECK(p.controllability_margin() > 0.0);
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a.diagonal() << -1.0, -2.0;
  CHECK(controllability_margin(a, mat({{1.0}, {0.0}}), a.diagonal()) < 1e-15);
}
