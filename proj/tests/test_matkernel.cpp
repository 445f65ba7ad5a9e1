#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "kspec/errors.hpp"
#include "kspec/generators.hpp"
#include "kspec/jordanoracle.hpp"
#include "kspec/matkernel.hpp"

using namespace kspec;

TEST_CASE("hermitian_min_eig on small examples") {
  ComplexMatrix H(2, 2);
  H << 2.0, 0.0, 0.0, 3.0;
  CHECK(hermitian_min_eigenvalue(H) == doctest::Approx(2.0));

  H << 0.0, kI, -kI, 0.0;
  const auto e = hermitian_min_eig(H);
  CHECK(e.value == doctest::Approx(-1.0));
  CHECK(e.vector.norm() == doctest::Approx(1.0));
  CHECK((H * e.vector - e.value * e.vector).norm() < 1e-12);
}

TEST_CASE("hermitian_min_eig degenerate eigenvalue returns a unit eigenvector") {
  const ComplexMatrix H = ComplexMatrix::Identity(4, 4) * 3.0;
  const auto e = hermitian_min_eig(H);
  CHECK(e.value == doctest::Approx(3.0));
  CHECK(e.vector.norm() == doctest::Approx(1.0));
}

TEST_CASE("hermitian_min_eig rejects non-Hermitian and non-finite input") {
  ComplexMatrix H(2, 2);
  H << 1.0, 2.0, 0.0, 1.0;
  CHECK_THROWS_AS(hermitian_min_eig(H), InputError);
  H << 1.0, std::numeric_limits<double>::quiet_NaN(), 0.0, 1.0;
  CHECK_THROWS_AS(hermitian_min_eigenvalue(H), InputError);
  CHECK_THROWS_AS(hermitian_min_eig(ComplexMatrix(2, 3)), InputError);
  CHECK_THROWS_AS(hermitian_min_eig(ComplexMatrix(0, 0)), InputError);
}

TEST_CASE("largest singular triple") {
  const ComplexMatrix J = jordan_block(3);
  const auto t = largest_singular_triple(J);
  CHECK(t.sigma1 == doctest::Approx(1.0));
  CHECK((J * t.v1 - t.sigma1 * t.u1).norm() < 1e-12);
  CHECK(spectral_norm(J * J) == doctest::Approx(1.0));
  CHECK(min_singular_value(J) == doctest::Approx(0.0));

  const auto z = largest_singular_triple(ComplexMatrix::Zero(3, 3));
  CHECK(z.sigma1 == 0.0);
  CHECK(z.v1.norm() == doctest::Approx(1.0));
}

TEST_CASE("resolvent of a Jordan block") {
  const ComplexMatrix J = jordan_block(3);
  const cplx s(0.5, 0.2);
  const ComplexMatrix R = resolvent(s, J);
  CHECK(((s * ComplexMatrix::Identity(3, 3) - J) * R - ComplexMatrix::Identity(3, 3)).norm() < 1e-12);
  // (sI - J)^{-1} = I/s + J/s^2 + J^2/s^3
  const ComplexMatrix exact = ComplexMatrix::Identity(3, 3) / s + J / (s * s) + J * J / (s * s * s);
  CHECK((R - exact).norm() < 1e-12);
}

TEST_CASE("resolvent at an eigenvalue raises SingularityError") {
  CHECK_THROWS_AS(resolvent(cplx(0.0, 0.0), jordan_block(3)), SingularityError);
  ComplexMatrix D = ComplexMatrix::Zero(2, 2);
  D(0, 0) = 1.0;
  D(1, 1) = 2.0;
  CHECK_THROWS_AS(resolvent(cplx(2.0, 0.0), D), SingularityError);
  CHECK_THROWS_AS(resolvent(cplx(2.0, 0.0), D), NumericalError);
  CHECK_NOTHROW(resolvent(cplx(2.0, 1e-3), D));
}

TEST_CASE("spectrum of the perturbed Jordan block is the cube roots of eps") {
  const auto eig = spectrum(perturbed_jordan(3, 0.1));
  REQUIRE(eig.size() == 3);
  for (const auto& l : eig) {
    CHECK(std::abs(l) == doctest::Approx(std::cbrt(0.1)));
    CHECK(std::abs(l * l * l - 0.1) < 1e-12);
  }
}

TEST_CASE("is_normal and hermitian_part") {
  CHECK_FALSE(is_normal(jordan_block(3)));
  ComplexMatrix D = ComplexMatrix::Zero(3, 3);
  D(0, 0) = kI;
  D(2, 2) = 2.0;
  CHECK(is_normal(D));
  const ComplexMatrix H = hermitian_part(random_dense(4, 3));
  CHECK((H - H.adjoint()).norm() == 0.0);
}

TEST_CASE("generators are deterministic and shaped as documented") {
  CHECK(random_upper_triangular(12, 7) == random_upper_triangular(12, 7));
  CHECK(random_upper_triangular(12, 7) != random_upper_triangular(12, 8));
  const ComplexMatrix U = random_upper_triangular(6, 1);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < i; ++j) CHECK(U(i, j) == cplx(0.0, 0.0));
  const ComplexMatrix P = perturbed_jordan(3, 0.1);
  CHECK(P(2, 0) == cplx(0.1, 0.0));
  CHECK(P(0, 1) == cplx(1.0, 0.0));
  CHECK(P(1, 2) == cplx(1.0, 0.0));
  CHECK((P - jordan_block(3)).norm() == doctest::Approx(0.1));
}
