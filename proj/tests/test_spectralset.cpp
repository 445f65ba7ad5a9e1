#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "kspec/acceptance.hpp"
#include "kspec/errors.hpp"
#include "kspec/generators.hpp"
#include "kspec/jordanoracle.hpp"
#include "kspec/regions.hpp"
#include "kspec/spectralset.hpp"

using namespace kspec;

namespace {
const ComplexMatrix kZero1 = ComplexMatrix::Zero(1, 1);
}

TEST_CASE("mu on the Jordan block matches the closed form") {
  const ComplexMatrix J = jordan_block(3);
  const double r = 0.8;
  for (double s : {0.0, 0.37, 2.1}) {
    const cplx e = std::exp(kI * (s / r));
    const cplx sigma = r * e;
    const ComplexMatrix mu = mu_at(sigma, kI * e, J);
    ComplexMatrix exact(3, 3);
    exact << 2.0, std::conj(e) / r, std::conj(e * e) / (r * r),
             e / r, 2.0, std::conj(e) / r,
             e * e / (r * r), e / r, 2.0;
    exact /= 2.0 * kPi * r;
    CHECK((mu - exact).norm() < 1e-13);
  }
  const ComplexMatrix mu0 = mu_at(cplx(1.0, 0.0), kI, kZero1);
  CHECK(mu0(0, 0).real() == doctest::Approx(1.0 / kPi));
  CHECK_THROWS_AS(mu_at(cplx(1.0, 0.0), 2.0 * kI, kZero1), InputError);
}

TEST_CASE("mu is Hermitian for random inputs") {
  const ComplexMatrix A = random_dense(5, 11);
  const ComplexMatrix mu = mu_at(cplx(4.0, 1.0), std::exp(kI * 0.4), A);
  CHECK((mu - mu.adjoint()).norm() <= 1e-14 * mu.norm());
}

TEST_CASE("lambda_min profile on the Jordan block") {
  const ComplexMatrix J = jordan_block(3);
  const auto p = lambda_min_profile(circle_curve({cplx(0.0, 0.0), 0.8}, 256), J);
  for (double v : p.values.front()) CHECK(v == doctest::Approx(0.28 / (2.0 * kPi * 0.512)).epsilon(1e-12));
  const auto z = lambda_min_profile(circle_curve({cplx(0.0, 0.0), 1.0 / std::sqrt(2.0)}, 256), J);
  CHECK(z.max_abs_value() < 1e-13);
  CHECK_THROWS_AS(lambda_min_profile(circle_curve({cplx(2.0, 0.0), 0.5}, 256), J), RegionError);
}

TEST_CASE("delta and gamma_hat on the Jordan block") {
  const ComplexMatrix J = jordan_block(3);
  const auto a = delta_gamma_hat(lambda_min_profile(circle_curve({cplx(0.0, 0.0), 0.5}, 512), J));
  CHECK(a.delta == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(a.gamma_hat == doctest::Approx(2.0).epsilon(1e-12));
  const auto b = delta_gamma_hat(lambda_min_profile(circle_curve({cplx(0.0, 0.0), 0.8}, 512), J));
  CHECK(b.delta == doctest::Approx(-0.4375).epsilon(1e-12));
  CHECK(b.gamma_hat == doctest::Approx(0.4375).epsilon(1e-12));
}

TEST_CASE("delta vanishes on the numerical range boundary") {
  const ComplexMatrix A = perturbed_jordan(3, 0.1);
  const auto d = delta_gamma_hat(lambda_min_profile(numerical_range_curve(A, 1024), A));
  CHECK(std::abs(d.delta) <= 1e-4);
  CHECK(std::abs(d.gamma_hat) <= 1e-4);
}

TEST_CASE("sign pattern of delta about W(A)") {
  const ComplexMatrix A = perturbed_jordan(3, 0.1);
  const BoundaryCurve w = numerical_range_curve(A, 1024);
  const auto inner = scale_inward_curve(w, 0.05, boundary_centroid(w));
  CHECK(delta_gamma_hat(lambda_min_profile(inner, A)).delta > 0.0);
  CHECK(compute_bounds(circle_curve({cplx(0.0, 0.0), 1.0}, 512), A).delta < 0.0);
}

TEST_CASE("k_from_delta") {
  CHECK(std::abs(k_from_delta(0.0, 0.0) - (1.0 + std::sqrt(2.0))) <= 1e-15);
  CHECK(k_from_delta(-1.0, 1.0) == doctest::Approx(2.0));
  // reference values are upper bounds rounded up to three decimals
  CHECK(std::abs(round_up(k_from_delta(0.0377, 0.1179), 3) - 2.488) <= 5e-4);
  CHECK(std::abs(round_up(k_from_delta(7.0485, 7.0485), 3) - 9.865) <= 5e-4);
  CHECK(std::abs(round_up(k_from_delta(2.2234, 2.2234), 3) - 4.884) <= 5e-4);
  CHECK(std::abs(k_from_delta(0.0377, 0.1179) - 2.488) <= 1e-3);
  CHECK_THROWS_AS(k_from_delta(-1.0, -5.0), InputError);
}

TEST_CASE("cauchy_bound") {
  CHECK(cauchy_bound(circle_curve({cplx(0.0, 0.0), 0.7}, 128), kZero1) == doctest::Approx(1.0));
  const ComplexMatrix cI = ComplexMatrix::Identity(2, 2) * cplx(0.3, 0.4);
  CHECK(cauchy_bound(circle_curve({cplx(0.3, 0.4), 0.2}, 128), cI) == doctest::Approx(1.0));
  // ||R(0.8 e^{it})|| = ||T|| / 0.8 on the whole circle of length 2 pi 0.8
  ComplexMatrix T(3, 3);
  T << 1.0, 1.25, 1.5625, 0.0, 1.0, 1.25, 0.0, 0.0, 1.0;
  CHECK(cauchy_bound(circle_curve({cplx(0.0, 0.0), 0.8}, 256), jordan_block(3)) ==
        doctest::Approx(spectral_norm(T)).epsilon(1e-12));
}

TEST_CASE("compute_bounds on the Jordan block") {
  const ComplexMatrix J = jordan_block(3);
  const BoundReport a = compute_bounds(circle_curve({cplx(0.0, 0.0), 0.8}, 512), J);
  CHECK(a.two_plus_delta == doctest::Approx(1.5625).epsilon(1e-12));
  REQUIRE(a.k_disk.has_value());
  CHECK(*a.k_disk == doctest::Approx(1.5625));
  CHECK(a.node_count == 512);
  const BoundReport b = compute_bounds(circle_curve({cplx(0.0, 0.0), 1.0}, 512), J);
  CHECK(b.two_plus_delta == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b.k_delta == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(b.k_delta < b.k_cauchy);
}

TEST_CASE("adaptive refinement converges and records the node count") {
  const ComplexMatrix A = perturbed_jordan(3, 0.1);
  const BoundReport r = compute_bounds_adaptive(
      [](int n) { return circle_curve({cplx(0.0, 0.0), 0.6}, n); }, A);
  CHECK(r.converged);
  CHECK(r.node_count >= 512);
  const BoundReport fixed = compute_bounds(circle_curve({cplx(0.0, 0.0), 0.6}, 8192), A);
  CHECK(r.delta == doctest::Approx(fixed.delta).epsilon(1e-8));
}

TEST_CASE("mu integral identity") {
  CHECK(mu_integral_check(circle_curve({cplx(0.0, 0.0), 1.0}, 64), kZero1) < 1e-14);
  CHECK(mu_integral_check(circle_curve({cplx(0.0, 0.0), 1.0}, 512), jordan_block(3)) <= 1e-10);
  const ComplexMatrix U = random_upper_triangular(12, 3);
  Circle c = min_enclosing_circle(spectrum(U));
  c.radius *= 1.5;
  const double coarse = mu_integral_check(circle_curve(c, 256), U);
  const double fine = mu_integral_check(circle_curve(c, 2048), U);
  CHECK(fine <= 1e-6);
  CHECK(fine <= coarse + 1e-14);
}

TEST_CASE("gamma_hat dominates |delta| and profiles scale as 1/length") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const ComplexMatrix A = random_dense(4, seed);
    Circle c = min_enclosing_circle(spectrum(A));
    c.radius = c.radius * 1.2 + 0.1;
    const auto p = lambda_min_profile(circle_curve(c, 256), A);
    const auto d = delta_gamma_hat(p);
    CHECK(d.gamma_hat >= std::abs(d.delta) - 1e-14);
    const auto q = lambda_min_profile(circle_curve({2.0 * c.center, 2.0 * c.radius}, 256), 2.0 * A);
    for (std::size_t k = 0; k < 256; ++k) CHECK(q.values[0][k] == doctest::Approx(p.values[0][k] / 2.0).epsilon(1e-10));
  }
}

TEST_CASE("delta decreases along a circle sweep") {
  const ComplexMatrix A = perturbed_jordan(3, 0.1);
  double previous = 1e300;
  for (double R : {0.55, 0.62, 0.68, 0.75, 0.9, 1.1}) {
    const double d = compute_bounds(circle_curve({cplx(0.0, 0.0), R}, 512), A).delta;
    CHECK(d < previous);
    previous = d;
  }
}

TEST_CASE("perturbation bound") {
  const ComplexMatrix A = perturbed_jordan(3, 0.1);
  const cplx sigma(0.8, 0.1);
  CHECK(perturbation_bound_at(sigma, kI, sigma, A) == 0.0);
  const BoundaryCurve w = numerical_range_curve(A, 1024);
  const BoundaryCurve inner = scale_inward_curve(w, 0.01, boundary_centroid(w));
  const auto p = lambda_min_profile(inner, A);
  for (std::size_t k = 0; k < inner.node_count(); k += 7) {
    const double bound = perturbation_bound_at(w.components[0].nodes[k], w.components[0].tangents[k],
                                               inner.components[0].nodes[k], A);
    CHECK(bound <= 0.0);
    CHECK(p.values[0][k] >= bound - 1e-10);
  }
}

TEST_CASE("unit_disk_delta") {
  const BoundReport j = unit_disk_delta(jordan_block(3));
  CHECK(j.delta == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(*j.k_disk == doctest::Approx(1.0));
  const BoundReport z = unit_disk_delta(kZero1);
  CHECK(z.delta == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(*z.k_disk == 1.0);
  ComplexMatrix D = ComplexMatrix::Zero(2, 2);
  D(0, 0) = 1.0;
  CHECK_THROWS_AS(unit_disk_delta(D), InputError);
}
