#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "kspec/blaschke.hpp"
#include "kspec/cauchykit.hpp"
#include "kspec/errors.hpp"
#include "kspec/generators.hpp"
#include "kspec/jordanoracle.hpp"
#include "kspec/regions.hpp"

using namespace kspec;

namespace {
const Circle kDisk{cplx(0.0, 0.0), 0.6};

BoundaryFunction optimal_on_disk(const ComplexMatrix& A, const Circle& disk, int nodes) {
  const auto n = A.rows();
  const ComplexMatrix Psi = (A - disk.center * ComplexMatrix::Identity(n, n)) / disk.radius;
  return rescale_to_unit_sup(blaschke_on_disk(maximize_norm(Psi, int(n) - 1, 10, 12345).product, disk, nodes));
}
}  // namespace

TEST_CASE("matrix_function of simple functions") {
  const ComplexMatrix A = perturbed_jordan(3, 0.1);
  const BoundaryCurve c = circle_curve(kDisk, 512);
  const auto one = sample_boundary_function(c, [](cplx) { return cplx(1.0, 0.0); });
  CHECK((matrix_function(one, A) - ComplexMatrix::Identity(3, 3)).norm() <= 1e-10);
  const auto id = sample_boundary_function(c, [](cplx z) { return z; });
  CHECK((matrix_function(id, A) - A).norm() <= 1e-10);
}

TEST_CASE("matrix_function of polynomials") {
  const ComplexMatrix A = random_dense(4, 9) * 0.5;
  Circle c = min_enclosing_circle(spectrum(A));
  c.radius = c.radius * 1.3 + 0.2;
  const cplx coeff[] = {{1, 0}, {0.5, -0.2}, {0, 1}, {-0.3, 0}, {0.1, 0.1}, {0, 0}, {0.05, 0}, {0.01, -0.02}};
  const auto f = sample_boundary_function(circle_curve(c, 1024), [&](cplx z) {
    cplx v = 0.0;
    for (int k = 7; k >= 0; --k) v = v * z + coeff[k];
    return v;
  });
  ComplexMatrix P = ComplexMatrix::Zero(4, 4);
  for (int k = 7; k >= 0; --k) P = P * A + coeff[k] * ComplexMatrix::Identity(4, 4);
  CHECK((matrix_function(f, A) - P).norm() <= 1e-8);
}

TEST_CASE("Blaschke on a disk agrees with eval_matrix") {
  const ComplexMatrix A = perturbed_jordan(3, 0.1);
  const BlaschkeProduct B{0.3, {cplx(0.2, 0.1), cplx(-0.3, 0.4)}};
  const auto f = blaschke_on_disk(B, kDisk, 1024);
  CHECK(f.sup_norm == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((matrix_function(f, A) - eval_matrix(B, A / kDisk.radius)).norm() <= 1e-8);
}

TEST_CASE("g on a disk is the constant conj(f(c))") {
  const BlaschkeProduct B{0.0, {cplx(0.2, 0.1), cplx(-0.3, 0.4)}};
  const auto f = blaschke_on_disk(B, kDisk, 512);
  const auto g = g_boundary_values(f);
  const cplx expected = std::conj(eval_scalar(B, cplx(0.0, 0.0)));
  for (const auto& v : g.values[0]) CHECK(std::abs(v - expected) <= 1e-8);
  CHECK(g.sup_norm <= f.sup_norm + 1e-8);
  CHECK(hull_check(f, g));
}

TEST_CASE("g of a constant on a non-circular convex curve") {
  const ComplexMatrix A = perturbed_jordan(3, 0.1);
  const BoundaryCurve w = numerical_range_curve(A, 512);
  const cplx k(0.3, -0.4);
  const auto f = sample_boundary_function(w, [k](cplx) { return k; });
  const auto g = g_boundary_values(f);
  for (const auto& v : g.values[0]) CHECK(std::abs(v - std::conj(k)) <= 1e-8);
  CHECK(hull_check(f, g));
}

TEST_CASE("sup |g| <= sup |f| on the numerical range boundary") {
  const ComplexMatrix A = perturbed_jordan(3, 0.1);
  const BoundaryCurve w = numerical_range_curve(A, 512);
  const auto f = rescale_to_unit_sup(sample_boundary_function(w, [](cplx z) { return std::exp(2.0 * z) * z; }));
  const auto g = g_boundary_values(f);
  CHECK(g.sup_norm <= f.sup_norm + 1e-8);
  CHECK(hull_check(f, g));
}

TEST_CASE("g refuses multi-component and non-convex curves") {
  const auto two = union_of_circles({{cplx(0.0, 0.0), 0.2}, {cplx(1.0, 0.0), 0.2}}, 64);
  const auto f = sample_boundary_function(two, [](cplx z) { return z; });
  CHECK_THROWS_AS(g_boundary_values(f), UnsupportedRegionError);
}

TEST_CASE("g_of_matrix: quadrature vs disk shortcut") {
  const ComplexMatrix A = perturbed_jordan(3, 0.1);
  const auto f = optimal_on_disk(A, kDisk, 2048);
  const CauchyTransform g = g_of_matrix_detailed(f, A);
  REQUIRE(g.disk_shortcut.has_value());
  CHECK(g.shortcut_deviation <= 1e-6);
  const auto one = sample_boundary_function(circle_curve(kDisk, 512), [](cplx) { return cplx(1.0, 0.0); });
  CHECK((g_of_matrix(one, A) - ComplexMatrix::Identity(3, 3)).norm() <= 1e-10);
}

TEST_CASE("assemble_S: ||S|| <= 2 + delta and the f = 1 equality case") {
  const ComplexMatrix J = jordan_block(3);
  for (double r : {0.6, 0.8, 1.0}) {
    const auto one = sample_boundary_function(circle_curve({cplx(0.0, 0.0), r}, 512), [](cplx) { return cplx(1.0, 0.0); });
    const auto profile = lambda_min_profile(one.curve, J);
    const double delta = delta_gamma_hat(profile).delta;
    const SOperatorResult S = assemble_S(one, J, profile);
    CHECK((S.S - (2.0 + delta) * ComplexMatrix::Identity(3, 3)).norm() <= 1e-10);
    CHECK(std::abs(S.gamma - cplx(delta, 0.0)) <= 1e-12);
    CHECK((S.S - (S.fA + S.gA.adjoint() + S.gamma * ComplexMatrix::Identity(3, 3))).norm() <= 1e-12);
  }
  const ComplexMatrix A = perturbed_jordan(3, 0.1);
  const auto f = optimal_on_disk(A, kDisk, 1024);
  const auto profile = lambda_min_profile(f.curve, A);
  CHECK(assemble_S(f, A, profile).norm_S <= 2.0 + delta_gamma_hat(profile).delta + 1e-6);

  auto half = f;
  for (auto& v : half.values[0]) v *= 0.5;
  half.sup_norm *= 0.5;
  CHECK_THROWS_AS(assemble_S(half, A, profile), InputError);
}

TEST_CASE("conjecture probe") {
  const ComplexMatrix A = perturbed_jordan(3, 0.1);
  const auto f = optimal_on_disk(A, kDisk, 1024);
  const auto probe = conjecture_probe(f, A, lambda_min_profile(f.curve, A));
  CHECK(probe.norm_fA > 1.0);
  REQUIRE(probe.singular_identity_residual.has_value());
  CHECK(*probe.singular_identity_residual <= 1e-6);
  CHECK_FALSE(probe.violation);

  const auto one = sample_boundary_function(f.curve, [](cplx) { return cplx(1.0, 0.0); });
  const auto p1 = conjecture_probe(one, A, lambda_min_profile(one.curve, A));
  CHECK(p1.norm_fA == doctest::Approx(1.0));
  CHECK(p1.norm_fA_plus_gA_star == doctest::Approx(2.0));
}

TEST_CASE("fit_affine_inverse") {
  const ComplexMatrix F = random_dense(3, 21) + 2.0 * ComplexMatrix::Identity(3, 3);
  const ComplexMatrix finv_star = F.adjoint().inverse();
  const ComplexMatrix G = (2.0 * ComplexMatrix::Identity(3, 3) + 0.3 * finv_star).adjoint();
  const FitDiagnostic fit = fit_affine_inverse(F, G);
  CHECK(std::abs(fit.c0 - 2.0) <= 1e-10);
  CHECK(std::abs(fit.c1 - 0.3) <= 1e-10);
  CHECK(fit.residual <= 1e-12 * (1.0 + G.norm()));

  const cplx fc(0.2, -0.1);
  const FitDiagnostic disk = fit_affine_inverse(F, std::conj(fc) * ComplexMatrix::Identity(3, 3));
  CHECK(std::abs(disk.c0 - fc) <= 1e-10);
  CHECK(std::abs(disk.c1) <= 1e-10);
  CHECK(disk.residual <= 1e-10);
  CHECK(disk.condition_holds);
}

TEST_CASE("affine-inverse condition Re(c1) >= |c1|^2 / (2 ||f(A)||^2)") {
  const ComplexMatrix F = random_dense(3, 4) + 2.0 * ComplexMatrix::Identity(3, 3);
  const ComplexMatrix G = (ComplexMatrix::Identity(3, 3) + 0.3 * F.adjoint().inverse()).adjoint();
  CHECK(fit_affine_inverse(F, G).condition_holds);
  const ComplexMatrix H = (ComplexMatrix::Identity(3, 3) - 0.3 * F.adjoint().inverse()).adjoint();
  CHECK_FALSE(fit_affine_inverse(F, H).condition_holds);
}

TEST_CASE("convex hull helpers") {
  const auto hull = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0.5, 0}});
  CHECK(hull.size() == 4);
  CHECK(distance_to_hull(hull, cplx(0.5, 0.5)) == 0.0);
  CHECK(distance_to_hull(hull, cplx(2.0, 0.5)) == doctest::Approx(1.0));
  CHECK(distance_to_hull({cplx(1.0, 1.0)}, cplx(4.0, 5.0)) == doctest::Approx(5.0));
}
