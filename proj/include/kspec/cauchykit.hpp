#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "kspec/blaschke.hpp"
#include "kspec/matkernel.hpp"
#include "kspec/parallel.hpp"
#include "kspec/regions.hpp"
#include "kspec/spectralset.hpp"

namespace kspec {

/// Values of a function on the nodes of a boundary curve. The optional evaluator
/// recomputes the function anywhere (used when nodes are refined).
struct BoundaryFunction {
  BoundaryCurve curve;
  std::vector<std::vector<cplx>> values;
  double sup_norm = 0.0;
  std::function<cplx(cplx)> evaluator;
};

BoundaryFunction sample_boundary_function(const BoundaryCurve& curve, std::function<cplx(cplx)> f);

/// Divides values (and the evaluator) by sup_norm so the result has sup_norm 1.
BoundaryFunction rescale_to_unit_sup(const BoundaryFunction& f);

/// z -> B((z - c) / R) sampled on circle_curve(disk, nodes).
BoundaryFunction blaschke_on_disk(const BlaschkeProduct& B, const Circle& disk, int nodes);

/// f(A) = sum_k w_k (sigma'_k / 2 pi i) R(sigma_k, A) f(sigma_k).
ComplexMatrix matrix_function(const BoundaryFunction& f, const ComplexMatrix& A,
                              Exec exec = Exec::parallel);

inline constexpr double kShrinkEta = 1e-3;

/// Cauchy transform g(z) = (1/2 pi i) oint conj(f(sigma)) / (sigma - z) d sigma evaluated on
/// the curve shrunk by (1 - eta) toward its centroid. The integral is taken on a refined
/// node set (at least 40/eta nodes) so the near-singular kernel is resolved.
/// Requires a single convex component.
BoundaryFunction g_boundary_values(const BoundaryFunction& f, double eta = kShrinkEta,
                                   Exec exec = Exec::parallel);

struct CauchyTransform {
  ComplexMatrix gA;
  /// conj(f(c)) I when the curve is a disk about c.
  std::optional<ComplexMatrix> disk_shortcut;
  double shortcut_deviation = 0.0;  ///< ||gA - shortcut||_F
};

/// g(A) = sum_k w_k (sigma'_k / 2 pi i) R(sigma_k, A) conj(f(sigma_k)), plus the disk
/// shortcut when available.
CauchyTransform g_of_matrix_detailed(const BoundaryFunction& f, const ComplexMatrix& A,
                                     Exec exec = Exec::parallel);

/// Quadrature g(A); on disks throws NumericalError if it disagrees with the shortcut by > 1e-6.
ComplexMatrix g_of_matrix(const BoundaryFunction& f, const ComplexMatrix& A,
                          Exec exec = Exec::parallel);

struct SOperatorResult {
  ComplexMatrix S;
  cplx gamma{0.0, 0.0};
  ComplexMatrix fA;
  ComplexMatrix gA;
  double norm_S = 0.0;
  double norm_fA = 0.0;
};

/// S = f(A) + g(A)* + gamma I with gamma = -sum_k w_k lambda_min_k f(sigma_k).
/// Requires sup_norm(f) = 1 and a profile on the same nodes as f.
SOperatorResult assemble_S(const BoundaryFunction& f, const ComplexMatrix& A,
                           const LambdaMinProfile& profile, Exec exec = Exec::parallel);

struct ConjectureProbe {
  double norm_fA = 0.0;
  double norm_fA_plus_gA_star = 0.0;
  double norm_S = 0.0;
  /// |u1* S v1 - ||f(A)|||, reported on disks when ||f(A)|| > 1.
  std::optional<double> singular_identity_residual;
  /// ||f(A)|| > ||f(A) + g(A)*|| beyond a 1e-10 relative margin. Recorded, never enforced.
  bool violation = false;
};

ConjectureProbe conjecture_probe(const BoundaryFunction& f, const ComplexMatrix& A,
                                 const LambdaMinProfile& profile, Exec exec = Exec::parallel);

struct FitDiagnostic {
  cplx c0{0.0, 0.0};
  cplx c1{0.0, 0.0};
  double residual = 0.0;
  bool condition_holds = false;
};

/// Least-squares fit g(A)* ~ c0 I + c1 (f(A)*)^{-1} in the Frobenius inner product.
FitDiagnostic fit_affine_inverse(const ComplexMatrix& fA, const ComplexMatrix& gA);

/// Every value of g lies within 1e-8 (1 + diameter) of the convex hull of conj(f values).
bool hull_check(const BoundaryFunction& f, const BoundaryFunction& g);

/// Counterclockwise convex hull (monotone chain); collinear points dropped.
std::vector<cplx> convex_hull(std::vector<cplx> points);

/// Distance from p to the convex polygon `hull` (0 inside).
double distance_to_hull(const std::vector<cplx>& hull, cplx p);

}  // namespace kspec
