#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "kspec/matkernel.hpp"
#include "kspec/parallel.hpp"
#include "kspec/regions.hpp"

namespace kspec {

/// mu(sigma, A) = X + X*, X = (tangent / 2 pi i) R(sigma, A). Hermitian by construction.
ComplexMatrix mu_at(cplx sigma, cplx tangent, const ComplexMatrix& A);

/// lambda_min(mu(sigma_k, A)) at every node, grouped like the curve's components.
struct LambdaMinProfile {
  BoundaryCurve curve;
  std::vector<std::vector<double>> values;

  double min_value() const;
  double max_abs_value() const;
};

/// Computes the profile; throws RegionError unless the curve encloses spectrum(A).
LambdaMinProfile lambda_min_profile(const BoundaryCurve& curve, const ComplexMatrix& A,
                                    Exec exec = Exec::parallel);

struct DeltaGamma {
  double delta = 0.0;      ///< -integral of lambda_min
  double gamma_hat = 0.0;  ///< integral of |lambda_min|
};

DeltaGamma delta_gamma_hat(const LambdaMinProfile& profile);

/// Upper bound on c_Omega: 1 + delta/2 + sqrt(2 + delta + delta^2/4 + gamma_hat).
double k_from_delta(double delta, double gamma_hat);

/// (1/2 pi) * sum_k w_k ||R(sigma_k, A)||.
double cauchy_bound(const BoundaryCurve& curve, const ComplexMatrix& A, Exec exec = Exec::parallel);

struct BoundReport {
  double delta = 0.0;
  double gamma_hat = 0.0;
  double two_plus_delta = 2.0;
  double k_delta = 0.0;
  double k_cauchy = 0.0;
  std::size_t node_count = 0;
  bool converged = true;
  /// max{1, 2 + delta}: the bound available when the region is a disk.
  std::optional<double> k_disk;
};

/// Bounds on a fixed node set.
BoundReport compute_bounds(const BoundaryCurve& curve, const ComplexMatrix& A,
                           Exec exec = Exec::parallel);

/// Produces the region sampled with a given number of nodes per component.
using CurveFactory = std::function<BoundaryCurve(int nodes_per_component)>;

struct RefinementOptions {
  int start_nodes = 256;
  int max_nodes = 8192;
  double rtol = 1e-8;
};

/// Doubles the node count until delta and gamma_hat change by at most
/// rtol * (1 + |value|) between successive levels.
BoundReport compute_bounds_adaptive(const CurveFactory& factory, const ComplexMatrix& A,
                                    const RefinementOptions& options = {},
                                    Exec exec = Exec::parallel);

/// ||sum_k w_k mu(sigma_k, A) - 2I||_F.
double mu_integral_check(const BoundaryCurve& curve, const ComplexMatrix& A,
                         Exec exec = Exec::parallel);

/// Lower bound on lambda_min(mu(sigma_tilde, A)) for sigma on the boundary of W(A)
/// with unit tangent `tangent`, sigma_tilde its matched inner point:
/// -|sigma_tilde - sigma| * ||Y + Y*||, Y = (tangent / 2 pi i) R(sigma) R(sigma_tilde).
double perturbation_bound_at(cplx sigma, cplx tangent, cplx sigma_tilde, const ComplexMatrix& A);

/// Bounds on the unit circle for Psi with spectrum strictly inside the unit disk;
/// the report's k_disk holds max{1, 2 + delta}.
BoundReport unit_disk_delta(const ComplexMatrix& Psi, const RefinementOptions& options = {},
                            Exec exec = Exec::parallel);

}  // namespace kspec
