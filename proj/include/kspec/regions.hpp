#pragma once

#include <optional>
#include <vector>

#include "kspec/matkernel.hpp"
#include "kspec/parallel.hpp"

namespace kspec {

struct Circle {
  cplx center{0.0, 0.0};
  double radius = 0.0;
};

/// One closed, counterclockwise boundary component sampled for the periodic
/// trapezoid rule: nodes sigma(s_k), unit tangents sigma'(s_k), arclength weights.
struct ClosedComponent {
  std::vector<cplx> nodes;
  std::vector<cplx> tangents;
  std::vector<double> weights;
  double length = 0.0;

  std::size_t size() const { return nodes.size(); }
};

struct BoundaryCurve {
  std::vector<ClosedComponent> components;
  double total_length = 0.0;
  /// Set when the curve is exactly one circle (enables disk shortcuts).
  std::optional<Circle> disk;

  std::size_t node_count() const;
};

/// Uniform nodes c + R e^{2 pi i k/N}; requires N >= 8 and R > 0.
BoundaryCurve circle_curve(const Circle& circle, int nodes_per_component);

/// One component per circle; closed disks must be pairwise disjoint.
BoundaryCurve union_of_circles(const std::vector<Circle>& circles, int nodes_per_component);

/// Boundary of the numerical range W(A) together with the support angle of each node.
struct NumericalRangeBoundary {
  BoundaryCurve curve;
  std::vector<double> support_angles;
  /// True when the spectral (trigonometric) arclength parameterization was used;
  /// false for the chord-length fallback taken when support points coincide.
  bool spectral = true;
};

/// Support-angle sweep of the numerical range: for theta_k = 2 pi k / angle_samples
/// the boundary point is q* A q with q the top eigenvector of the Hermitian part of
/// e^{-i theta} A. The result is resampled to `output_nodes` points (default:
/// angle_samples) uniformly spaced in arclength.
NumericalRangeBoundary numerical_range_boundary(const ComplexMatrix& A, int angle_samples = 1024,
                                                int output_nodes = 0, Exec exec = Exec::parallel);

BoundaryCurve numerical_range_curve(const ComplexMatrix& A, int angle_samples = 1024,
                                    int output_nodes = 0, Exec exec = Exec::parallel);

/// Homothety toward `center` by (1 - epsilon). Node k of the result pairs with
/// node k of the input (s~ = (1 - epsilon) s) and shares its tangent.
BoundaryCurve scale_inward_curve(const BoundaryCurve& curve, double epsilon, cplx center);

/// Exact minimal enclosing circle (randomized incremental, fixed shuffle seed).
Circle min_enclosing_circle(const std::vector<cplx>& points);

/// True iff every point has total winding number 1 and stays at least `guard`
/// away from every node. guard < 0 selects 1e-12 * (1 + max |point|).
bool validate_encloses(const BoundaryCurve& curve, const std::vector<cplx>& points,
                       double guard = -1.0);

/// Winding number of the closed polygon through the component's nodes about p.
int winding_number(const ClosedComponent& component, cplx p);

/// Weighted boundary centroid of all components.
cplx boundary_centroid(const BoundaryCurve& curve);

/// Consecutive edge cross products all positive (tolerance 1e-10 * diameter).
bool is_convex(const ClosedComponent& component);

/// Node-set diameter estimate (two-sweep farthest point; within a factor 2, exact for circles).
double diameter(const ClosedComponent& component);

namespace detail {
/// circle_curve without the node-count floor (test fixtures only).
BoundaryCurve circle_curve_unchecked(const Circle& circle, int n);
}  // namespace detail

}  // namespace kspec
