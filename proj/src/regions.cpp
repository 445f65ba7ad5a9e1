#include "kspec/regions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "kspec/errors.hpp"
#include "kspec/periodic.hpp"

namespace kspec {

std::size_t BoundaryCurve::node_count() const {
  std::size_t total = 0;
  for (const auto& c : components) total += c.size();
  return total;
}

namespace {

double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

ClosedComponent circle_component(const Circle& circle, int n) {
  ClosedComponent comp;
  comp.nodes.resize(static_cast<std::size_t>(n));
  comp.tangents.resize(static_cast<std::size_t>(n));
  comp.weights.assign(static_cast<std::size_t>(n), 2.0 * kPi * circle.radius / n);
  for (int k = 0; k < n; ++k) {
    const cplx e = std::polar(1.0, 2.0 * kPi * k / n);
    comp.nodes[static_cast<std::size_t>(k)] = circle.center + circle.radius * e;
    comp.tangents[static_cast<std::size_t>(k)] = kI * e;
  }
  comp.length = 2.0 * kPi * circle.radius;
  return comp;
}

void require_circle(const Circle& c) {
  if (!(c.radius > 0.0) || !std::isfinite(c.radius) || !std::isfinite(c.center.real()) ||
      !std::isfinite(c.center.imag())) {
    throw InputError("circle: radius must be positive and finite");
  }
}

}  // namespace

namespace detail {

// Unchecked node count; tests use it for tiny N.
BoundaryCurve circle_curve_unchecked(const Circle& circle, int n) {
  BoundaryCurve curve;
  curve.components.push_back(circle_component(circle, n));
  curve.total_length = curve.components.front().length;
  curve.disk = circle;
  return curve;
}

}  // namespace detail

BoundaryCurve circle_curve(const Circle& circle, int nodes_per_component) {
  require_circle(circle);
  if (nodes_per_component < 8) {
    throw InputError("circle_curve: need at least 8 nodes per component");
  }
  return detail::circle_curve_unchecked(circle, nodes_per_component);
}

BoundaryCurve union_of_circles(const std::vector<Circle>& circles, int nodes_per_component) {
  if (circles.empty()) throw InputError("union_of_circles: no circles given");
  if (nodes_per_component < 8) {
    throw InputError("union_of_circles: need at least 8 nodes per component");
  }
  for (const auto& c : circles) require_circle(c);
  for (std::size_t i = 0; i < circles.size(); ++i) {
    for (std::size_t j = i + 1; j < circles.size(); ++j) {
      const double gap = std::abs(circles[i].center - circles[j].center);
      if (gap <= circles[i].radius + circles[j].radius) {
        throw InputError("union_of_circles: circles " + std::to_string(i) + " and " +
                         std::to_string(j) + " overlap");
      }
    }
  }
  BoundaryCurve curve;
  for (const auto& c : circles) {
    curve.components.push_back(circle_component(c, nodes_per_component));
    curve.total_length += curve.components.back().length;
  }
  if (circles.size() == 1) curve.disk = circles.front();
  return curve;
}

namespace {

// Resample a smooth support curve p(theta) on a uniform theta grid to uniform arclength.
NumericalRangeBoundary spectral_arclength(const std::vector<cplx>& support, int output_nodes) {
  const std::size_t m = support.size();
  const periodic::TrigInterpolant curve(support);
  const std::vector<cplx> dp = periodic::derivative(support);
  std::vector<cplx> speed(m);
  for (std::size_t k = 0; k < m; ++k) speed[k] = std::abs(dp[k]);
  const periodic::TrigInterpolant speed_fn(speed);

  const double length = 2.0 * kPi * speed_fn.mean().real();
  if (!(length > 0.0)) throw NumericalError("numerical_range_curve: degenerate boundary length");

  // Cumulative arclength on the grid seeds the Newton solves.
  std::vector<double> grid_s(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    grid_s[k] = speed_fn.integral(2.0 * kPi * static_cast<double>(k) / static_cast<double>(m)).real();
  }

  NumericalRangeBoundary out;
  ClosedComponent comp;
  const auto n = static_cast<std::size_t>(output_nodes);
  comp.nodes.resize(n);
  comp.tangents.resize(n);
  comp.weights.assign(n, length / static_cast<double>(n));
  comp.length = length;
  out.support_angles.resize(n);

  for (std::size_t j = 0; j < n; ++j) {
    const double target = length * static_cast<double>(j) / static_cast<double>(n);
    auto it = std::upper_bound(grid_s.begin(), grid_s.end(), target);
    std::size_t k = it == grid_s.begin() ? 0 : static_cast<std::size_t>(it - grid_s.begin()) - 1;
    k = std::min(k, m - 1);
    const double h = 2.0 * kPi / static_cast<double>(m);
    double theta = h * (static_cast<double>(k) +
                        (target - grid_s[k]) / std::max(grid_s[k + 1] - grid_s[k], 1e-300));
    for (int iter = 0; iter < 50; ++iter) {
      const double residual = speed_fn.integral(theta).real() - target;
      const double slope = speed_fn.value(theta).real();
      const double step = residual / slope;
      theta -= step;
      if (std::abs(step) < 1e-15) break;
    }
    const cplx d = curve.derivative(theta);
    const double d_abs = std::abs(d);
    if (!(d_abs > 0.0)) throw NumericalError("numerical_range_curve: vanishing boundary speed");
    comp.nodes[j] = curve.value(theta);
    comp.tangents[j] = d / d_abs;
    out.support_angles[j] = theta;
  }
  out.curve.components.push_back(std::move(comp));
  out.curve.total_length = length;
  out.spectral = true;
  return out;
}

// Piecewise-linear fallback when the support map is not injective (corners).
NumericalRangeBoundary chord_arclength(const std::vector<cplx>& pts, const std::vector<double>& angles,
                                       int output_nodes) {
  const std::size_t m = pts.size();
  std::vector<double> cum(m + 1, 0.0);
  for (std::size_t k = 0; k < m; ++k) cum[k + 1] = cum[k] + std::abs(pts[(k + 1) % m] - pts[k]);
  const double length = cum[m];
  const auto n = static_cast<std::size_t>(output_nodes);
  NumericalRangeBoundary out;
  ClosedComponent comp;
  comp.nodes.resize(n);
  comp.tangents.resize(n);
  comp.weights.assign(n, length / static_cast<double>(n));
  comp.length = length;
  out.support_angles.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double target = length * static_cast<double>(j) / static_cast<double>(n);
    auto it = std::upper_bound(cum.begin(), cum.end(), target);
    std::size_t k = static_cast<std::size_t>(it - cum.begin()) - 1;
    k = std::min(k, m - 1);
    const cplx a = pts[k];
    const cplx b = pts[(k + 1) % m];
    const double t = (target - cum[k]) / std::max(cum[k + 1] - cum[k], 1e-300);
    comp.nodes[j] = a + t * (b - a);
    comp.tangents[j] = (b - a) / std::abs(b - a);
    out.support_angles[j] = angles[k];
  }
  out.curve.components.push_back(std::move(comp));
  out.curve.total_length = length;
  out.spectral = false;
  return out;
}

}  // namespace

NumericalRangeBoundary numerical_range_boundary(const ComplexMatrix& A, int angle_samples,
                                                int output_nodes, Exec exec) {
  require_square_finite(A, "numerical_range_curve");
  if (angle_samples < 64) throw InputError("numerical_range_curve: angle_samples must be >= 64");
  if (output_nodes == 0) output_nodes = angle_samples;
  if (output_nodes < 8) throw InputError("numerical_range_curve: output_nodes must be >= 8");
  if (is_normal(A)) {
    throw UnsupportedRegionError(
        "numerical_range_curve: matrix is normal, so W(A) is a polygon with corners");
  }

  const auto m = static_cast<std::size_t>(angle_samples);
  std::vector<cplx> support(m);
  std::vector<double> angles(m);
  parallel_for(m, exec, [&](std::size_t k) {
    const double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(m);
    const ComplexMatrix H = hermitian_part(std::polar(1.0, -theta) * A);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(H, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
      throw NumericalError("numerical_range_curve: eigensolver did not converge");
    }
    const ComplexVector q = solver.eigenvectors().col(H.rows() - 1);
    support[k] = q.dot(A * q);  // dot() conjugates its left argument: q* A q
    angles[k] = theta;
  });

  double diam = 0.0;
  for (std::size_t k = 0; k < m; ++k) diam = std::max(diam, std::abs(support[k] - support[0]));
  if (!(diam > 0.0)) throw NumericalError("numerical_range_curve: support points collapse");

  std::vector<cplx> kept;
  std::vector<double> kept_angles;
  for (std::size_t k = 0; k < m; ++k) {
    if (!kept.empty() && std::abs(support[k] - kept.back()) <= 1e-12 * diam) continue;
    kept.push_back(support[k]);
    kept_angles.push_back(angles[k]);
  }
  while (kept.size() > 1 && std::abs(kept.back() - kept.front()) <= 1e-12 * diam) {
    kept.pop_back();
    kept_angles.pop_back();
  }
  if (kept.size() < 8) throw NumericalError("numerical_range_curve: support points collapse");

  if (kept.size() == m) return spectral_arclength(support, output_nodes);
  return chord_arclength(kept, kept_angles, output_nodes);
}

BoundaryCurve numerical_range_curve(const ComplexMatrix& A, int angle_samples, int output_nodes,
                                    Exec exec) {
  return numerical_range_boundary(A, angle_samples, output_nodes, exec).curve;
}

BoundaryCurve scale_inward_curve(const BoundaryCurve& curve, double epsilon, cplx center) {
  if (curve.components.size() != 1) {
    throw InputError("scale_inward_curve: curve must have exactly one component");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InputError("scale_inward_curve: epsilon must lie in (0, 1)");
  }
  const ClosedComponent& src = curve.components.front();
  const std::size_t n = src.size();
  for (std::size_t k = 0; k < n; ++k) {
    const cplx a = src.nodes[k] - center;
    const cplx b = src.nodes[(k + 1) % n] - center;
    if (!(cross(a, b) > 0.0)) {
      throw InputError("scale_inward_curve: curve is not star-shaped about the center");
    }
  }
  if (winding_number(src, center) != 1) {
    throw InputError("scale_inward_curve: center is not enclosed once");
  }
  const double factor = 1.0 - epsilon;
  BoundaryCurve out;
  ClosedComponent comp;
  comp.nodes.resize(n);
  comp.tangents = src.tangents;  // homothety keeps directions
  comp.weights.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    comp.nodes[k] = center + factor * (src.nodes[k] - center);
    comp.weights[k] = factor * src.weights[k];
  }
  comp.length = factor * src.length;
  out.total_length = comp.length;
  out.components.push_back(std::move(comp));
  if (curve.disk) {
    out.disk = Circle{center + factor * (curve.disk->center - center), factor * curve.disk->radius};
  }
  return out;
}

namespace {

Circle circle_from_two(cplx a, cplx b) { return {(a + b) * 0.5, std::abs(a - b) * 0.5}; }

Circle circle_from_three(cplx a, cplx b, cplx c) {
  const cplx ab = b - a;
  const cplx ac = c - a;
  const double d = 2.0 * cross(ab, ac);
  if (std::abs(d) <= 1e-300) {
    // Collinear: the widest pair spans the others.
    Circle best = circle_from_two(a, b);
    for (const Circle& cand : {circle_from_two(a, c), circle_from_two(b, c)}) {
      if (cand.radius > best.radius) best = cand;
    }
    return best;
  }
  const double ab2 = std::norm(ab);
  const double ac2 = std::norm(ac);
  const cplx offset((ac.imag() * ab2 - ab.imag() * ac2) / d, (ab.real() * ac2 - ac.real() * ab2) / d);
  return {a + offset, std::abs(offset)};
}

bool outside(const Circle& c, cplx p, double slack) { return std::abs(p - c.center) > c.radius + slack; }

}  // namespace

Circle min_enclosing_circle(const std::vector<cplx>& points) {
  if (points.empty()) throw InputError("min_enclosing_circle: no points");
  std::vector<cplx> pts = points;
  std::mt19937_64 rng(0x5eedULL);
  std::shuffle(pts.begin(), pts.end(), rng);
  double scale = 0.0;
  for (const auto& p : pts) scale = std::max(scale, std::abs(p));
  const double slack = 1e-14 * (1.0 + scale);

  Circle c{pts[0], 0.0};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!outside(c, pts[i], slack)) continue;
    c = {pts[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (!outside(c, pts[j], slack)) continue;
      c = circle_from_two(pts[i], pts[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (outside(c, pts[k], slack)) c = circle_from_three(pts[i], pts[j], pts[k]);
      }
    }
  }
  return c;
}

int winding_number(const ClosedComponent& component, cplx p) {
  const std::size_t n = component.size();
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    total += std::arg((component.nodes[(k + 1) % n] - p) / (component.nodes[k] - p));
  }
  return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

bool validate_encloses(const BoundaryCurve& curve, const std::vector<cplx>& points, double guard) {
  if (guard < 0.0) {
    double scale = 0.0;
    for (const auto& p : points) scale = std::max(scale, std::abs(p));
    guard = 1e-12 * (1.0 + scale);
  }
  for (const auto& p : points) {
    int total = 0;
    for (const auto& comp : curve.components) {
      for (const auto& node : comp.nodes) {
        if (std::abs(node - p) < guard) return false;
      }
      total += winding_number(comp, p);
    }
    if (total != 1) return false;
  }
  return true;
}

cplx boundary_centroid(const BoundaryCurve& curve) {
  cplx sum = 0.0;
  double weight = 0.0;
  for (const auto& comp : curve.components) {
    for (std::size_t k = 0; k < comp.size(); ++k) {
      sum += comp.weights[k] * comp.nodes[k];
      weight += comp.weights[k];
    }
  }
  return sum / weight;
}

double diameter(const ClosedComponent& component) {
  if (component.nodes.empty()) return 0.0;
  auto farthest = [&](cplx from) {
    cplx best = from;
    for (const auto& p : component.nodes) {
      if (std::abs(p - from) > std::abs(best - from)) best = p;
    }
    return best;
  };
  const cplx a = farthest(component.nodes.front());
  const cplx b = farthest(a);
  return std::abs(b - a);
}

bool is_convex(const ClosedComponent& component) {
  const std::size_t n = component.size();
  if (n < 3) return false;
  const double tol = 1e-10 * diameter(component);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx e1 = component.nodes[(k + 1) % n] - component.nodes[k];
    const cplx e2 = component.nodes[(k + 2) % n] - component.nodes[(k + 1) % n];
    if (cross(e1, e2) < -tol * std::max(std::abs(e1), std::abs(e2))) return false;
  }
  return winding_number(component, component.nodes[0] * 0.5 + component.nodes[n / 2] * 0.5) == 1;
}

}  // namespace kspec
