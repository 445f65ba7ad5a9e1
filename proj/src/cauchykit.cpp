#include "kspec/cauchykit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>

#include "kspec/errors.hpp"
#include "kspec/periodic.hpp"

namespace kspec {

namespace {

void require_enclosure(const BoundaryCurve& curve, const ComplexMatrix& A, const char* what) {
  require_square_finite(A, what);
  if (!validate_encloses(curve, spectrum(A))) {
    throw RegionError(std::string(what) + ": region does not enclose the spectrum of A");
  }
}

void require_convex_single(const BoundaryCurve& curve, const char* what) {
  if (curve.components.size() != 1) {
    throw UnsupportedRegionError(std::string(what) + ": needs a single boundary component");
  }
  if (!curve.disk && !is_convex(curve.components.front())) {
    throw UnsupportedRegionError(std::string(what) + ": needs a convex region");
  }
}

double sup_of(const std::vector<std::vector<cplx>>& values) {
  double s = 0.0;
  for (const auto& comp : values) {
    for (const auto& v : comp) s = std::max(s, std::abs(v));
  }
  return s;
}

// sum_k w_k (sigma'_k / 2 pi i) R(sigma_k, A) * density_k, reduced in node order.
ComplexMatrix boundary_quadrature(const BoundaryCurve& curve, const ComplexMatrix& A,
                                  const std::vector<std::vector<cplx>>& density, Exec exec) {
  std::vector<std::pair<std::size_t, std::size_t>> index;
  for (std::size_t c = 0; c < curve.components.size(); ++c) {
    for (std::size_t k = 0; k < curve.components[c].size(); ++k) index.emplace_back(c, k);
  }
  std::vector<ComplexMatrix> terms(index.size());
  parallel_for(index.size(), exec, [&](std::size_t i) {
    const auto [c, k] = index[i];
    const auto& comp = curve.components[c];
    const cplx scale = comp.weights[k] * comp.tangents[k] / (2.0 * kPi * kI) * density[c][k];
    terms[i] = scale * resolvent(comp.nodes[k], A);
  });
  const Eigen::Index n = A.rows();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const auto& t : terms) sum += t;
  return sum;
}

}  // namespace

BoundaryFunction sample_boundary_function(const BoundaryCurve& curve, std::function<cplx(cplx)> f) {
  BoundaryFunction out;
  out.curve = curve;
  out.values.resize(curve.components.size());
  for (std::size_t c = 0; c < curve.components.size(); ++c) {
    for (const auto& z : curve.components[c].nodes) out.values[c].push_back(f(z));
  }
  out.sup_norm = sup_of(out.values);
  out.evaluator = std::move(f);
  return out;
}

BoundaryFunction rescale_to_unit_sup(const BoundaryFunction& f) {
  if (!(f.sup_norm > 0.0)) throw InputError("rescale_to_unit_sup: function vanishes on the boundary");
  BoundaryFunction out = f;
  const double s = f.sup_norm;
  for (auto& comp : out.values) {
    for (auto& v : comp) v /= s;
  }
  if (f.evaluator) {
    auto inner = f.evaluator;
    out.evaluator = [inner, s](cplx z) { return inner(z) / s; };
  }
  out.sup_norm = sup_of(out.values);
  return out;
}

BoundaryFunction blaschke_on_disk(const BlaschkeProduct& B, const Circle& disk, int nodes) {
  const BoundaryCurve curve = circle_curve(disk, nodes);
  return sample_boundary_function(curve, [B, disk](cplx z) {
    return eval_scalar(B, (z - disk.center) / disk.radius);
  });
}

ComplexMatrix matrix_function(const BoundaryFunction& f, const ComplexMatrix& A, Exec exec) {
  require_enclosure(f.curve, A, "matrix_function");
  return boundary_quadrature(f.curve, A, f.values, exec);
}

BoundaryFunction g_boundary_values(const BoundaryFunction& f, double eta, Exec exec) {
  require_convex_single(f.curve, "g_boundary_values");
  if (!(eta > 0.0 && eta < 1.0)) throw InputError("g_boundary_values: eta must lie in (0, 1)");
  const ClosedComponent& comp = f.curve.components.front();
  const std::size_t n = comp.size();
  const cplx center = f.curve.disk ? f.curve.disk->center : boundary_centroid(f.curve);

  // Refined parameterization u in [0, 2 pi): nodes, d sigma / du, conj(f).
  const std::size_t factor =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(40.0 / (eta * static_cast<double>(n)))));
  const std::size_t m = n * factor;
  struct Refined {
    std::vector<cplx> nodes, dnodes, density;
  };
  auto refined = std::make_shared<Refined>();
  if (f.curve.disk) {
    const Circle d = *f.curve.disk;
    for (std::size_t k = 0; k < m; ++k) {
      // Same phase as circle_curve so refined node k*factor coincides with node k.
      const cplx e = std::polar(1.0, 2.0 * kPi * static_cast<double>(k) / static_cast<double>(m));
      refined->nodes.push_back(d.center + d.radius * e);
      refined->dnodes.push_back(kI * d.radius * e);
    }
  } else {
    refined->nodes = periodic::upsample(comp.nodes, m);
    refined->dnodes = periodic::derivative(refined->nodes);
  }
  if (f.evaluator) {
    for (const auto& z : refined->nodes) refined->density.push_back(std::conj(f.evaluator(z)));
  } else {
    std::vector<cplx> conj_values(n);
    for (std::size_t k = 0; k < n; ++k) conj_values[k] = std::conj(f.values.front()[k]);
    refined->density = periodic::upsample(conj_values, m);
  }
  const double du = 2.0 * kPi / static_cast<double>(m);
  auto transform = [refined, du](cplx z) {
    cplx sum = 0.0;
    for (std::size_t k = 0; k < refined->nodes.size(); ++k) {
      sum += refined->dnodes[k] * refined->density[k] / (refined->nodes[k] - z);
    }
    return sum * du / (2.0 * kPi * kI);
  };

  BoundaryFunction g;
  g.curve = scale_inward_curve(f.curve, eta, center);
  const auto& shrunk = g.curve.components.front().nodes;
  g.values.assign(1, std::vector<cplx>(n));
  parallel_for(n, exec, [&](std::size_t j) { g.values[0][j] = transform(shrunk[j]); });
  g.sup_norm = sup_of(g.values);
  g.evaluator = transform;
  return g;
}

CauchyTransform g_of_matrix_detailed(const BoundaryFunction& f, const ComplexMatrix& A, Exec exec) {
  require_convex_single(f.curve, "g_of_matrix");
  require_enclosure(f.curve, A, "g_of_matrix");
  std::vector<std::vector<cplx>> density = f.values;
  for (auto& comp : density) {
    for (auto& v : comp) v = std::conj(v);
  }
  CauchyTransform out;
  out.gA = boundary_quadrature(f.curve, A, density, exec);
  if (f.curve.disk) {
    cplx f_center;
    if (f.evaluator) {
      f_center = f.evaluator(f.curve.disk->center);
    } else {
      // Mean-value property on the circle.
      f_center = 0.0;
      for (const auto& v : f.values.front()) f_center += v;
      f_center /= static_cast<double>(f.values.front().size());
    }
    const Eigen::Index n = A.rows();
    out.disk_shortcut = std::conj(f_center) * ComplexMatrix::Identity(n, n);
    out.shortcut_deviation = (out.gA - *out.disk_shortcut).norm();
  }
  return out;
}

ComplexMatrix g_of_matrix(const BoundaryFunction& f, const ComplexMatrix& A, Exec exec) {
  CauchyTransform t = g_of_matrix_detailed(f, A, exec);
  if (t.disk_shortcut && t.shortcut_deviation > 1e-6) {
    throw NumericalError("g_of_matrix: quadrature disagrees with the disk shortcut (" +
                         std::to_string(t.shortcut_deviation) + ")");
  }
  return std::move(t.gA);
}

SOperatorResult assemble_S(const BoundaryFunction& f, const ComplexMatrix& A,
                           const LambdaMinProfile& profile, Exec exec) {
  if (std::abs(f.sup_norm - 1.0) > 1e-12) {
    throw InputError("assemble_S: f must be normalized to sup norm 1 (use rescale_to_unit_sup)");
  }
  if (profile.values.size() != f.values.size()) {
    throw InputError("assemble_S: profile and f live on different curves");
  }
  for (std::size_t c = 0; c < f.values.size(); ++c) {
    if (profile.values[c].size() != f.values[c].size()) {
      throw InputError("assemble_S: profile and f live on different curves");
    }
  }
  SOperatorResult out;
  out.fA = matrix_function(f, A, exec);
  out.gA = g_of_matrix(f, A, exec);
  cplx gamma = 0.0;
  for (std::size_t c = 0; c < f.values.size(); ++c) {
    const auto& w = f.curve.components[c].weights;
    for (std::size_t k = 0; k < w.size(); ++k) gamma -= w[k] * profile.values[c][k] * f.values[c][k];
  }
  out.gamma = gamma;
  const Eigen::Index n = A.rows();
  out.S = out.fA + out.gA.adjoint() + gamma * ComplexMatrix::Identity(n, n);
  out.norm_S = spectral_norm(out.S);
  out.norm_fA = spectral_norm(out.fA);
  return out;
}

ConjectureProbe conjecture_probe(const BoundaryFunction& f, const ComplexMatrix& A,
                                 const LambdaMinProfile& profile, Exec exec) {
  const SOperatorResult s = assemble_S(f, A, profile, exec);
  ConjectureProbe probe;
  probe.norm_fA = s.norm_fA;
  probe.norm_fA_plus_gA_star = spectral_norm(s.fA + s.gA.adjoint());
  probe.norm_S = s.norm_S;
  probe.violation = probe.norm_fA > probe.norm_fA_plus_gA_star + 1e-10 * (1.0 + probe.norm_fA);
  if (f.curve.disk && s.norm_fA > 1.0) {
    const SingularTriple t = largest_singular_triple(s.fA);
    probe.singular_identity_residual = std::abs(t.u1.dot(s.S * t.v1) - t.sigma1);
  }
  return probe;
}

FitDiagnostic fit_affine_inverse(const ComplexMatrix& fA, const ComplexMatrix& gA) {
  require_square_finite(fA, "fit_affine_inverse");
  require_square_finite(gA, "fit_affine_inverse");
  const double f_norm = spectral_norm(fA);
  if (!(min_singular_value(fA) >= 1e-10 * f_norm) || f_norm == 0.0) {
    throw SingularityError("fit_affine_inverse: f(A) is singular");
  }
  const Eigen::Index n = fA.rows();
  const ComplexMatrix target = gA.adjoint();
  const ComplexMatrix basis1 = fA.adjoint().inverse();

  Eigen::MatrixXcd design(n * n, 2);
  design.col(0) = ComplexMatrix::Identity(n, n).reshaped();
  design.col(1) = basis1.reshaped();
  const Eigen::VectorXcd rhs = target.reshaped();
  const Eigen::VectorXcd coeffs = design.completeOrthogonalDecomposition().solve(rhs);

  FitDiagnostic fit;
  fit.c0 = coeffs(0);
  fit.c1 = coeffs(1);
  const double g_norm = gA.norm();
  const double misfit = (design * coeffs - rhs).norm();
  fit.residual = g_norm > 0.0 ? misfit / g_norm : 0.0;
  fit.condition_holds = fit.c1.real() >= std::norm(fit.c1) / (2.0 * f_norm * f_norm);
  return fit;
}

namespace {

double cross(cplx o, cplx a, cplx b) {
  const cplx u = a - o, v = b - o;
  return u.real() * v.imag() - u.imag() * v.real();
}

double distance_to_segment(cplx p, cplx a, cplx b) {
  const cplx ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

}  // namespace

std::vector<cplx> convex_hull(std::vector<cplx> points) {
  std::sort(points.begin(), points.end(), [](cplx a, cplx b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;
  std::vector<cplx> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0.0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

double distance_to_hull(const std::vector<cplx>& hull, cplx p) {
  if (hull.empty()) return std::numeric_limits<double>::infinity();
  if (hull.size() == 1) return std::abs(p - hull.front());
  if (hull.size() == 2) return distance_to_segment(p, hull[0], hull[1]);
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const cplx a = hull[i], b = hull[(i + 1) % hull.size()];
    if (cross(a, b, p) < 0.0) inside = false;
    best = std::min(best, distance_to_segment(p, a, b));
  }
  return inside ? 0.0 : best;
}

bool hull_check(const BoundaryFunction& f, const BoundaryFunction& g) {
  std::vector<cplx> conj_f;
  for (const auto& comp : f.values) {
    for (const auto& v : comp) conj_f.push_back(std::conj(v));
  }
  const std::vector<cplx> hull = convex_hull(conj_f);
  double diam = 0.0;
  for (const auto& a : hull) {
    for (const auto& b : hull) diam = std::max(diam, std::abs(a - b));
  }
  const double tol = 1e-8 * (1.0 + diam);
  for (const auto& comp : g.values) {
    for (const auto& v : comp) {
      if (distance_to_hull(hull, v) > tol) return false;
    }
  }
  return true;
}

}  // namespace kspec
