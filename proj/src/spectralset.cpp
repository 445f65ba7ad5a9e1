#include "kspec/spectralset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kspec/errors.hpp"

namespace kspec {

ComplexMatrix mu_at(cplx sigma, cplx tangent, const ComplexMatrix& A) {
  if (std::abs(std::abs(tangent) - 1.0) > 1e-10) {
    throw InputError("mu_at: tangent must have unit modulus");
  }
  const ComplexMatrix X = (tangent / (2.0 * kPi * kI)) * resolvent(sigma, A);
  return X + X.adjoint();
}

double LambdaMinProfile::min_value() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& comp : values) {
    for (double v : comp) m = std::min(m, v);
  }
  return m;
}

double LambdaMinProfile::max_abs_value() const {
  double m = 0.0;
  for (const auto& comp : values) {
    for (double v : comp) m = std::max(m, std::abs(v));
  }
  return m;
}

namespace {

void require_enclosure(const BoundaryCurve& curve, const ComplexMatrix& A, const char* what) {
  require_square_finite(A, what);
  if (curve.components.empty()) throw InputError(std::string(what) + ": empty curve");
  if (!validate_encloses(curve, spectrum(A))) {
    throw RegionError(std::string(what) + ": region does not enclose the spectrum of A");
  }
}

// Flattened (component, node) index for the parallel maps.
struct NodeIndex {
  std::vector<std::pair<std::size_t, std::size_t>> entries;

  explicit NodeIndex(const BoundaryCurve& curve) {
    for (std::size_t c = 0; c < curve.components.size(); ++c) {
      for (std::size_t k = 0; k < curve.components[c].size(); ++k) entries.emplace_back(c, k);
    }
  }
};

}  // namespace

LambdaMinProfile lambda_min_profile(const BoundaryCurve& curve, const ComplexMatrix& A, Exec exec) {
  require_enclosure(curve, A, "lambda_min_profile");
  LambdaMinProfile profile;
  profile.curve = curve;
  profile.values.resize(curve.components.size());
  for (std::size_t c = 0; c < curve.components.size(); ++c) {
    profile.values[c].assign(curve.components[c].size(), 0.0);
  }
  const NodeIndex index(curve);
  parallel_for(index.entries.size(), exec, [&](std::size_t i) {
    const auto [c, k] = index.entries[i];
    const auto& comp = curve.components[c];
    profile.values[c][k] = hermitian_min_eigenvalue(mu_at(comp.nodes[k], comp.tangents[k], A));
  });
  return profile;
}

DeltaGamma delta_gamma_hat(const LambdaMinProfile& profile) {
  DeltaGamma out;
  for (std::size_t c = 0; c < profile.values.size(); ++c) {
    const auto& w = profile.curve.components[c].weights;
    for (std::size_t k = 0; k < w.size(); ++k) {
      out.delta -= w[k] * profile.values[c][k];
      out.gamma_hat += w[k] * std::abs(profile.values[c][k]);
    }
  }
  return out;
}

double k_from_delta(double delta, double gamma_hat) {
  const double radicand = 2.0 + delta + delta * delta / 4.0 + gamma_hat;
  if (!(radicand >= 0.0)) throw InputError("k_from_delta: negative radicand");
  return 1.0 + delta / 2.0 + std::sqrt(radicand);
}

double cauchy_bound(const BoundaryCurve& curve, const ComplexMatrix& A, Exec exec) {
  require_enclosure(curve, A, "cauchy_bound");
  const NodeIndex index(curve);
  std::vector<double> terms(index.entries.size());
  parallel_for(index.entries.size(), exec, [&](std::size_t i) {
    const auto [c, k] = index.entries[i];
    const auto& comp = curve.components[c];
    terms[i] = comp.weights[k] * spectral_norm(resolvent(comp.nodes[k], A));
  });
  double sum = 0.0;
  for (double t : terms) sum += t;
  return sum / (2.0 * kPi);
}

BoundReport compute_bounds(const BoundaryCurve& curve, const ComplexMatrix& A, Exec exec) {
  const LambdaMinProfile profile = lambda_min_profile(curve, A, exec);
  const DeltaGamma dg = delta_gamma_hat(profile);
  BoundReport report;
  report.delta = dg.delta;
  report.gamma_hat = dg.gamma_hat;
  report.two_plus_delta = 2.0 + dg.delta;
  report.k_delta = k_from_delta(dg.delta, dg.gamma_hat);
  report.k_cauchy = cauchy_bound(curve, A, exec);
  report.node_count = curve.node_count();
  if (curve.disk) report.k_disk = std::max(1.0, report.two_plus_delta);
  return report;
}

BoundReport compute_bounds_adaptive(const CurveFactory& factory, const ComplexMatrix& A,
                                    const RefinementOptions& options, Exec exec) {
  if (options.start_nodes < 8 || options.max_nodes < options.start_nodes) {
    throw InputError("compute_bounds_adaptive: invalid node range");
  }
  int nodes = options.start_nodes;
  DeltaGamma previous = delta_gamma_hat(lambda_min_profile(factory(nodes), A, exec));
  bool converged = false;
  while (nodes * 2 <= options.max_nodes) {
    nodes *= 2;
    const DeltaGamma current = delta_gamma_hat(lambda_min_profile(factory(nodes), A, exec));
    const bool delta_ok =
        std::abs(current.delta - previous.delta) <= options.rtol * (1.0 + std::abs(previous.delta));
    const bool gamma_ok = std::abs(current.gamma_hat - previous.gamma_hat) <=
                          options.rtol * (1.0 + std::abs(previous.gamma_hat));
    previous = current;
    if (delta_ok && gamma_ok) {
      converged = true;
      break;
    }
  }
  BoundReport report = compute_bounds(factory(nodes), A, exec);
  report.converged = converged;
  return report;
}

double mu_integral_check(const BoundaryCurve& curve, const ComplexMatrix& A, Exec exec) {
  require_enclosure(curve, A, "mu_integral_check");
  const NodeIndex index(curve);
  std::vector<ComplexMatrix> terms(index.entries.size());
  parallel_for(index.entries.size(), exec, [&](std::size_t i) {
    const auto [c, k] = index.entries[i];
    const auto& comp = curve.components[c];
    terms[i] = comp.weights[k] * mu_at(comp.nodes[k], comp.tangents[k], A);
  });
  const Eigen::Index n = A.rows();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const auto& t : terms) sum += t;
  return (sum - 2.0 * ComplexMatrix::Identity(n, n)).norm();
}

double perturbation_bound_at(cplx sigma, cplx tangent, cplx sigma_tilde, const ComplexMatrix& A) {
  if (std::abs(std::abs(tangent) - 1.0) > 1e-10) {
    throw InputError("perturbation_bound_at: tangent must have unit modulus");
  }
  const double gap = std::abs(sigma_tilde - sigma);
  if (gap == 0.0) return 0.0;
  const ComplexMatrix Y =
      (tangent / (2.0 * kPi * kI)) * resolvent(sigma, A) * resolvent(sigma_tilde, A);
  const ComplexMatrix H = Y + Y.adjoint();
  return -gap * spectral_norm(H);
}

BoundReport unit_disk_delta(const ComplexMatrix& Psi, const RefinementOptions& options, Exec exec) {
  require_square_finite(Psi, "unit_disk_delta");
  for (const auto& lambda : spectrum(Psi)) {
    if (std::abs(lambda) >= 1.0 - 1e-12) {
      throw InputError("unit_disk_delta: spectrum must lie strictly inside the unit disk");
    }
  }
  const Circle unit{cplx(0.0, 0.0), 1.0};
  BoundReport report = compute_bounds_adaptive(
      [&](int nodes) { return circle_curve(unit, nodes); }, Psi, options, exec);
  report.k_disk = std::max(1.0, report.two_plus_delta);
  return report;
}

}  // namespace kspec
