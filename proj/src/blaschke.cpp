#include "kspec/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "kspec/errors.hpp"
#include "kspec/nelder_mead.hpp"

namespace kspec {

namespace {

constexpr double kUnitTol = 1e-14;

bool on_unit_circle(cplx alpha) { return std::abs(std::abs(alpha) - 1.0) <= kUnitTol; }

void require_roots(const BlaschkeProduct& B) {
  for (const auto& a : B.roots) {
    if (!(std::abs(a) <= 1.0 + kUnitTol)) throw InputError("Blaschke root outside the closed unit disk");
  }
}

}  // namespace

cplx eval_scalar(const BlaschkeProduct& B, cplx z) {
  require_roots(B);
  cplx value = std::polar(1.0, B.phase);
  for (const auto& a : B.roots) {
    if (on_unit_circle(a)) {
      value *= -a;
      continue;
    }
    const cplx den = 1.0 - std::conj(a) * z;
    if (std::abs(den) <= 1e-300) throw SingularityError("eval_scalar: z is a pole of B");
    value *= (z - a) / den;
  }
  return value;
}

ComplexMatrix mobius_of_matrix(const ComplexMatrix& M, cplx alpha) {
  require_square_finite(M, "mobius_of_matrix");
  if (!(std::abs(alpha) < 1.0)) throw InputError("mobius_of_matrix: need |alpha| < 1");
  const Eigen::Index n = M.rows();
  const ComplexMatrix I = ComplexMatrix::Identity(n, n);
  const ComplexMatrix den = I - std::conj(alpha) * M;
  Eigen::PartialPivLU<ComplexMatrix> lu(den);
  if (!(lu.rcond() > 1e-14)) throw SingularityError("mobius_of_matrix: I - conj(alpha) M is singular");
  // Both factors are functions of M, so they commute.
  return lu.solve(M - alpha * I);
}

ComplexMatrix eval_matrix(const BlaschkeProduct& B, const ComplexMatrix& Psi) {
  require_square_finite(Psi, "eval_matrix");
  require_roots(B);
  const Eigen::Index n = Psi.rows();
  const ComplexMatrix I = ComplexMatrix::Identity(n, n);
  ComplexMatrix value = std::polar(1.0, B.phase) * I;
  for (const auto& a : B.roots) {
    if (on_unit_circle(a)) {
      value *= -a;
      continue;
    }
    Eigen::PartialPivLU<ComplexMatrix> lu(I - std::conj(a) * Psi);
    if (!(lu.rcond() > 1e-14)) {
      throw SingularityError("eval_matrix: I - conj(alpha) Psi is singular");
    }
    value = value * lu.solve(Psi - a * I);
  }
  return value;
}

double orthogonality_residual(const ComplexMatrix& M, const SingularTriple& triple) {
  return std::abs(triple.v1.dot(M * triple.v1));
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Unconstrained planar point w <-> root alpha = w / sqrt(1 + |w|^2) in the open disk.
std::vector<cplx> roots_from_params(const std::vector<double>& x) {
  std::vector<cplx> roots(x.size() / 2);
  for (std::size_t j = 0; j < roots.size(); ++j) {
    const cplx w(x[2 * j], x[2 * j + 1]);
    roots[j] = w / std::sqrt(1.0 + std::norm(w));
  }
  return roots;
}

std::vector<double> params_from_roots(const std::vector<cplx>& roots) {
  std::vector<double> x;
  x.reserve(2 * roots.size());
  for (const auto& a : roots) {
    const cplx w = a / std::sqrt(std::max(1.0 - std::norm(a), 1e-300));
    x.push_back(w.real());
    x.push_back(w.imag());
  }
  return x;
}

bool root_less(cplx a, cplx b) {
  const double ma = std::abs(a), mb = std::abs(b);
  if (ma != mb) return ma < mb;
  return std::arg(a) < std::arg(b);
}

std::vector<cplx> sorted_roots(std::vector<cplx> roots) {
  std::sort(roots.begin(), roots.end(), root_less);
  return roots;
}

struct Candidate {
  std::vector<cplx> roots;
  double norm = 0.0;
};

bool candidate_better(const Candidate& a, const Candidate& b) {
  const double tie = 1e-12 * std::max(1.0, std::max(a.norm, b.norm));
  if (std::abs(a.norm - b.norm) > tie) return a.norm > b.norm;
  return std::lexicographical_compare(a.roots.begin(), a.roots.end(), b.roots.begin(), b.roots.end(),
                                      root_less);
}

double norm_of(const std::vector<cplx>& roots, const ComplexMatrix& Psi) {
  return spectral_norm(eval_matrix(BlaschkeProduct{0.0, roots}, Psi));
}

Candidate run_restart(const ComplexMatrix& Psi, const std::vector<cplx>& start) {
  const auto objective = [&](const std::vector<double>& x) {
    try {
      return -norm_of(roots_from_params(x), Psi);
    } catch (const SingularityError&) {
      return 0.0;
    }
  };
  NelderMeadOptions options;
  options.max_evaluations = 5000;
  NelderMeadResult first = nelder_mead(objective, params_from_roots(start), options);
  // One fresh, smaller simplex from the best point to escape a collapsed simplex.
  NelderMeadOptions polish = options;
  polish.initial_step = 0.02;
  polish.max_evaluations = std::max(0, options.max_evaluations - first.evaluations);
  if (polish.max_evaluations > 0) {
    NelderMeadResult second = nelder_mead(objective, first.x, polish);
    if (second.value <= first.value) first = second;
  }
  Candidate c;
  c.roots = sorted_roots(roots_from_params(first.x));
  c.norm = norm_of(c.roots, Psi);
  return c;
}

}  // namespace

OptimizationResult maximize_norm(const ComplexMatrix& Psi, int max_degree, int restarts,
                                 std::uint64_t seed, Exec exec) {
  require_square_finite(Psi, "maximize_norm");
  const auto n = static_cast<int>(Psi.rows());
  if (max_degree < 0 || max_degree > n - 1) {
    throw InputError("maximize_norm: max_degree must lie in [0, n-1]");
  }
  if (restarts < 1) throw InputError("maximize_norm: restarts must be >= 1");
  std::vector<cplx> eigenvalues = spectrum(Psi);
  for (const auto& lambda : eigenvalues) {
    if (std::abs(lambda) >= 1.0 - 1e-12) {
      throw InputError("maximize_norm: spectrum of Psi must lie strictly inside the unit disk");
    }
  }
  const auto degree = static_cast<std::size_t>(max_degree);

  std::sort(eigenvalues.begin(), eigenvalues.end(), [](cplx a, cplx b) { return root_less(b, a); });
  std::vector<std::vector<cplx>> starts(static_cast<std::size_t>(restarts));
  for (int r = 0; r < restarts; ++r) {
    auto& s = starts[static_cast<std::size_t>(r)];
    if (r == 0) {
      s.assign(degree, cplx(0.0, 0.0));
    } else if (r == 1) {
      s.assign(eigenvalues.begin(), eigenvalues.begin() + static_cast<std::ptrdiff_t>(degree));
    } else {
      std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(r))));
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      for (std::size_t j = 0; j < degree; ++j) {
        const double radius = 0.95 * std::sqrt(unit(rng));
        const double angle = 2.0 * kPi * unit(rng);
        s.push_back(std::polar(radius, angle));
      }
    }
  }

  std::vector<Candidate> found(starts.size());
  parallel_for(starts.size(), exec, [&](std::size_t r) { found[r] = run_restart(Psi, starts[r]); });

  OptimizationResult result;
  result.seed = seed;
  result.restarts_used = restarts;
  double lo = found.front().norm, hi = found.front().norm;
  for (const auto& c : found) {
    result.restart_norms.push_back(c.norm);
    lo = std::min(lo, c.norm);
    hi = std::max(hi, c.norm);
  }
  result.restarts_disagree = hi - lo > 1e-6;

  // Lower-degree powers z^k are feasible as limits; unit roots stand in for the missing factors.
  std::vector<Candidate> pool = found;
  for (std::size_t k = 0; k <= degree; ++k) {
    Candidate c;
    c.roots.assign(k, cplx(0.0, 0.0));
    c.roots.resize(degree, cplx(1.0, 0.0));
    c.roots = sorted_roots(c.roots);
    c.norm = norm_of(c.roots, Psi);
    pool.push_back(std::move(c));
  }
  const Candidate* best = &pool.front();
  for (const auto& c : pool) {
    if (candidate_better(c, *best)) best = &c;
  }

  result.product = BlaschkeProduct{0.0, best->roots};
  const ComplexMatrix M = eval_matrix(result.product, Psi);
  result.triple = largest_singular_triple(M);
  result.norm = result.triple.sigma1;
  result.orthogonality_residual = orthogonality_residual(M, result.triple);
  for (const auto& a : best->roots) {
    if (std::abs(a) >= 1.0 - 1e-6) result.degenerate_root = true;
  }
  return result;
}

Thm2Checks thm2_checks(const ComplexMatrix& Psi, const OptimizationResult& result) {
  Thm2Checks checks;
  checks.applicable = result.norm > 1.0 + 1e-6;
  if (!checks.applicable) return checks;
  const ComplexMatrix M = eval_matrix(result.product, Psi);
  const SingularTriple triple = largest_singular_triple(M);
  checks.orthogonality_residual = orthogonality_residual(M, triple);
  checks.orthogonality_ok = checks.orthogonality_residual <= kOrthTol;

  double excess = -std::numeric_limits<double>::infinity();
  for (double radius : {1e-2, 1e-3}) {
    for (int k = 0; k < 16; ++k) {
      const cplx alpha = std::polar(radius, 2.0 * kPi * k / 16.0);
      excess = std::max(excess, spectral_norm(mobius_of_matrix(M, alpha)) - triple.sigma1);
    }
  }
  checks.stationarity_excess = excess;
  checks.stationarity_ok = excess <= kStatTol;
  return checks;
}

}  // namespace kspec
