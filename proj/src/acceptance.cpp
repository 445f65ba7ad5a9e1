#include "kspec/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <utility>

#include "kspec/blaschke.hpp"
#include "kspec/cauchykit.hpp"
#include "kspec/errors.hpp"
#include "kspec/generators.hpp"
#include "kspec/jordanoracle.hpp"
#include "kspec/regions.hpp"
#include "kspec/spectralset.hpp"

namespace kspec {

double round_up(double value, int digits) {
  const double scale = std::pow(10.0, digits);
  // values on a grid point stay there
  return std::ceil(value * scale - 1e-7) / scale;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v, int precision = 6) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

// Reference rows (delta, gamma_hat, K_delta, K_Cauchy, 2 + delta, ||B||); first six a
// random upper triangular 12x12, last six the perturbed Jordan block.
struct TableRow {
  double delta, gamma_hat, k_delta, k_cauchy, two_plus_delta, blaschke_norm;
};
constexpr TableRow kTables[] = {
    {7.0485, 7.0485, 9.865, 12.160, 9.049, 4.400},  {2.2291, 2.2291, 4.890, 6.422, 4.230, 2.584},
    {0.7209, 0.7209, 3.251, 4.445, 2.721, 2.058},   {0.0377, 0.1179, 2.488, 3.479, 2.038, 1.752},
    {-0.3388, 0.3388, 2.255, 2.918, 1.662, 1.538}, {-0.5767, 0.5767, 2.155, 2.555, 1.424, 1.372},
    {2.2234, 2.2234, 4.884, 5.635, 4.224, 3.625},   {1.0969, 1.0969, 3.669, 4.416, 3.097, 2.910},
    {0.4557, 0.4557, 2.950, 3.741, 2.456, 2.387},   {0.0201, 0.0946, 2.465, 3.291, 2.021, 1.993},
    {-0.2999, 0.2999, 2.273, 2.965, 1.701, 1.690}, {-0.5456, 0.5456, 2.168, 2.716, 1.455, 1.451},
};

CriterionResult criterion(int id, std::string name) {
  CriterionResult res;
  res.id = id;
  res.name = std::move(name);
  return res;
}

constexpr double kSweepRadii[] = {0.55, 0.62, 0.68, 0.75, 0.9, 1.1};

ComplexMatrix scaled_into_disk(const ComplexMatrix& G, double spectral_radius) {
  double rho = 0.0;
  for (const auto& l : spectrum(G)) rho = std::max(rho, std::abs(l));
  return G * (spectral_radius / rho);
}

CriterionResult c1_jordan_sharpness() {
  CriterionResult res = criterion(1, "Jordan-block sharpness oracle (delta, 2+delta vs 1/r^2, N=512)");
  const ComplexMatrix J = jordan_block(3);
  double worst = 0.0, slowest = 0.0;
  for (double r : {0.5, 0.6, 1.0 / std::sqrt(2.0), 0.8, 0.9, 1.0}) {
    const auto start = Clock::now();
    const auto profile = lambda_min_profile(circle_curve({cplx(0.0, 0.0), r}, 512), J);
    const double delta = delta_gamma_hat(profile).delta;
    slowest = std::max(slowest, seconds_since(start));
    worst = std::max({worst, std::abs(delta + (2.0 - 1.0 / (r * r))),
                      std::abs((2.0 + delta) - 1.0 / (r * r))});
  }
  res.passed = worst <= 1e-8 && slowest < 1.0;
  res.detail = "max deviation " + fmt(worst, 3) + ", slowest case " + fmt(slowest, 3) + " s";
  return res;
}

CriterionResult c2_table1(const AcceptanceHooks& hooks) {
  CriterionResult res = criterion(2, "Reference K_delta values from (delta, gamma_hat)");
  const auto k = hooks.k_from_delta ? hooks.k_from_delta : k_from_delta;
  const auto start = Clock::now();
  double worst = 0.0, raw = 0.0;
  for (const auto& row : kTables) {
    const double value = k(row.delta, row.gamma_hat);
    worst = std::max(worst, std::abs(round_up(value, 3) - row.k_delta));
    raw = std::max(raw, std::abs(value - row.k_delta));
  }
  const double elapsed = seconds_since(start);
  res.passed = worst <= 5e-4 && elapsed < 1e-3;
  res.detail = "max |ceil3(K) - printed| " + fmt(worst, 3) + " (unrounded " + fmt(raw, 3) + "), " +
               fmt(elapsed * 1e6, 3) + " us";
  return res;
}

CriterionResult c3_table2() {
  CriterionResult res = criterion(3, "Reference 2 + delta values");
  double worst = 0.0;
  for (const auto& row : kTables) {
    worst = std::max(worst, std::abs(round_up(2.0 + row.delta, 3) - row.two_plus_delta));
  }
  res.passed = worst <= 5e-4;
  res.detail = "max |ceil3(2+delta) - printed| " + fmt(worst, 3);
  return res;
}

CriterionResult c4_mu_integral() {
  CriterionResult res = criterion(4, "mu-integral identity ||oint mu ds - 2I||_F");
  const auto start = Clock::now();
  const double dev_a = mu_integral_check(circle_curve({cplx(0.0, 0.0), 1.0}, 512), jordan_block(3));
  const ComplexMatrix A = random_upper_triangular(12, 2019);
  Circle enclosing = min_enclosing_circle(spectrum(A));
  enclosing.radius *= 1.5;
  const double dev_b = mu_integral_check(circle_curve(enclosing, 2048), A);
  const double elapsed = seconds_since(start);
  res.passed = dev_a <= 1e-6 && dev_b <= 1e-6 && elapsed < 10.0;
  res.detail = "Jordan " + fmt(dev_a, 3) + ", random 12x12 " + fmt(dev_b, 3) + ", " +
               fmt(elapsed, 3) + " s";
  return res;
}

CriterionResult c5_boundary_zero() {
  CriterionResult res = criterion(5, "Boundary-zero property and sign pattern of delta");
  const ComplexMatrix A = perturbed_jordan(3, 0.1);
  const BoundaryCurve boundary = numerical_range_curve(A, 1024);
  const double max_abs = lambda_min_profile(boundary, A).max_abs_value();
  const BoundaryCurve inner = scale_inward_curve(boundary, 0.05, boundary_centroid(boundary));
  const double delta_inner = delta_gamma_hat(lambda_min_profile(inner, A)).delta;
  double radius = 0.0;
  for (const auto& z : boundary.components.front().nodes) radius = std::max(radius, std::abs(z));
  const BoundaryCurve outer = circle_curve({cplx(0.0, 0.0), 1.1 * radius}, 1024);
  const double delta_outer = delta_gamma_hat(lambda_min_profile(outer, A)).delta;
  res.passed = max_abs <= 1e-4 && delta_inner > 0.0 && delta_outer < 0.0;
  res.detail = "max|lambda_min| on dW " + fmt(max_abs, 3) + ", delta inside " + fmt(delta_inner) +
               ", delta outside " + fmt(delta_outer);
  return res;
}

CriterionResult c6_optimal_blaschke(VerifyLevel level) {
  CriterionResult res = criterion(6, "Optimal Blaschke orthogonality and stationarity");
  const auto start = Clock::now();
  const ComplexMatrix Psi = jordan_block(3) / 0.8;
  const OptimizationResult jordan = maximize_norm(Psi, 2, 50, 12345);
  const Thm2Checks jc = thm2_checks(Psi, jordan);
  bool ok = jordan.norm >= 1.5625 - 1e-6 && jc.applicable && jc.orthogonality_ok && jc.stationarity_ok;

  const int wanted = level == VerifyLevel::full ? 30 : 10;
  int qualifying = 0;
  double worst = 0.0;
  for (std::uint64_t seed = 1; qualifying < wanted && seed < 1000; ++seed) {
    const ComplexMatrix P = scaled_into_disk(random_dense(4, seed), 0.75);
    const OptimizationResult opt = maximize_norm(P, 3, 20, seed);
    if (!(opt.norm > 1.0 + 1e-6)) continue;
    ++qualifying;
    worst = std::max(worst, opt.orthogonality_residual);
  }
  ok = ok && qualifying == wanted && worst <= kOrthTol;
  const double elapsed = seconds_since(start);
  res.passed = ok && elapsed < 60.0 * (level == VerifyLevel::full ? 3.0 : 1.0);
  res.detail = "Jordan/0.8 norm " + fmt(jordan.norm, 10) + " residual " +
               fmt(jc.orthogonality_residual, 3) + "; " + std::to_string(qualifying) +
               " random 4x4 worst residual " + fmt(worst, 3) + ", " + fmt(elapsed, 3) + " s";
  return res;
}

CriterionResult c7_containing_disk(VerifyLevel level) {
  CriterionResult res = criterion(7, "Disk containing W(A): delta <= 0, max{1, 2+delta} <= 2");
  const int count = level == VerifyLevel::full ? 60 : 20;
  double worst_delta = -std::numeric_limits<double>::infinity();
  double worst_bound = 0.0;
  for (int i = 0; i < count; ++i) {
    const int n = 2 + i % 7;
    const ComplexMatrix A = random_dense(n, 7000 + static_cast<std::uint64_t>(i));
    const auto support = numerical_range_boundary(A, 1024);
    Circle disk = min_enclosing_circle(support.curve.components.front().nodes);
    disk.radius *= 1.01;
    const BoundReport report = compute_bounds(circle_curve(disk, 1024), A);
    worst_delta = std::max(worst_delta, report.delta);
    worst_bound = std::max(worst_bound, report.k_disk.value_or(2.0 + report.delta));
  }
  res.passed = worst_delta <= 1e-10 && worst_bound <= 2.0;
  res.detail = std::to_string(count) + " matrices, max delta " + fmt(worst_delta) +
               ", max bound " + fmt(worst_bound);
  return res;
}

CriterionResult c8_disk_cauchy() {
  CriterionResult res = criterion(8, "Disk Cauchy transform, ||S|| <= 2 + delta, ||g|| <= ||f||, hull");
  const ComplexMatrix A = perturbed_jordan(3, 0.1);
  const Circle disk{cplx(0.0, 0.0), 0.6};
  const ComplexMatrix Psi = (A - disk.center * ComplexMatrix::Identity(3, 3)) / disk.radius;
  const OptimizationResult opt = maximize_norm(Psi, 2, 50, 12345);
  const BoundaryFunction f = rescale_to_unit_sup(blaschke_on_disk(opt.product, disk, 2048));
  const CauchyTransform g = g_of_matrix_detailed(f, A);
  const LambdaMinProfile profile = lambda_min_profile(f.curve, A);
  const double delta = delta_gamma_hat(profile).delta;
  const SOperatorResult S = assemble_S(f, A, profile);
  const BoundaryFunction g_values = g_boundary_values(f);
  const bool hull = hull_check(f, g_values);
  res.passed = g.shortcut_deviation <= 1e-6 && S.norm_S <= 2.0 + delta + 1e-6 &&
               g_values.sup_norm <= f.sup_norm + 1e-8 && hull;
  res.detail = "||g(A) - conj(f(c))I||_F " + fmt(g.shortcut_deviation, 3) + ", ||S|| " +
               fmt(S.norm_S) + " <= 2+delta " + fmt(2.0 + delta) + ", sup|g| " +
               fmt(g_values.sup_norm, 10) + ", hull " + (hull ? "ok" : "FAIL");
  return res;
}

CriterionResult c9_perturbation() {
  CriterionResult res = criterion(9, "Inward perturbation bound and O(eps) growth of delta");
  const ComplexMatrix A = perturbed_jordan(3, 0.1);
  const BoundaryCurve boundary = numerical_range_curve(A, 1024);
  const cplx center = boundary_centroid(boundary);
  const auto& outer = boundary.components.front();
  double worst_gap = std::numeric_limits<double>::infinity();
  std::vector<double> ratios;
  for (double eps : {0.005, 0.01, 0.02}) {
    const BoundaryCurve inner = scale_inward_curve(boundary, eps, center);
    const LambdaMinProfile profile = lambda_min_profile(inner, A);
    const auto& comp = inner.components.front();
    for (std::size_t k = 0; k < comp.size(); ++k) {
      const double bound = perturbation_bound_at(outer.nodes[k], outer.tangents[k], comp.nodes[k], A);
      worst_gap = std::min(worst_gap, profile.values[0][k] - bound);
    }
    ratios.push_back(delta_gamma_hat(profile).delta / eps);
  }
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  res.passed = worst_gap >= -1e-10 && *lo > 0.0 && *hi <= 2.0 * *lo;
  res.detail = "min(lambda_min - bound) " + fmt(worst_gap, 3) + ", delta/eps in [" + fmt(*lo) + ", " +
               fmt(*hi) + "]";
  return res;
}

CriterionResult c10_circle_sweep() {
  CriterionResult res = criterion(10, "Circle sweep: delta decreasing, minima increasing, K_delta < K_Cauchy");
  const ComplexMatrix A = perturbed_jordan(3, 0.1);
  const cplx center = min_enclosing_circle(spectrum(A)).center;
  bool ok = true;
  double prev_delta = std::numeric_limits<double>::infinity();
  double prev_min = -std::numeric_limits<double>::infinity();
  std::ostringstream detail;
  for (double R : kSweepRadii) {
    const BoundaryCurve curve = circle_curve({center, R}, 512);
    const LambdaMinProfile profile = lambda_min_profile(curve, A);
    const BoundReport report = compute_bounds(curve, A);
    const double minimum = profile.min_value();
    ok = ok && report.delta < prev_delta && minimum > prev_min && report.k_delta < report.k_cauchy;
    prev_delta = report.delta;
    prev_min = minimum;
    detail << "R=" << R << ":d=" << fmt(report.delta, 4) << ",K=" << fmt(report.k_delta, 4)
           << "<" << fmt(report.k_cauchy, 4) << " ";
  }
  res.passed = ok;
  res.detail = detail.str();
  return res;
}

CriterionResult c11_conjecture_probe() {
  CriterionResult res = criterion(11, "Conjecture probe ||f(A)|| vs ||f(A)+g(A)*|| (report only)");
  res.gating = false;
  const ComplexMatrix A = perturbed_jordan(3, 0.1);
  const cplx center = min_enclosing_circle(spectrum(A)).center;
  int violations = 0;
  std::ostringstream detail;
  for (double R : kSweepRadii) {
    const Circle disk{center, R};
    const ComplexMatrix Psi = (A - center * ComplexMatrix::Identity(3, 3)) / R;
    const OptimizationResult opt = maximize_norm(Psi, 2, 20, 12345);
    const BoundaryFunction f = rescale_to_unit_sup(blaschke_on_disk(opt.product, disk, 1024));
    const ConjectureProbe probe = conjecture_probe(f, A, lambda_min_profile(f.curve, A));
    if (probe.violation) ++violations;
    detail << "R=" << R << ":" << fmt(probe.norm_fA, 4) << "/" << fmt(probe.norm_fA_plus_gA_star, 4)
           << "/" << fmt(probe.norm_S, 4) << " ";
  }
  res.passed = violations == 0;
  res.detail = std::to_string(violations) + " violations; ||f||/||f+g*||/||S||: " + detail.str();
  return res;
}

}  // namespace

CriterionResult run_criterion(int id, VerifyLevel level, const AcceptanceHooks& hooks) {
  const auto start = Clock::now();
  CriterionResult res;
  try {
    switch (id) {
      case 1: res = c1_jordan_sharpness(); break;
      case 2: res = c2_table1(hooks); break;
      case 3: res = c3_table2(); break;
      case 4: res = c4_mu_integral(); break;
      case 5: res = c5_boundary_zero(); break;
      case 6: res = c6_optimal_blaschke(level); break;
      case 7: res = c7_containing_disk(level); break;
      case 8: res = c8_disk_cauchy(); break;
      case 9: res = c9_perturbation(); break;
      case 10: res = c10_circle_sweep(); break;
      case 11: res = c11_conjecture_probe(); break;
      default: throw InputError("unknown acceptance criterion " + std::to_string(id));
    }
  } catch (const InputError&) {
    if (id < 1 || id > kCriterionCount) throw;
    res = CriterionResult{id, "criterion " + std::to_string(id), false, id != 11, "input error"};
  } catch (const std::exception& e) {
    res = CriterionResult{id, "criterion " + std::to_string(id), false, id != 11,
                          std::string("exception: ") + e.what()};
  }
  res.seconds = seconds_since(start);
  return res;
}

std::vector<CriterionResult> run_acceptance(VerifyLevel level, const AcceptanceHooks& hooks,
                                            std::ostream* progress) {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) {
    results.push_back(run_criterion(id, level, hooks));
    if (progress) print_results(*progress, {results.back()});
  }
  return results;
}

bool all_gating_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.passed || !r.gating; });
}

void print_results(std::ostream& out, const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    const char* tag = r.passed ? "[PASS]" : (r.gating ? "[FAIL]" : "[NOTE]");
    out << tag << " #" << r.id << " " << r.name << " (" << std::fixed << std::setprecision(2)
        << r.seconds << " s) " << std::defaultfloat << r.detail << '\n';
  }
}

}  // namespace kspec
