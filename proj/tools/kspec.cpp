// kspec: command-line front end for the K-spectral-set library.
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kspec/acceptance.hpp"
#include "kspec/blaschke.hpp"
#include "kspec/cauchykit.hpp"
#include "kspec/errors.hpp"
#include "kspec/generators.hpp"
#include "kspec/jordanoracle.hpp"
#include "kspec/matrix_io.hpp"
#include "kspec/region_spec.hpp"
#include "kspec/regions.hpp"
#include "kspec/spectralset.hpp"

namespace {

using nlohmann::json;
using namespace kspec;

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kInput = 1, kNumerical = 2, kVerify = 3 };

struct RunConfig {
  std::string matrix;
  std::string region;
  std::string radii;
  int nodes = 1024;
  int restarts = 50;
  std::uint64_t seed = 12345;
  std::string out;
  std::string format;
  double eps = 0.05;
  int degree = 0;
  int count = 6;
  bool fixed = false;
  std::optional<double> delta;
  std::optional<double> gamma_hat;
  std::string kind;
  int n = 3;
  std::string level = "quick";
  std::vector<int> only;
  double k_offset = 0.0;
};

// Output goes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

json meta(const std::string& command, const RunConfig& cfg) {
  return {{"tool", "kspec"}, {"version", kVersion}, {"command", command},
          {"seed", cfg.seed}, {"nodes", cfg.nodes}};
}

void csv_meta(std::ostream& out, const std::string& command, const RunConfig& cfg) {
  out << "# tool=kspec version=" << kVersion << " command=" << command << " seed=" << cfg.seed
      << " nodes=" << cfg.nodes << '\n';
}

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

void emit_json(const RunConfig& cfg, const json& doc) {
  Sink sink(cfg.out);
  sink.stream() << std::setprecision(17) << doc.dump(2) << '\n';
}

void check_config(const RunConfig& cfg) {
  if (cfg.nodes < 64) throw InputError("--nodes must be at least 64");
  if (cfg.restarts < 1) throw InputError("--restarts must be at least 1");
}

ComplexMatrix load_matrix(const RunConfig& cfg) {
  if (cfg.matrix.empty()) throw InputError("--matrix is required");
  return read_matrix_file(cfg.matrix);
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad number in list: '" + item + "'");
    }
  }
  if (values.empty()) throw InputError("empty list");
  return values;
}

int cmd_gen(const RunConfig& cfg) {
  if (cfg.n < 2) throw InputError("--n must be at least 2");
  if (!(cfg.eps >= 0.0) || !std::isfinite(cfg.eps)) throw InputError("--eps must be >= 0");
  ComplexMatrix A;
  if (cfg.kind == "jordan") {
    A = jordan_block(cfg.n);
  } else if (cfg.kind == "perturbed-jordan") {
    A = perturbed_jordan(cfg.n, cfg.eps);
  } else if (cfg.kind == "randut") {
    A = random_upper_triangular(cfg.n, cfg.seed);
  } else {
    throw InputError("unknown generator kind: " + cfg.kind);
  }
  if (cfg.out.empty()) {
    std::cout << std::setprecision(17) << matrix_to_json(A).dump() << '\n';
  } else {
    write_matrix_file(cfg.out, A);
  }
  return kOk;
}

int cmd_numrange(const RunConfig& cfg) {
  check_config(cfg);
  const ComplexMatrix A = load_matrix(cfg);
  const NumericalRangeBoundary nr = numerical_range_boundary(A, cfg.nodes);
  const auto& comp = nr.curve.components.front();
  const auto eig = spectrum(A);
  if (cfg.format == "json") {
    json points = json::array();
    for (std::size_t k = 0; k < comp.size(); ++k) {
      points.push_back({{"theta", nr.support_angles[k]},
                        {"sigma", cplx_json(comp.nodes[k])}});
    }
    json eigs = json::array();
    for (const auto& l : eig) eigs.push_back(cplx_json(l));
    emit_json(cfg, {{"meta", meta("numrange", cfg)}, {"boundary", points}, {"eigenvalues", eigs},
                    {"length", nr.curve.total_length}});
    return kOk;
  }
  Sink sink(cfg.out);
  auto& out = sink.stream();
  out << std::setprecision(17);
  csv_meta(out, "numrange", cfg);
  out << "theta,re_sigma,im_sigma\n";
  for (std::size_t k = 0; k < comp.size(); ++k) {
    out << nr.support_angles[k] << ',' << comp.nodes[k].real() << ',' << comp.nodes[k].imag() << '\n';
  }
  out << "# eigenvalues\nre_lambda,im_lambda\n";
  for (const auto& l : eig) out << l.real() << ',' << l.imag() << '\n';
  return kOk;
}

// Geometric sweep from just inside W(A) to well outside it, about center c.
std::vector<double> default_radii(const ComplexMatrix& A, const Circle& mec, int count) {
  double reach = mec.radius;
  if (!is_normal(A)) {
    const BoundaryCurve range = numerical_range_curve(A, 1024);
    for (const auto& z : range.components.front().nodes) {
      reach = std::max(reach, std::abs(z - mec.center));
    }
  }
  if (!(reach > 0.0)) throw InputError("cannot derive radii: spectrum and numerical range are a point");
  const double lo = std::max(1.05 * mec.radius, 0.75 * reach);
  const double hi = 1.5 * reach;
  std::vector<double> radii;
  for (int i = 0; i < count; ++i) {
    radii.push_back(count == 1 ? lo : lo * std::pow(hi / lo, double(i) / (count - 1)));
  }
  return radii;
}

int cmd_profile(const RunConfig& cfg) {
  check_config(cfg);
  if (cfg.count < 1) throw InputError("--count must be at least 1");
  const ComplexMatrix A = load_matrix(cfg);
  const Circle mec = min_enclosing_circle(spectrum(A));
  const std::vector<double> radii = cfg.radii.empty() ? default_radii(A, mec, cfg.count)
                                                      : parse_list(cfg.radii);
  const double floor = mec.radius + 1e-12 * (1.0 + mec.radius);
  for (double R : radii) {
    if (!(R > floor)) {
      std::ostringstream msg;
      msg << "radius " << R << " does not exceed the spectral enclosing radius " << mec.radius;
      throw InputError(msg.str());
    }
  }
  std::vector<LambdaMinProfile> profiles;
  for (double R : radii) profiles.push_back(lambda_min_profile(circle_curve({mec.center, R}, cfg.nodes), A));

  if (cfg.format == "json") {
    json circles = json::array();
    for (std::size_t i = 0; i < radii.size(); ++i) {
      const auto& values = profiles[i].values.front();
      circles.push_back({{"circle_index", i}, {"R", radii[i]}, {"lambda_min", values},
                         {"min", profiles[i].min_value()},
                         {"delta", delta_gamma_hat(profiles[i]).delta}});
    }
    emit_json(cfg, {{"meta", meta("profile", cfg)}, {"center", cplx_json(mec.center)},
                    {"circles", circles}});
    return kOk;
  }
  Sink sink(cfg.out);
  auto& out = sink.stream();
  out << std::setprecision(17);
  csv_meta(out, "profile", cfg);
  out << "# center=" << mec.center.real() << ',' << mec.center.imag() << '\n';
  out << "circle_index,R,s,lambda_min\n";
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const auto& values = profiles[i].values.front();
    const double step = 2.0 * kPi * radii[i] / double(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
      out << i << ',' << radii[i] << ',' << step * double(k) << ',' << values[k] << '\n';
    }
  }
  return kOk;
}

json report_json(const BoundReport& r) {
  json doc = {{"delta", r.delta},         {"gamma_hat", r.gamma_hat}, {"two_plus_delta", r.two_plus_delta},
              {"k_delta", r.k_delta},     {"k_cauchy", r.k_cauchy},   {"node_count", r.node_count},
              {"converged", r.converged}};
  if (r.k_disk) doc["k_disk"] = *r.k_disk;
  return doc;
}

int cmd_bounds(const RunConfig& cfg) {
  check_config(cfg);
  if (cfg.delta || cfg.gamma_hat) {
    if (!cfg.delta || !cfg.gamma_hat) throw InputError("--delta and --gamma-hat go together");
    const double k = k_from_delta(*cfg.delta, *cfg.gamma_hat);
    emit_json(cfg, {{"meta", meta("bounds", cfg)}, {"delta", *cfg.delta}, {"gamma_hat", *cfg.gamma_hat},
                    {"two_plus_delta", 2.0 + *cfg.delta}, {"k_delta", k},
                    {"k_delta_rounded_up", round_up(k, 3)}});
    return kOk;
  }
  const ComplexMatrix A = load_matrix(cfg);
  if (cfg.region.empty()) throw InputError("--region is required");
  const RegionSpec spec = parse_region(cfg.region);
  const CurveFactory factory = region_factory(spec, A, cfg.eps);
  BoundReport report;
  if (cfg.fixed) {
    report = compute_bounds(factory(cfg.nodes), A);
  } else {
    RefinementOptions options;
    options.start_nodes = cfg.nodes;
    options.max_nodes = std::max(cfg.nodes, 8192);
    report = compute_bounds_adaptive(factory, A, options);
  }
  if (cfg.format == "csv") {
    Sink sink(cfg.out);
    auto& out = sink.stream();
    out << std::setprecision(17);
    csv_meta(out, "bounds", cfg);
    out << "delta,gamma_hat,two_plus_delta,k_delta,k_cauchy,node_count,converged,k_disk\n"
        << report.delta << ',' << report.gamma_hat << ',' << report.two_plus_delta << ','
        << report.k_delta << ',' << report.k_cauchy << ',' << report.node_count << ','
        << (report.converged ? 1 : 0) << ',';
    if (report.k_disk) out << *report.k_disk;
    out << '\n';
    return kOk;
  }
  json doc = report_json(report);
  doc["meta"] = meta("bounds", cfg);
  doc["region"] = cfg.region;
  emit_json(cfg, doc);
  return kOk;
}

int cmd_blaschke(const RunConfig& cfg) {
  check_config(cfg);
  const ComplexMatrix A = load_matrix(cfg);
  if (cfg.region.empty()) throw InputError("--region is required (circle:... or mec-scaled:...)");
  const Circle disk = region_disk(parse_region(cfg.region), A);
  const auto n = A.rows();
  const int degree = cfg.degree > 0 ? cfg.degree : static_cast<int>(std::max<Eigen::Index>(1, n - 1));
  const ComplexMatrix Psi = (A - disk.center * ComplexMatrix::Identity(n, n)) / disk.radius;

  const OptimizationResult opt = maximize_norm(Psi, degree, cfg.restarts, cfg.seed);
  const Thm2Checks checks = thm2_checks(Psi, opt);
  const BoundaryFunction f = rescale_to_unit_sup(blaschke_on_disk(opt.product, disk, cfg.nodes));
  const LambdaMinProfile profile = lambda_min_profile(f.curve, A);
  const double delta = delta_gamma_hat(profile).delta;
  const ConjectureProbe probe = conjecture_probe(f, A, profile);

  json roots = json::array();
  for (const auto& a : opt.product.roots) roots.push_back(cplx_json(a));
  json probe_doc = {{"norm_fA", probe.norm_fA},
                    {"norm_fA_plus_gA_star", probe.norm_fA_plus_gA_star},
                    {"norm_S", probe.norm_S},
                    {"violation", probe.violation}};
  if (probe.singular_identity_residual) {
    probe_doc["singular_identity_residual"] = *probe.singular_identity_residual;
  }
  json doc = {{"meta", meta("blaschke", cfg)},
              {"disk", {{"center", cplx_json(disk.center)}, {"radius", disk.radius}}},
              {"degree", degree},
              {"phase", opt.product.phase},
              {"roots", roots},
              {"norm", opt.norm},
              {"delta", delta},
              {"two_plus_delta", 2.0 + delta},
              {"orthogonality_residual", opt.orthogonality_residual},
              {"restarts", cfg.restarts},
              {"restart_norms", opt.restart_norms},
              {"restarts_disagree", opt.restarts_disagree},
              {"degenerate_root", opt.degenerate_root},
              {"optimality",
               {{"applicable", checks.applicable},
                {"orthogonality_ok", checks.orthogonality_ok},
                {"stationarity_ok", checks.stationarity_ok},
                {"stationarity_excess", checks.stationarity_excess}}},
              {"probe", probe_doc}};
  emit_json(cfg, doc);
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  VerifyLevel level;
  if (cfg.level == "quick") {
    level = VerifyLevel::quick;
  } else if (cfg.level == "full") {
    level = VerifyLevel::full;
  } else {
    throw InputError("--level must be quick or full");
  }
  AcceptanceHooks hooks;
  if (cfg.k_offset != 0.0) {
    const double offset = cfg.k_offset;
    hooks.k_from_delta = [offset](double d, double g) { return k_from_delta(d, g) + offset; };
  }
  std::vector<CriterionResult> results;
  if (cfg.only.empty()) {
    results = run_acceptance(level, hooks, &std::cout);
  } else {
    for (int id : cfg.only) {
      if (id < 1 || id > kCriterionCount) throw InputError("no criterion " + std::to_string(id));
      results.push_back(run_criterion(id, level, hooks));
      print_results(std::cout, {results.back()});
    }
  }
  const bool ok = all_gating_passed(results);
  std::cout << (ok ? "verify: all gating criteria passed" : "verify: FAILED") << '\n';
  return ok ? kOk : kVerify;
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool region) {
  cmd->add_option("--matrix", cfg.matrix, "Matrix JSON file")->required();
  if (region) cmd->add_option("--region", cfg.region, "Region: circle:cx,cy,R | circles:... | nr | nr-scaled[:eps] | mec-scaled:f");
  cmd->add_option("--nodes", cfg.nodes, "Quadrature nodes per component")->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "Seed recorded in output metadata")->capture_default_str();
  cmd->add_option("--out", cfg.out, "Output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K-spectral-set bounds: numerical ranges, lambda_min profiles, Blaschke optimization"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  RunConfig cfg;

  auto* gen = app.add_subcommand("gen", "Write a test matrix");
  gen->add_option("kind", cfg.kind, "jordan | perturbed-jordan | randut")->required();
  gen->add_option("--n", cfg.n, "Dimension")->capture_default_str();
  gen->add_option("--eps", cfg.eps, "Corner perturbation (perturbed-jordan)")->capture_default_str();
  gen->add_option("--seed", cfg.seed, "Seed (randut)")->capture_default_str();
  gen->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* numrange = app.add_subcommand("numrange", "Boundary of the numerical range as CSV");
  add_common(numrange, cfg, false);
  numrange->add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  auto* profile = app.add_subcommand("profile", "lambda_min along circles about the spectral enclosing center");
  add_common(profile, cfg, false);
  profile->add_option("--radii", cfg.radii, "Comma separated radii (default: geometric sweep)");
  profile->add_option("--count", cfg.count, "Circles in the default sweep")->capture_default_str();
  profile->add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  auto* bounds = app.add_subcommand("bounds", "delta, gamma_hat, K_delta and K_Cauchy for a region");
  bounds->add_option("--matrix", cfg.matrix, "Matrix JSON file");
  bounds->add_option("--region", cfg.region, "Region specification");
  bounds->add_option("--nodes", cfg.nodes, "Starting nodes per component")->capture_default_str();
  bounds->add_option("--seed", cfg.seed, "Seed recorded in output metadata")->capture_default_str();
  bounds->add_option("--out", cfg.out, "Output file (default stdout)");
  bounds->add_option("--eps", cfg.eps, "Default epsilon for nr-scaled")->capture_default_str();
  bounds->add_option("--format", cfg.format, "json | csv")->check(CLI::IsMember({"csv", "json"}));
  bounds->add_flag("--fixed", cfg.fixed, "Use exactly --nodes, no refinement");
  bounds->add_option("--delta", cfg.delta, "Formula path: delta");
  bounds->add_option("--gamma-hat", cfg.gamma_hat, "Formula path: gamma_hat");

  auto* blaschke = app.add_subcommand("blaschke", "Maximize ||B(phi(A))|| over Blaschke products on a disk");
  add_common(blaschke, cfg, true);
  blaschke->add_option("--degree", cfg.degree, "Blaschke degree (default n-1)");
  blaschke->add_option("--restarts", cfg.restarts, "Optimizer restarts")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
  verify->add_option("--level", cfg.level, "quick | full")->capture_default_str();
  verify->add_option("--only", cfg.only, "Run only these criterion ids");
  verify->add_option("--k-offset", cfg.k_offset, "Self-test: perturb k_from_delta by this amount");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*gen) return cmd_gen(cfg);
    if (*numrange) return cmd_numrange(cfg);
    if (*profile) return cmd_profile(cfg);
    if (*bounds) return cmd_bounds(cfg);
    if (*blaschke) return cmd_blaschke(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const RegionError& e) {
    std::cerr << "region error: " << e.what() << '\n';
    return kInput;
  } catch (const UnsupportedRegionError& e) {
    std::cerr << "unsupported region: " << e.what() << '\n';
    return kNumerical;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kOk;
}
