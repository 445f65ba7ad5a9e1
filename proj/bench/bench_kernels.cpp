// Serial reference vs OpenMP path for the data-parallel kernels.
#include <benchmark/benchmark.h>

#include "kspec/blaschke.hpp"
#include "kspec/cauchykit.hpp"
#include "kspec/generators.hpp"
#include "kspec/regions.hpp"
#include "kspec/spectralset.hpp"

namespace {

using namespace kspec;

Exec policy(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void BM_LambdaMinProfile(benchmark::State& state) {
  const ComplexMatrix A = random_upper_triangular(12, 2019);
  Circle c = min_enclosing_circle(spectrum(A));
  c.radius *= 1.5;
  const BoundaryCurve curve = circle_curve(c, 2048);
  for (auto _ : state) benchmark::DoNotOptimize(lambda_min_profile(curve, A, policy(state)));
  label(state);
}
BENCHMARK(BM_LambdaMinProfile)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_NumericalRange(benchmark::State& state) {
  const ComplexMatrix A = random_dense(8, 3);
  for (auto _ : state) benchmark::DoNotOptimize(numerical_range_boundary(A, 1024, 0, policy(state)));
  label(state);
}
BENCHMARK(BM_NumericalRange)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MaximizeNorm(benchmark::State& state) {
  const ComplexMatrix Psi = perturbed_jordan(3, 0.1) / 0.6;
  for (auto _ : state) benchmark::DoNotOptimize(maximize_norm(Psi, 2, 16, 12345, policy(state)));
  label(state);
}
BENCHMARK(BM_MaximizeNorm)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CauchyTransform(benchmark::State& state) {
  const ComplexMatrix A = perturbed_jordan(3, 0.1);
  const auto f = sample_boundary_function(numerical_range_curve(A, 512), [](cplx z) { return std::exp(z); });
  for (auto _ : state) benchmark::DoNotOptimize(g_boundary_values(f, kShrinkEta, policy(state)));
  label(state);
}
BENCHMARK(BM_CauchyTransform)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
