#include "kspec/generators.hpp"

#include <cmath>
#include <random>

#include "kspec/errors.hpp"
#include "kspec/jordanoracle.hpp"

namespace kspec {

ComplexMatrix perturbed_jordan(int n, double eps) {
  if (n < 2) throw InputError("perturbed_jordan: n must be >= 2");
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw InputError("perturbed_jordan: eps must be >= 0");
  ComplexMatrix A = jordan_block(n);
  A(n - 1, 0) = eps;
  return A;
}

namespace {

ComplexMatrix gaussian(int n, std::uint64_t seed, bool upper_only) {
  if (n < 2) throw InputError("random matrix: n must be >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix A = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = upper_only ? i : 0; j < n; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      A(i, j) = cplx(re, im);
    }
  }
  return A;
}

}  // namespace

ComplexMatrix random_upper_triangular(int n, std::uint64_t seed) { return gaussian(n, seed, true); }

ComplexMatrix random_dense(int n, std::uint64_t seed) { return gaussian(n, seed, false); }

}  // namespace kspec
