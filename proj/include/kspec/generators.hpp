#pragma once

#include <cstdint>

#include "kspec/matkernel.hpp"

namespace kspec {

/// Jordan block with eigenvalue 0 and `eps` in the bottom-left corner
/// (eps = 0.1, n = 3 is the standard perturbed test matrix).
ComplexMatrix perturbed_jordan(int n, double eps);

/// Upper triangular matrix with independent standard complex Gaussian entries
/// (real and imaginary parts N(0, 1/2)) on and above the diagonal.
ComplexMatrix random_upper_triangular(int n, std::uint64_t seed);

/// Dense matrix with standard complex Gaussian entries.
ComplexMatrix random_dense(int n, std::uint64_t seed);

}  // namespace kspec
