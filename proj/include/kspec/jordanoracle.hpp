#pragma once

#include "kspec/matkernel.hpp"

namespace kspec {

/// Closed forms for the 3x3 Jordan block (eigenvalue 0) on the disk |z| <= r, 0 < r <= 1.
struct JordanCase {
  double r = 1.0;
  double lambda_min = 0.0;  ///< (2 r^2 - 1) / (2 pi r^3), constant along the circle
  double delta = 0.0;       ///< -(2 - 1/r^2)
  double two_plus_delta = 0.0;
  double optimal_norm = 0.0;  ///< ||(J/r)^2|| = 1/r^2
};

JordanCase closed_forms(double r);

struct OracleDeviation {
  double profile_dev = 0.0;  ///< max_k |lambda_min_k - closed form|
  double delta_dev = 0.0;
  double norm_dev = 0.0;  ///< | ||B(J/r)|| - 1/r^2 | for B(z) = z^2
};

/// Runs circle_curve -> lambda_min_profile -> delta_gamma_hat and eval_matrix(z^2, J/r)
/// and compares against the closed forms.
OracleDeviation oracle_compare(double r, int nodes);

/// n x n Jordan block with eigenvalue 0 (ones on the superdiagonal).
ComplexMatrix jordan_block(int n);

}  // namespace kspec
