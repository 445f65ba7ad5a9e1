#pragma once

#include <functional>
#include <vector>

namespace kspec {

struct NelderMeadOptions {
  double initial_step = 0.25;
  /// Stop when the spread of simplex values drops below value_tol * (1 + |f_best|)
  /// and the simplex diameter below x_tol.
  double value_tol = 1e-12;
  double x_tol = 1e-10;
  int max_evaluations = 5000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Minimizes f with the standard adaptive-free Nelder-Mead simplex
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const NelderMeadOptions& options = {});

}  // namespace kspec
