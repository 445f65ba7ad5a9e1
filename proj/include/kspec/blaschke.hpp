#pragma once

#include <cstdint>
#include <vector>

#include "kspec/matkernel.hpp"
#include "kspec/parallel.hpp"

namespace kspec {

/// B(z) = e^{i phase} prod_j (z - alpha_j) / (1 - conj(alpha_j) z), |alpha_j| <= 1.
/// A root on the unit circle contributes the unit scalar -alpha_j.
struct BlaschkeProduct {
  double phase = 0.0;
  std::vector<cplx> roots;

  std::size_t degree() const { return roots.size(); }
};

cplx eval_scalar(const BlaschkeProduct& B, cplx z);

/// (M - alpha I)(I - conj(alpha) M)^{-1} for |alpha| < 1.
ComplexMatrix mobius_of_matrix(const ComplexMatrix& M, cplx alpha);

/// B(Psi); requires every |alpha_j| <= 1.
ComplexMatrix eval_matrix(const BlaschkeProduct& B, const ComplexMatrix& Psi);

struct OptimizationResult {
  BlaschkeProduct product;
  double norm = 0.0;
  SingularTriple triple;
  /// |<B(Psi) v1, v1>|
  double orthogonality_residual = 0.0;
  int restarts_used = 0;
  std::uint64_t seed = 0;
  /// Final norms of the restarts disagree by more than 1e-6 (non-convex landscape).
  bool restarts_disagree = false;
  /// Some root sits within 1e-6 of the unit circle (supremum possibly unattained).
  bool degenerate_root = false;
  std::vector<double> restart_norms;
};

/// Multi-start Nelder-Mead over the roots of a degree-`max_degree` Blaschke product
/// maximizing ||B(Psi)||. Restart 0 starts at all roots 0, restart 1 at the largest
/// eigenvalues of Psi, the rest uniformly in the disk of radius 0.95.
OptimizationResult maximize_norm(const ComplexMatrix& Psi, int max_degree, int restarts = 50,
                                 std::uint64_t seed = 12345, Exec exec = Exec::parallel);

/// |<M v1, v1>| for the top right singular vector v1 of M.
double orthogonality_residual(const ComplexMatrix& M, const SingularTriple& triple);

struct Thm2Checks {
  bool applicable = false;  ///< norm > 1 + 1e-6
  bool orthogonality_ok = false;
  bool stationarity_ok = false;
  double orthogonality_residual = 0.0;
  /// max over trial alpha of ||mobius(B(Psi), alpha)|| - norm
  double stationarity_excess = 0.0;
};

/// Checks the singular-vector orthogonality of an optimum and its stationarity
/// under small Moebius perturbations (|alpha| in {1e-2, 1e-3}, 16 angles each).
/// When not applicable both flags stay false.
Thm2Checks thm2_checks(const ComplexMatrix& Psi, const OptimizationResult& result);

inline constexpr double kOrthTol = 1e-6;
inline constexpr double kStatTol = 1e-8;

}  // namespace kspec
