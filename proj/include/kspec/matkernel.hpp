#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace kspec {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

/// Smallest eigenpair of a Hermitian matrix.
struct HermitianEigenResult {
  double value = 0.0;
  ComplexVector vector;
};

/// Largest singular value with unit right (v1) and left (u1) singular vectors,
/// M*v1 = sigma1*u1.
struct SingularTriple {
  double sigma1 = 0.0;
  ComplexVector v1;
  ComplexVector u1;
};

/// Throws InputError unless M is square, nonempty and finite.
void require_square_finite(const ComplexMatrix& M, const char* what);

/// Smallest eigenvalue and a unit eigenvector of H. The input is symmetrized
/// as (H + H*)/2 after checking ||H - H*||_F <= 1e-12 ||H||_F.
HermitianEigenResult hermitian_min_eig(const ComplexMatrix& H);

/// Smallest eigenvalue only (same checks, cheaper solve).
double hermitian_min_eigenvalue(const ComplexMatrix& H);

SingularTriple largest_singular_triple(const ComplexMatrix& M);

/// Spectral norm ||M||_2.
double spectral_norm(const ComplexMatrix& M);

/// Smallest singular value.
double min_singular_value(const ComplexMatrix& M);

/// (sigma*I - A)^{-1}. Throws SingularityError when the smallest singular value
/// of sigma*I - A falls below 1e-12 * max(||A||, |sigma|).
ComplexMatrix resolvent(cplx sigma, const ComplexMatrix& A);

/// Eigenvalues of A with multiplicity, in solver order.
std::vector<cplx> spectrum(const ComplexMatrix& A);

/// ||A*A - AA*||_F <= tol * ||A||_F^2.
bool is_normal(const ComplexMatrix& A, double tol = 1e-12);

/// Hermitian part (M + M*)/2.
ComplexMatrix hermitian_part(const ComplexMatrix& M);

}  // namespace kspec
