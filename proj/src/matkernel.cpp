#include "kspec/matkernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kspec/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kspec {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void require_square_finite(const ComplexMatrix& M, const char* what) {
  if (M.rows() == 0 || M.rows() != M.cols()) {
    throw InputError(std::string(what) + ": matrix must be square and nonempty");
  }
  if (!M.allFinite()) {
    throw InputError(std::string(what) + ": matrix has non-finite entries");
  }
}

ComplexMatrix hermitian_part(const ComplexMatrix& M) {
  return (M + M.adjoint()) * 0.5;
}

namespace {

ComplexMatrix checked_symmetrize(const ComplexMatrix& H) {
  require_square_finite(H, "hermitian_min_eig");
  const double scale = H.norm();
  const double asym = (H - H.adjoint()).norm();
  if (asym > 1e-12 * scale) {
    throw InputError("hermitian_min_eig: matrix is not Hermitian (||H - H*||_F = " +
                     std::to_string(asym) + ")");
  }
  return hermitian_part(H);
}

}  // namespace

HermitianEigenResult hermitian_min_eig(const ComplexMatrix& H) {
  const ComplexMatrix Hs = checked_symmetrize(H);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(Hs, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_min_eig: eigensolver did not converge");
  }
  // Eigenvalues come back in increasing order.
  return {solver.eigenvalues()(0), solver.eigenvectors().col(0)};
}

double hermitian_min_eigenvalue(const ComplexMatrix& H) {
  const ComplexMatrix Hs = checked_symmetrize(H);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(Hs, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_min_eig: eigensolver did not converge");
  }
  return solver.eigenvalues()(0);
}

SingularTriple largest_singular_triple(const ComplexMatrix& M) {
  require_square_finite(M, "largest_singular_triple");
  const Eigen::Index n = M.rows();
  Eigen::JacobiSVD<ComplexMatrix> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) {
    throw NumericalError("largest_singular_triple: SVD did not converge");
  }
  SingularTriple t;
  t.sigma1 = svd.singularValues()(0);
  t.v1 = svd.matrixV().col(0);
  t.u1 = svd.matrixU().col(0);
  if (t.sigma1 == 0.0) {
    t.v1 = ComplexVector::Unit(n, 0);
    t.u1 = ComplexVector::Unit(n, 0);
  }
  return t;
}

double spectral_norm(const ComplexMatrix& M) {
  if (M.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(M);
  if (svd.info() != Eigen::Success) {
    throw NumericalError("spectral_norm: SVD did not converge");
  }
  return svd.singularValues()(0);
}

double min_singular_value(const ComplexMatrix& M) {
  Eigen::JacobiSVD<ComplexMatrix> svd(M);
  if (svd.info() != Eigen::Success) {
    throw NumericalError("min_singular_value: SVD did not converge");
  }
  return svd.singularValues()(svd.singularValues().size() - 1);
}

ComplexMatrix resolvent(cplx sigma, const ComplexMatrix& A) {
  require_square_finite(A, "resolvent");
  const Eigen::Index n = A.rows();
  ComplexMatrix shifted = -A;
  shifted.diagonal().array() += sigma;

  const double a_norm = A.cwiseAbs().colwise().sum().maxCoeff();
  const double guard = 1e-12 * std::max({a_norm, std::abs(sigma), 1e-300});

  Eigen::PartialPivLU<ComplexMatrix> lu(shifted);
  // rcond * ||B||_1 estimates the smallest singular value of B.
  const double shifted_norm = shifted.cwiseAbs().colwise().sum().maxCoeff();
  const double smin_estimate = lu.rcond() * shifted_norm;
  if (!(smin_estimate > guard)) {
    throw SingularityError("resolvent: sigma is numerically an eigenvalue of A");
  }
  ComplexMatrix R = lu.solve(ComplexMatrix::Identity(n, n));
  if (!R.allFinite()) {
    throw SingularityError("resolvent: non-finite inverse");
  }
  return R;
}

std::vector<cplx> spectrum(const ComplexMatrix& A) {
  require_square_finite(A, "spectrum");
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(A, false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("spectrum: eigensolver did not converge");
  }
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

bool is_normal(const ComplexMatrix& A, double tol) {
  const double scale = A.squaredNorm();
  const double commutator = (A.adjoint() * A - A * A.adjoint()).norm();
  return commutator <= tol * scale;
}

}  // namespace kspec
