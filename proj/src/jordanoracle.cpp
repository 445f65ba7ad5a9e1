#include "kspec/jordanoracle.hpp"

#include <algorithm>
#include <cmath>

#include "kspec/blaschke.hpp"
#include "kspec/errors.hpp"
#include "kspec/regions.hpp"
#include "kspec/spectralset.hpp"

namespace kspec {

ComplexMatrix jordan_block(int n) {
  if (n < 1) throw InputError("jordan_block: n must be positive");
  ComplexMatrix J = ComplexMatrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) J(i, i + 1) = 1.0;
  return J;
}

JordanCase closed_forms(double r) {
  // The eigenvalue formula is only established for r <= 1.
  if (!(r > 0.0 && r <= 1.0)) throw InputError("closed_forms: r must lie in (0, 1]");
  JordanCase jc;
  jc.r = r;
  jc.lambda_min = (2.0 * r * r - 1.0) / (2.0 * kPi * r * r * r);
  jc.delta = -(2.0 - 1.0 / (r * r));
  jc.two_plus_delta = 1.0 / (r * r);
  jc.optimal_norm = 1.0 / (r * r);
  return jc;
}

OracleDeviation oracle_compare(double r, int nodes) {
  const JordanCase jc = closed_forms(r);
  const ComplexMatrix J = jordan_block(3);
  const BoundaryCurve curve = circle_curve(Circle{cplx(0.0, 0.0), r}, nodes);
  const LambdaMinProfile profile = lambda_min_profile(curve, J);

  OracleDeviation dev;
  for (double v : profile.values.front()) {
    dev.profile_dev = std::max(dev.profile_dev, std::abs(v - jc.lambda_min));
  }
  dev.delta_dev = std::abs(delta_gamma_hat(profile).delta - jc.delta);
  const BlaschkeProduct z2{0.0, {cplx(0.0, 0.0), cplx(0.0, 0.0)}};
  dev.norm_dev = std::abs(spectral_norm(eval_matrix(z2, J / r)) - jc.optimal_norm);
  return dev;
}

}  // namespace kspec
