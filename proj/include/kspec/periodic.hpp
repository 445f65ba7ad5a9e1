#pragma once

#include <complex>
#include <vector>

namespace kspec::periodic {

using cplx = std::complex<double>;

// Helpers for samples f(u_k), u_k = 2*pi*k/N, of a smooth 2*pi-periodic function.

/// Spectral derivative d f / d u at the same nodes. The Nyquist mode is dropped.
std::vector<cplx> derivative(const std::vector<cplx>& samples);

/// Trigonometric interpolant resampled on `count` uniform nodes (count >= N).
std::vector<cplx> upsample(const std::vector<cplx>& samples, std::size_t count);

/// Trigonometric interpolant that can be evaluated anywhere; the Nyquist mode
/// is split symmetrically so real data interpolates to real values.
class TrigInterpolant {
 public:
  explicit TrigInterpolant(const std::vector<cplx>& samples);

  cplx value(double u) const;
  cplx derivative(double u) const;
  std::size_t size() const { return modes_.size(); }

  /// Mean value (the zero mode).
  cplx mean() const;

  /// Integral from 0 to u.
  cplx integral(double u) const;

 private:
  std::vector<int> wavenumbers_;
  std::vector<cplx> modes_;
};

}  // namespace kspec::periodic
