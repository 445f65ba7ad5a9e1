#include "kspec/periodic.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <stdexcept>

namespace kspec::periodic {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// In-place unnormalized DFT; sign = FFTW_FORWARD or FFTW_BACKWARD.
void dft(std::vector<cplx>& data, int sign) {
  if (data.empty()) return;
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    // The FFTW planner is not reentrant; execution is.
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(data.size()), buf, buf, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(plan);
}

int wavenumber(std::size_t k, std::size_t n) {
  const auto kk = static_cast<long>(k);
  const auto nn = static_cast<long>(n);
  return static_cast<int>(2 * kk < nn ? kk : kk - nn);
}

}  // namespace

std::vector<cplx> derivative(const std::vector<cplx>& samples) {
  const std::size_t n = samples.size();
  std::vector<cplx> c = samples;
  dft(c, FFTW_FORWARD);
  for (std::size_t k = 0; k < n; ++k) {
    const int m = wavenumber(k, n);
    if (n % 2 == 0 && 2 * k == n) {
      c[k] = 0.0;
    } else {
      c[k] *= cplx(0.0, static_cast<double>(m));
    }
  }
  dft(c, FFTW_BACKWARD);
  for (auto& v : c) v /= static_cast<double>(n);
  return c;
}

std::vector<cplx> upsample(const std::vector<cplx>& samples, std::size_t count) {
  const std::size_t n = samples.size();
  if (count < n) throw std::invalid_argument("periodic::upsample: count < N");
  std::vector<cplx> c = samples;
  dft(c, FFTW_FORWARD);
  std::vector<cplx> padded(count, cplx(0.0));
  for (std::size_t k = 0; k < n; ++k) {
    const int m = wavenumber(k, n);
    if (n % 2 == 0 && 2 * k == n) {
      // Split the Nyquist mode between +N/2 and -N/2.
      padded[static_cast<std::size_t>(m + static_cast<long>(count))] += 0.5 * c[k];
      padded[static_cast<std::size_t>(-m)] += 0.5 * c[k];
      continue;
    }
    const std::size_t slot = m >= 0 ? static_cast<std::size_t>(m)
                                    : static_cast<std::size_t>(static_cast<long>(count) + m);
    padded[slot] += c[k];
  }
  dft(padded, FFTW_BACKWARD);
  for (auto& v : padded) v /= static_cast<double>(n);
  return padded;
}

TrigInterpolant::TrigInterpolant(const std::vector<cplx>& samples) {
  const std::size_t n = samples.size();
  std::vector<cplx> c = samples;
  dft(c, FFTW_FORWARD);
  for (std::size_t k = 0; k < n; ++k) {
    const int m = wavenumber(k, n);
    const cplx coeff = c[k] / static_cast<double>(n);
    if (n % 2 == 0 && 2 * k == n) {
      wavenumbers_.push_back(m);
      modes_.push_back(0.5 * coeff);
      wavenumbers_.push_back(-m);
      modes_.push_back(0.5 * coeff);
    } else {
      wavenumbers_.push_back(m);
      modes_.push_back(coeff);
    }
  }
}

namespace {

// Sum of modes[j] * (i*m_j)^order * e^{i m_j u}; powers of e^{iu} by recurrence.
cplx evaluate(const std::vector<int>& wavenumbers, const std::vector<cplx>& modes, double u,
              int order) {
  int top = 0;
  for (int m : wavenumbers) top = std::max(top, std::abs(m));
  std::vector<cplx> powers(static_cast<std::size_t>(top) + 1);
  const cplx step = std::polar(1.0, u);
  powers[0] = 1.0;
  for (int m = 1; m <= top; ++m) {
    // Re-anchor periodically to keep the recurrence accurate.
    powers[static_cast<std::size_t>(m)] =
        (m % 64 == 0) ? std::polar(1.0, m * u) : powers[static_cast<std::size_t>(m - 1)] * step;
  }
  cplx sum = 0.0;
  for (std::size_t j = 0; j < modes.size(); ++j) {
    const int m = wavenumbers[j];
    const cplx e = m >= 0 ? powers[static_cast<std::size_t>(m)]
                          : std::conj(powers[static_cast<std::size_t>(-m)]);
    cplx term = modes[j] * e;
    if (order == 1) term *= cplx(0.0, m);
    sum += term;
  }
  return sum;
}

}  // namespace

cplx TrigInterpolant::value(double u) const { return evaluate(wavenumbers_, modes_, u, 0); }

cplx TrigInterpolant::derivative(double u) const { return evaluate(wavenumbers_, modes_, u, 1); }

cplx TrigInterpolant::mean() const {
  cplx m = 0.0;
  for (std::size_t j = 0; j < modes_.size(); ++j) {
    if (wavenumbers_[j] == 0) m += modes_[j];
  }
  return m;
}

cplx TrigInterpolant::integral(double u) const {
  cplx sum = 0.0;
  for (std::size_t j = 0; j < modes_.size(); ++j) {
    const int m = wavenumbers_[j];
    if (m == 0) {
      sum += modes_[j] * u;
    } else {
      sum += modes_[j] * (std::polar(1.0, m * u) - 1.0) / cplx(0.0, m);
    }
  }
  return sum;
}

}  // namespace kspec::periodic
