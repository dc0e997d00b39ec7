#include "aec/sim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aec::sim {

namespace {

constexpr Real kSilence = 1e-12;

Real clamp_db(Real db, Real lo, Real hi) { return std::clamp(db, lo, hi); }

}  // namespace

std::vector<Real> erle_series(const std::vector<Real>& echo,
                              const std::vector<Real>& echo_estimate,
                              std::size_t block_size,
                              std::size_t window_samples) {
  if (echo.size() != echo_estimate.size() || block_size == 0 ||
      window_samples == 0) {
    throw std::invalid_argument("erle_series: bad arguments");
  }
  const std::size_t frames = echo.size() / block_size;
  std::vector<Real> echo_cum(echo.size() + 1, 0.0);
  std::vector<Real> res_cum(echo.size() + 1, 0.0);
  for (std::size_t n = 0; n < echo.size(); ++n) {
    const Real r = echo[n] - echo_estimate[n];
    echo_cum[n + 1] = echo_cum[n] + echo[n] * echo[n];
    res_cum[n + 1] = res_cum[n] + r * r;
  }
  std::vector<Real> out(frames, 0.0);
  for (std::size_t f = 0; f < frames; ++f) {
    const std::size_t end = (f + 1) * block_size;
    const std::size_t begin = end > window_samples ? end - window_samples : 0;
    const Real echo_pow = echo_cum[end] - echo_cum[begin];
    const Real res_pow = res_cum[end] - res_cum[begin];
    if (echo_pow <= kSilence) {
      out[f] = 0.0;  // no echo present, nothing to enhance
    } else if (res_pow <= 0.0) {
      out[f] = kErleCeilDb;
    } else {
      out[f] = clamp_db(10.0 * std::log10(echo_pow / res_pow), kErleFloorDb,
                        kErleCeilDb);
    }
  }
  return out;
}

Real misalignment_db(const std::vector<Real>& h_true,
                     const std::vector<Real>& h_est) {
  Real ref = 0.0;
  for (Real t : h_true) ref += t * t;
  if (ref <= 0.0) {
    throw std::invalid_argument("misalignment_db: zero reference response");
  }
  Real diff = 0.0;
  const std::size_t n = std::max(h_true.size(), h_est.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Real t = i < h_true.size() ? h_true[i] : 0.0;
    const Real e = i < h_est.size() ? h_est[i] : 0.0;
    diff += (t - e) * (t - e);
  }
  if (diff <= 0.0) return kMisalignmentFloorDb;
  return clamp_db(10.0 * std::log10(diff / ref), kMisalignmentFloorDb, 100.0);
}

}  // namespace aec::sim
