#ifndef AEC_SIM_METRICS_HPP
#define AEC_SIM_METRICS_HPP

#include <cstdint>
#include <vector>

#include "aec/types.hpp"

namespace aec::sim {

struct MetricsRow {
  std::uint64_t frame = 0;
  Real time_s = 0.0;
  Real erle_db = 0.0;
  Real misalignment_db = 0.0;
  Real eta = 0.0;
  Real mu_mean = 0.0;
  bool double_talk_active = false;
};

/// Per-frame echo return loss enhancement, 10*log10(sum y^2 / sum (y-yhat)^2)
/// over a trailing window of `window_samples`, clamped to [-20, 100] dB.
/// Needs the clean-echo oracle, so it is simulation-only.
std::vector<Real> erle_series(const std::vector<Real>& echo,
                              const std::vector<Real>& echo_estimate,
                              std::size_t block_size,
                              std::size_t window_samples);

/// Normalized misalignment 10*log10(|h_true - h_est|^2 / |h_true|^2), with
/// h_true zero-padded to the estimate's length. Clamped to [-100, 100] dB.
Real misalignment_db(const std::vector<Real>& h_true,
                     const std::vector<Real>& h_est);

inline constexpr Real kErleFloorDb = -20.0;
inline constexpr Real kErleCeilDb = 100.0;
inline constexpr Real kMisalignmentFloorDb = -100.0;

}  // namespace aec::sim

#endif  // AEC_SIM_METRICS_HPP
