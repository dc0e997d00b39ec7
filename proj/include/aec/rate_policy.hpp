#ifndef AEC_RATE_POLICY_HPP
#define AEC_RATE_POLICY_HPP

#include <cstdint>
#include <vector>

#include "aec/types.hpp"

namespace aec {

/// Constants of the closed-loop gradient-adaptive rate policy.
struct ProposedRateConfig {
  Real rho = 1.0;         // eta adaptation step
  Real alpha = 0.9;       // gradient smoothing
  Real mu_max = 0.75;     // per-bin rate ceiling
  Real bootstrap_mu = 0.25;
  Real eta_init = 0.1;
  Real eta_min = 1e-4;
  Real eta_max = 1.0;
  Real activity_threshold = 1e-5;  // |x| above this counts as active far end
  Real gradient_guard = 1e-6;      // skip eta update below this denominator

  void validate() const;
};

/// Closed-loop learning rate: per bin min(eta * |Y_k|^2 / |E_k|^2, mu_max),
/// with eta driven multiplicatively by the alignment between the current
/// gradient and its smoothed history. Never consults a double-talk decision.
/// Until twice the filter length of active far-end samples has been seen,
/// a fixed bootstrap rate is produced instead.
class ProposedRatePolicy {
 public:
  ProposedRatePolicy(std::size_t block_size, std::size_t partitions,
                     const ProposedRateConfig& config = {});

  /// Counts active far-end samples toward the end of the bootstrap phase.
  void observe_far(const TimeBlock& far);

  bool bootstrap_active() const { return active_samples_ < bootstrap_span_; }

  /// Per-bin rate vector from smoothed prediction/error power spectra
  /// (entrywise floored upstream).
  std::vector<Real> compute_mu(const PowerSpectrum& pred_power,
                               const PowerSpectrum& err_power) const;

  /// Multiplicative eta step from the gradient direction, then gradient
  /// smoothing. pred_power_sum / err_power_sum form the confidence ratio,
  /// clamped at 1.
  void update_eta(const PartitionedSpectra& gradient, Real pred_power_sum,
                  Real err_power_sum);

  /// psi = alpha * psi + gradient.
  void smooth_gradient(const PartitionedSpectra& gradient);

  void reset();

  Real eta() const { return eta_; }
  const PartitionedSpectra& psi() const { return psi_; }
  std::uint64_t active_samples() const { return active_samples_; }
  std::uint64_t bootstrap_span() const { return bootstrap_span_; }
  const ProposedRateConfig& config() const { return cfg_; }

 private:
  ProposedRateConfig cfg_;
  std::size_t bins_;
  Real eta_;
  PartitionedSpectra psi_;
  std::uint64_t active_samples_ = 0;
  std::uint64_t bootstrap_span_;
};

/// Constants of the normalized cross-correlation gate.
struct NccRateConfig {
  Real threshold = 0.35;
  Real mu_on = 0.25;
  Real window = 0.95;  // per-frame smoothing of the correlation statistics
  std::size_t hangover_frames = 8;
  Real regularizer = 1e-6;
  Real activity_threshold = 1e-5;

  void validate() const;
};

/// Double-talk gate: freezes adaptation whenever the normalized correlation
/// between the echo estimate and the microphone drops below the threshold.
/// The statistic needs a partially converged filter to mean anything, so the
/// gate stays open at the fixed rate for the same warm-up span the proposed
/// policy uses (twice the filter length of active far-end samples).
class NccRatePolicy {
 public:
  NccRatePolicy(std::size_t block_size, std::size_t partitions,
                const NccRateConfig& config = {});

  void observe_far(const TimeBlock& far);

  bool warmup_active() const { return active_samples_ < warmup_span_; }

  /// Updates the running correlation statistics with the current echo
  /// estimate and microphone blocks, then gates the rate.
  std::vector<Real> compute_mu(const TimeBlock& y_hat, const TimeBlock& mic);

  void reset();

  Real xi() const { return xi_; }
  const NccRateConfig& config() const { return cfg_; }

 private:
  NccRateConfig cfg_;
  std::size_t bins_;
  Real mean_yd_ = 0.0;
  Real mean_y2_ = 0.0;
  Real mean_d2_ = 0.0;
  Real xi_ = 0.0;
  std::size_t hang_ = 0;
  std::uint64_t active_samples_ = 0;
  std::uint64_t warmup_span_;
};

/// Constant rate on every bin (the no-DTD baseline; mu = 0 freezes the
/// filter).
class FixedRatePolicy {
 public:
  FixedRatePolicy(std::size_t block_size, Real mu);

  std::vector<Real> compute_mu() const {
    return std::vector<Real>(bins_, mu_);
  }

  Real mu() const { return mu_; }

 private:
  std::size_t bins_;
  Real mu_;
};

}  // namespace aec

#endif  // AEC_RATE_POLICY_HPP
