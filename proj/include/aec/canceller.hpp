#ifndef AEC_CANCELLER_HPP
#define AEC_CANCELLER_HPP

#include <utility>
#include <variant>
#include <vector>

#include "aec/mdf.hpp"
#include "aec/rate_policy.hpp"
#include "aec/types.hpp"

namespace aec {

enum class PolicyKind { kProposed, kFixed, kNcc };

struct CancellerConfig {
  std::size_t block_size = 64;
  std::size_t partitions = 16;
  PolicyKind policy = PolicyKind::kProposed;
  Real fixed_mu = 0.25;    // rate of the no-DTD baseline
  Real power_lambda = 0.9; // smoothing of all power spectra
  Real power_floor = 1e-6;
  ProposedRateConfig proposed;
  NccRateConfig ncc;

  void validate() const;
};

struct FrameDiagnostics {
  Real eta;               // policy state scalar: eta / correlation / fixed mu
  Real mu_mean;           // mean of the applied per-bin rate vector
  Real residual_energy;   // sum of e^2 over the frame
  Real prediction_energy; // sum of y_hat^2 over the frame
  bool bootstrap_active;
};

/// Frame-in/frame-out echo canceller: MDF filter plus one rate policy.
/// Deterministic: identical input streams and config give bit-identical
/// outputs. One instance per stream, driven by one thread.
class Canceller {
 public:
  explicit Canceller(const CancellerConfig& config);

  /// Runs one N-sample frame through the loop and returns the echo-cancelled
  /// output (the error signal) with per-frame diagnostics.
  std::pair<TimeBlock, FrameDiagnostics> process_frame(const TimeBlock& far,
                                                       const TimeBlock& mic);

  /// Back to the initial state: zero weights, floored powers, policy state
  /// and bootstrap counters reinitialized.
  void reset();

  const CancellerConfig& config() const { return cfg_; }
  const MdfFilter& filter() const { return filter_; }
  std::vector<Real> export_impulse_response() const {
    return filter_.export_impulse_response();
  }

 private:
  using Policy = std::variant<ProposedRatePolicy, FixedRatePolicy,
                              NccRatePolicy>;
  static Policy make_policy(const CancellerConfig& config);

  CancellerConfig cfg_;
  MdfFilter filter_;
  Policy policy_;
  PowerSpectrum pred_power_;  // smoothed |Y_k|^2 feeding the rate policy
  PowerSpectrum err_power_;   // smoothed |E_k|^2 feeding the rate policy
};

}  // namespace aec

#endif  // AEC_CANCELLER_HPP
