#ifndef AEC_MDF_HPP
#define AEC_MDF_HPP

#include <cstdint>
#include <vector>

#include "aec/fft.hpp"
#include "aec/types.hpp"

namespace aec {

/// Multidelay block frequency-domain adaptive filter: a K*N-tap filter held
/// as K partitions of 2N bins, adapted with normalized frequency-domain LMS
/// under per-partition time-support constraints. One instance per stream;
/// drive it with ingest -> predict -> form_error -> gradient -> update.
class MdfFilter {
 public:
  MdfFilter(std::size_t block_size, std::size_t partitions, Real lambda = 0.9,
            Real power_floor = 1e-6);

  /// Shift the far-end history one partition, insert the transform of the
  /// current 2N window, and refresh the normalization power.
  void ingest_far_end(const TimeBlock& far);

  struct Prediction {
    TimeBlock y_hat;      // last N time samples of the constrained output
    PowerSpectrum power;  // per-bin |Y_k|^2 of the constrained spectrum
  };
  /// Overlap-save echo estimate from the current history and weights.
  Prediction predict_echo() const;

  struct ErrorSignal {
    TimeBlock e;
    Spectrum spectrum;    // transform of the zero-prefixed error block
    PowerSpectrum power;  // per-bin |E_k|^2
  };
  ErrorSignal form_error(const TimeBlock& desired,
                         const TimeBlock& y_hat) const;

  /// Normalized stochastic gradient conj(X_k)*E / phi_xx, kept for the rate
  /// policy until the next frame.
  void compute_gradient(const Spectrum& err_spectrum);

  /// weights += constrain(mu .* gradient) per partition; advances the frame
  /// counter. mu holds one rate per bin, each in [0, 1].
  void apply_update(const std::vector<Real>& mu);

  /// Time-domain taps, partition k contributing taps k*N .. k*N+N-1.
  std::vector<Real> export_impulse_response() const;

  /// Load taps (up to K*N, zero-padded) as constrained weight spectra.
  void import_impulse_response(const std::vector<Real>& taps);

  void reset();

  std::size_t block_size() const { return block_; }
  std::size_t partitions() const { return parts_; }
  std::uint64_t frame_index() const { return frame_; }
  std::uint64_t ingest_count() const { return ingests_; }
  const PartitionedSpectra& far_history() const { return far_history_; }
  const PartitionedSpectra& weights() const { return weights_; }
  const PartitionedSpectra& last_gradient() const { return gradient_; }
  const PowerSpectrum& phi_xx() const { return phi_; }
  const TimeBlock& last_far_block() const { return last_far_; }
  const Fft& fft() const { return fft_; }
  Real power_floor() const { return floor_; }

 private:
  std::size_t block_;
  std::size_t parts_;
  Real lambda_;
  Real floor_;
  Fft fft_;
  std::uint64_t frame_ = 0;
  std::uint64_t ingests_ = 0;
  PartitionedSpectra far_history_;
  PartitionedSpectra weights_;
  PartitionedSpectra gradient_;
  PowerSpectrum phi_;
  TimeBlock last_far_;
};

}  // namespace aec

#endif  // AEC_MDF_HPP
