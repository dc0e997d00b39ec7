#ifndef AEC_KERNELS_HPP
#define AEC_KERNELS_HPP

#include <cstddef>
#include <vector>

#include "aec/fft.hpp"
#include "aec/types.hpp"

namespace aec::kernels {

// Data-parallel inner loops of the engine. The production versions are
// OpenMP-parallel; every parallel loop writes disjoint outputs and performs
// no cross-thread reductions, so results are bitwise identical to the
// serial reference in kernels::ref for any thread count or schedule.
// Small workloads stay on the calling thread via `if` clauses.

/// out[j] = sum over partitions k of far[k][j] * weights[k][j].
void predict_spectrum(const PartitionedSpectra& far,
                      const PartitionedSpectra& weights, Spectrum& out);

/// grad[k][j] = conj(far[k][j]) * err[j] / phi[j].
void gradient(const PartitionedSpectra& far, const Spectrum& err,
              const PowerSpectrum& phi, PartitionedSpectra& grad);

/// Per partition: weights[k] += constrain_gradient(mu .* grad[k]), where the
/// constraint zeroes the last N time-domain samples (N = fft.size()/2).
void apply_constrained_update(const Fft& fft, PartitionedSpectra& weights,
                              const PartitionedSpectra& grad,
                              const std::vector<Real>& mu);

/// First N time-domain samples of each partition, concatenated: K*N taps.
std::vector<Real> export_taps(const Fft& fft,
                              const PartitionedSpectra& weights);

/// Streaming convolution with an impulse-response switch: for n < switch_at
/// the output uses taps_a, afterwards taps_b. x[n] == 0 for n < 0.
std::vector<Real> convolve_switching(const std::vector<Real>& x,
                                     const std::vector<Real>& taps_a,
                                     const std::vector<Real>& taps_b,
                                     std::size_t switch_at);

namespace ref {

// Serial reference implementations, kept for tests and the benchmark.

void predict_spectrum(const PartitionedSpectra& far,
                      const PartitionedSpectra& weights, Spectrum& out);

void gradient(const PartitionedSpectra& far, const Spectrum& err,
              const PowerSpectrum& phi, PartitionedSpectra& grad);

void apply_constrained_update(const Fft& fft, PartitionedSpectra& weights,
                              const PartitionedSpectra& grad,
                              const std::vector<Real>& mu);

std::vector<Real> export_taps(const Fft& fft,
                              const PartitionedSpectra& weights);

std::vector<Real> convolve_switching(const std::vector<Real>& x,
                                     const std::vector<Real>& taps_a,
                                     const std::vector<Real>& taps_b,
                                     std::size_t switch_at);

}  // namespace ref

}  // namespace aec::kernels

#endif  // AEC_KERNELS_HPP
