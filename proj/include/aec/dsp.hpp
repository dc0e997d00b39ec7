#ifndef AEC_DSP_HPP
#define AEC_DSP_HPP

#include "aec/fft.hpp"
#include "aec/types.hpp"

namespace aec::dsp {

/// Unnormalized DFT of a 2N-sample extended block.
Spectrum forward_transform(const Fft& fft, const ExtendedBlock& block);

/// Inverse DFT (1/2N normalization) of a Hermitian-symmetric spectrum back to
/// a real extended block. Throws std::domain_error when the input is
/// asymmetric beyond tolerance, which signals upstream corruption.
ExtendedBlock inverse_transform(const Fft& fft, const Spectrum& spec);

/// Projection enforcing zero time support on the first N samples
/// (keeps the output half of an overlap-save block). Idempotent.
Spectrum constrain_output(const Fft& fft, const Spectrum& spec);

/// Complementary projection: zero time support on the last N samples
/// (keeps the causal half of a filter partition). Idempotent.
Spectrum constrain_gradient(const Fft& fft, const Spectrum& spec);

/// Exponential power smoothing, per bin: p = lambda*p + (1-lambda)*|s|^2,
/// floored at `floor` afterwards.
void update_power(PowerSpectrum& acc, const Spectrum& spec, Real lambda,
                  Real floor);

/// Same recursion driven by precomputed per-bin squared magnitudes.
void update_power(PowerSpectrum& acc, const PowerSpectrum& instant,
                  Real lambda, Real floor);

/// Max deviation from Hermitian symmetry, relative to the largest bin.
Real hermitian_asymmetry(const Spectrum& spec);

}  // namespace aec::dsp

#endif  // AEC_DSP_HPP
