#ifndef AEC_SIM_WAV_HPP
#define AEC_SIM_WAV_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "aec/types.hpp"

namespace aec::sim {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WavData {
  Real sample_rate = 0.0;
  std::vector<Real> samples;  // normalized to [-1, 1) by 1/32768
};

/// Reads a RIFF WAV file holding 16-bit little-endian PCM, mono.
/// Anything else raises IoError.
WavData read_wav_mono16(const std::string& path);

/// Writes samples as 16-bit PCM mono, clipping to [-1, 1).
void write_wav_mono16(const std::string& path, const std::vector<Real>& samples,
                      Real sample_rate);

}  // namespace aec::sim

#endif  // AEC_SIM_WAV_HPP
