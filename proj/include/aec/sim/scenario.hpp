#ifndef AEC_SIM_SCENARIO_HPP
#define AEC_SIM_SCENARIO_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "aec/types.hpp"

namespace aec::sim {

inline constexpr Real kOffDb = -std::numeric_limits<Real>::infinity();

enum class SourceKind { kWhiteNoise, kBursts, kFile };

/// Description of one synthetic echo scenario: room responses, double-talk
/// structure and levels, durations, seed.
struct ScenarioConfig {
  Real sample_rate = 8000.0;
  Real duration_s = 32.0;
  Real path_change_at_s = 16.0;  // <= 0 or non-finite: path never changes

  // Resolved from the seed when left empty.
  std::vector<Real> impulse_response_a;
  std::vector<Real> impulse_response_b;
  std::size_t impulse_length = 1024;
  Real decay_ms = 30.0;

  Real nfr_db = kOffDb;    // near-end speech power relative to echo power
  Real noise_db = kOffDb;  // stationary noise power relative to echo power

  SourceKind far_source = SourceKind::kWhiteNoise;
  SourceKind near_source = SourceKind::kBursts;
  std::vector<Real> far_file;   // samples when far_source == kFile
  std::vector<Real> near_file;  // samples when near_source == kFile
  Real burst_period_s = 1.0;  // near-end bursts alternate on/off at this rate
  Real burst_start_s = 4.0;   // quiet lead-in before the first burst
  Real far_level = 0.25;      // white-noise far-end standard deviation

  std::uint64_t seed = 1;
  std::size_t block_size = 64;
  std::size_t partitions = 16;

  bool path_change_enabled() const {
    return std::isfinite(path_change_at_s) && path_change_at_s > 0.0;
  }

  void validate() const;
};

/// Unit-energy synthetic room impulse response: white Gaussian taps under an
/// exponential decay envelope. Deterministic in the seed.
std::vector<Real> gen_impulse_response(std::uint64_t seed, std::size_t length,
                                       Real decay_ms, Real sample_rate);

/// All synthesized streams plus the ground truth the harness needs.
struct Synthesis {
  std::vector<Real> far;
  std::vector<Real> mic;
  std::vector<Real> echo;         // far convolved with the active response
  std::vector<Real> near;         // scaled speech bursts plus noise
  std::vector<Real> near_speech;  // burst component alone (double-talk truth)
  std::vector<Real> rir_a;
  std::vector<Real> rir_b;
  std::size_t switch_sample = 0;  // == far.size() when the path never changes
};

Synthesis synthesize(const ScenarioConfig& config);

}  // namespace aec::sim

#endif  // AEC_SIM_SCENARIO_HPP
