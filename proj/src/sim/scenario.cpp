#include "aec/sim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aec/fft.hpp"
#include "aec/kernels.hpp"
#include "aec/sim/random.hpp"

namespace aec::sim {

namespace {

Real db_to_power(Real db) { return std::pow(10.0, db / 10.0); }

Real energy(const std::vector<Real>& v) {
  Real e = 0.0;
  for (Real s : v) e += s * s;
  return e;
}

std::vector<Real> white_noise(std::uint64_t seed, std::size_t n, Real sigma) {
  GaussianRng rng(seed);
  std::vector<Real> out(n);
  for (auto& s : out) s = sigma * rng.gaussian();
  return out;
}

std::vector<Real> from_file(const std::vector<Real>& file, std::size_t n) {
  std::vector<Real> out(n, 0.0);
  std::copy_n(file.begin(), std::min(n, file.size()), out.begin());
  return out;
}

}  // namespace

void ScenarioConfig::validate() const {
  if (!(sample_rate > 0.0) || !(duration_s > 0.0)) {
    throw std::invalid_argument("scenario: bad sample rate or duration");
  }
  if (path_change_enabled() && path_change_at_s >= duration_s) {
    throw std::invalid_argument(
        "scenario: path change must happen before the end of the run");
  }
  if (!Fft::is_power_of_two(block_size) || partitions == 0) {
    throw std::invalid_argument("scenario: bad block size or partition count");
  }
  const std::size_t modeled = block_size * partitions;
  const std::size_t rir_len =
      std::max({impulse_length, impulse_response_a.size(),
                impulse_response_b.size()});
  if (rir_len > modeled) {
    throw std::invalid_argument(
        "scenario: impulse response longer than the modeled filter");
  }
  if (far_source == SourceKind::kBursts) {
    throw std::invalid_argument("scenario: far source cannot be bursts");
  }
  if (near_source == SourceKind::kWhiteNoise) {
    throw std::invalid_argument(
        "scenario: near source is bursts or a file (noise is separate)");
  }
  if (far_source == SourceKind::kFile && far_file.empty()) {
    throw std::invalid_argument("scenario: far file source has no samples");
  }
  if (near_source == SourceKind::kFile && std::isfinite(nfr_db) &&
      near_file.empty()) {
    throw std::invalid_argument("scenario: near file source has no samples");
  }
  if (!(burst_period_s > 0.0)) {
    throw std::invalid_argument("scenario: burst period must be positive");
  }
}

std::vector<Real> gen_impulse_response(std::uint64_t seed, std::size_t length,
                                       Real decay_ms, Real sample_rate) {
  if (length == 0) {
    throw std::invalid_argument("gen_impulse_response: zero length");
  }
  const Real decay_samples =
      std::max(decay_ms * sample_rate / 1000.0, Real{1e-9});
  GaussianRng rng(seed);
  std::vector<Real> taps(length);
  for (std::size_t i = 0; i < length; ++i) {
    taps[i] = rng.gaussian() *
              std::exp(-static_cast<Real>(i) / decay_samples);
  }
  const Real norm = std::sqrt(energy(taps));
  if (norm > 0.0) {
    for (auto& t : taps) t /= norm;
  }
  return taps;
}

Synthesis synthesize(const ScenarioConfig& config) {
  config.validate();

  Synthesis out;
  const std::size_t total = static_cast<std::size_t>(
      std::llround(config.duration_s * config.sample_rate));

  out.rir_a = config.impulse_response_a.empty()
                  ? gen_impulse_response(mix_seed(config.seed, 10),
                                         config.impulse_length,
                                         config.decay_ms, config.sample_rate)
                  : config.impulse_response_a;
  out.rir_b = config.impulse_response_b.empty()
                  ? gen_impulse_response(mix_seed(config.seed, 11),
                                         config.impulse_length,
                                         config.decay_ms, config.sample_rate)
                  : config.impulse_response_b;
  if (!config.path_change_enabled()) {
    out.rir_b = out.rir_a;
  }

  out.far = config.far_source == SourceKind::kFile
                ? from_file(config.far_file, total)
                : white_noise(mix_seed(config.seed, 1), total,
                              config.far_level);

  out.switch_sample =
      config.path_change_enabled()
          ? static_cast<std::size_t>(
                std::llround(config.path_change_at_s * config.sample_rate))
          : total;
  out.echo = kernels::convolve_switching(out.far, out.rir_a, out.rir_b,
                                         out.switch_sample);
  const Real echo_energy = energy(out.echo);

  // Near-end speech bursts, scaled so the full-file speech-to-echo power
  // ratio hits nfr_db.
  out.near_speech.assign(total, 0.0);
  if (std::isfinite(config.nfr_db)) {
    if (config.near_source == SourceKind::kFile) {
      out.near_speech = from_file(config.near_file, total);
    } else {
      GaussianRng rng(mix_seed(config.seed, 2));
      const std::size_t period = static_cast<std::size_t>(
          std::llround(config.burst_period_s * config.sample_rate));
      const std::size_t start = static_cast<std::size_t>(
          std::llround(std::max(config.burst_start_s, 0.0) *
                       config.sample_rate));
      for (std::size_t n = 0; n < total; ++n) {
        const Real g = rng.gaussian();  // keep the stream in lockstep
        const bool on =
            n >= start && period > 0 && ((n - start) / period) % 2 == 0;
        if (on) out.near_speech[n] = g;
      }
    }
    const Real raw = energy(out.near_speech);
    if (raw > 0.0 && echo_energy > 0.0) {
      const Real scale =
          std::sqrt(db_to_power(config.nfr_db) * echo_energy / raw);
      for (auto& s : out.near_speech) s *= scale;
    }
  }

  out.near = out.near_speech;
  if (std::isfinite(config.noise_db) && total > 0 && echo_energy > 0.0) {
    const Real sigma = std::sqrt(db_to_power(config.noise_db) * echo_energy /
                                 static_cast<Real>(total));
    GaussianRng rng(mix_seed(config.seed, 3));
    for (auto& s : out.near) s += sigma * rng.gaussian();
  }

  out.mic.resize(total);
  for (std::size_t n = 0; n < total; ++n) {
    out.mic[n] = out.echo[n] + out.near[n];
  }
  return out;
}

}  // namespace aec::sim
