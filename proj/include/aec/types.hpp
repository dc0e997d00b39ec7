#ifndef AEC_TYPES_HPP
#define AEC_TYPES_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace aec {

using Real = double;
using Complex = std::complex<double>;

/// One frame of N time-domain samples (dimensionless amplitude).
struct TimeBlock {
  std::vector<Real> samples;

  TimeBlock() = default;
  explicit TimeBlock(std::size_t n) : samples(n, 0.0) {}
  explicit TimeBlock(std::vector<Real> s) : samples(std::move(s)) {}

  std::size_t size() const { return samples.size(); }
  Real& operator[](std::size_t i) { return samples[i]; }
  Real operator[](std::size_t i) const { return samples[i]; }
};

/// Zero-padded 2N-sample transform input. For error/desired-style blocks the
/// first N entries are zero; for far-end blocks it is a sliding 2N window.
struct ExtendedBlock {
  std::vector<Real> samples;

  ExtendedBlock() = default;
  explicit ExtendedBlock(std::size_t n2) : samples(n2, 0.0) {}
  explicit ExtendedBlock(std::vector<Real> s) : samples(std::move(s)) {}

  std::size_t size() const { return samples.size(); }
  Real& operator[](std::size_t i) { return samples[i]; }
  Real operator[](std::size_t i) const { return samples[i]; }
};

/// Complex frequency block of 2N bins.
struct Spectrum {
  std::vector<Complex> bins;

  Spectrum() = default;
  explicit Spectrum(std::size_t n2) : bins(n2, Complex{0.0, 0.0}) {}
  explicit Spectrum(std::vector<Complex> b) : bins(std::move(b)) {}

  std::size_t size() const { return bins.size(); }
  Complex& operator[](std::size_t i) { return bins[i]; }
  const Complex& operator[](std::size_t i) const { return bins[i]; }

  void clear() {
    for (auto& b : bins) b = Complex{0.0, 0.0};
  }
};

/// K spectra of 2N bins each; models a K*N-tap filter (weights, gradients,
/// smoothed gradients, far-end history).
struct PartitionedSpectra {
  std::vector<Spectrum> partitions;

  PartitionedSpectra() = default;
  PartitionedSpectra(std::size_t k, std::size_t n2)
      : partitions(k, Spectrum(n2)) {}

  std::size_t count() const { return partitions.size(); }
  std::size_t bins() const {
    return partitions.empty() ? 0 : partitions.front().size();
  }
  Spectrum& operator[](std::size_t k) { return partitions[k]; }
  const Spectrum& operator[](std::size_t k) const { return partitions[k]; }

  void clear() {
    for (auto& p : partitions) p.clear();
  }
};

/// Per-bin non-negative power estimates, kept at or above a fixed floor.
struct PowerSpectrum {
  std::vector<Real> powers;

  PowerSpectrum() = default;
  explicit PowerSpectrum(std::size_t n2, Real fill = 0.0) : powers(n2, fill) {}

  std::size_t size() const { return powers.size(); }
  Real& operator[](std::size_t i) { return powers[i]; }
  Real operator[](std::size_t i) const { return powers[i]; }

  Real sum() const {
    Real s = 0.0;
    for (Real p : powers) s += p;
    return s;
  }
};

}  // namespace aec

#endif  // AEC_TYPES_HPP
