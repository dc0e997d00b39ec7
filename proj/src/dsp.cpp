#include "aec/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aec::dsp {

namespace {

void require_size(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw std::invalid_argument(std::string(what) + ": size mismatch");
  }
}

// Relative symmetry tolerance. Rounding drift in a healthy pipeline stays
// many orders of magnitude below this.
constexpr Real kHermitianTol = 1e-6;

}  // namespace

Spectrum forward_transform(const Fft& fft, const ExtendedBlock& block) {
  require_size(block.size(), fft.size(), "forward_transform");
  Spectrum spec(fft.size());
  for (std::size_t i = 0; i < block.size(); ++i) {
    spec[i] = Complex{block[i], 0.0};
  }
  fft.forward(spec.bins.data());
  return spec;
}

Real hermitian_asymmetry(const Spectrum& spec) {
  const std::size_t n = spec.size();
  Real max_mag = 0.0;
  for (const auto& b : spec.bins) max_mag = std::max(max_mag, std::abs(b));
  Real worst = std::abs(spec[0].imag());
  if (n % 2 == 0 && n > 0) worst = std::max(worst, std::abs(spec[n / 2].imag()));
  for (std::size_t k = 1; k < n / 2; ++k) {
    worst = std::max(worst, std::abs(spec[k] - std::conj(spec[n - k])));
  }
  return max_mag > 0.0 ? worst / max_mag : worst;
}

ExtendedBlock inverse_transform(const Fft& fft, const Spectrum& spec) {
  require_size(spec.size(), fft.size(), "inverse_transform");
  if (hermitian_asymmetry(spec) > kHermitianTol) {
    throw std::domain_error("inverse_transform: spectrum is not Hermitian");
  }
  std::vector<Complex> work = spec.bins;
  fft.inverse(work.data());
  ExtendedBlock block(fft.size());
  for (std::size_t i = 0; i < work.size(); ++i) {
    block[i] = work[i].real();
  }
  return block;
}

namespace {

// Shared body of both projections: zero a half of the time-domain image.
// Runs on the full complex signal so the projection is exact for arbitrary
// (non-Hermitian) spectra as well.
Spectrum project_time_support(const Fft& fft, const Spectrum& spec,
                              std::size_t zero_begin, std::size_t zero_end) {
  require_size(spec.size(), fft.size(), "time-support projection");
  std::vector<Complex> work = spec.bins;
  fft.inverse(work.data());
  for (std::size_t i = zero_begin; i < zero_end; ++i) {
    work[i] = Complex{0.0, 0.0};
  }
  fft.forward(work.data());
  return Spectrum(std::move(work));
}

}  // namespace

Spectrum constrain_output(const Fft& fft, const Spectrum& spec) {
  return project_time_support(fft, spec, 0, fft.size() / 2);
}

Spectrum constrain_gradient(const Fft& fft, const Spectrum& spec) {
  return project_time_support(fft, spec, fft.size() / 2, fft.size());
}

void update_power(PowerSpectrum& acc, const Spectrum& spec, Real lambda,
                  Real floor) {
  require_size(spec.size(), acc.size(), "update_power");
  for (std::size_t k = 0; k < acc.size(); ++k) {
    const Real mag2 = std::norm(spec[k]);
    acc[k] = std::max(lambda * acc[k] + (1.0 - lambda) * mag2, floor);
  }
}

void update_power(PowerSpectrum& acc, const PowerSpectrum& instant,
                  Real lambda, Real floor) {
  require_size(instant.size(), acc.size(), "update_power");
  for (std::size_t k = 0; k < acc.size(); ++k) {
    acc[k] = std::max(lambda * acc[k] + (1.0 - lambda) * instant[k], floor);
  }
}

}  // namespace aec::dsp
