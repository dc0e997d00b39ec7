#include "aec/mdf.hpp"

#include <algorithm>
#include <stdexcept>

#include "aec/dsp.hpp"
#include "aec/kernels.hpp"

namespace aec {

namespace {

void require_block(const TimeBlock& b, std::size_t n, const char* what) {
  if (b.size() != n) {
    throw std::invalid_argument(std::string(what) + ": block size mismatch");
  }
}

}  // namespace

MdfFilter::MdfFilter(std::size_t block_size, std::size_t partitions,
                     Real lambda, Real power_floor)
    : block_(block_size),
      parts_(partitions),
      lambda_(lambda),
      floor_(power_floor),
      fft_(2 * block_size),
      far_history_(partitions, 2 * block_size),
      weights_(partitions, 2 * block_size),
      gradient_(partitions, 2 * block_size),
      phi_(2 * block_size, power_floor),
      last_far_(block_size) {
  if (!Fft::is_power_of_two(block_)) {
    throw std::invalid_argument("MdfFilter: block size must be a power of two");
  }
  if (parts_ == 0) {
    throw std::invalid_argument("MdfFilter: need at least one partition");
  }
  if (!(lambda_ > 0.0 && lambda_ < 1.0) || !(floor_ > 0.0)) {
    throw std::invalid_argument("MdfFilter: bad smoothing/floor constants");
  }
}

void MdfFilter::ingest_far_end(const TimeBlock& far) {
  require_block(far, block_, "ingest_far_end");

  // Partition k takes what partition k-1 held one frame ago.
  std::rotate(far_history_.partitions.rbegin(),
              far_history_.partitions.rbegin() + 1,
              far_history_.partitions.rend());

  ExtendedBlock window(2 * block_);
  std::copy(last_far_.samples.begin(), last_far_.samples.end(),
            window.samples.begin());
  std::copy(far.samples.begin(), far.samples.end(),
            window.samples.begin() + block_);
  far_history_[0] = dsp::forward_transform(fft_, window);

  // Normalize against the total far-end power the prediction sees: the
  // per-bin power summed over the whole K-partition history (the full-filter
  // NLMS denominator). Tracking a single partition instead scales the loop
  // gain by K and the standard rates (0.25, 0.75) go unstable.
  PowerSpectrum instant(2 * block_);
  for (std::size_t k = 0; k < parts_; ++k) {
    for (std::size_t j = 0; j < instant.size(); ++j) {
      instant[j] += std::norm(far_history_[k][j]);
    }
  }
  if (ingests_ == 0) {
    // Seed from the first observation; starting the recursion at the floor
    // over-sizes the first gradients by 1/(1-lambda).
    for (std::size_t j = 0; j < instant.size(); ++j) {
      phi_[j] = std::max(instant[j], floor_);
    }
  } else {
    dsp::update_power(phi_, instant, lambda_, floor_);
  }
  last_far_ = far;
  ++ingests_;
}

MdfFilter::Prediction MdfFilter::predict_echo() const {
  if (ingests_ == 0) {
    throw std::logic_error("predict_echo: no far-end block ingested yet");
  }
  const std::size_t n2 = 2 * block_;
  Spectrum sum(n2);
  kernels::predict_spectrum(far_history_, weights_, sum);

  // Overlap-save: keep only the last N time samples, then re-transform the
  // zero-prefixed block. This equals the output-constraint projection and
  // yields the time block with one transform pair.
  std::vector<Complex> work = sum.bins;
  fft_.inverse(work.data());

  Prediction out;
  out.y_hat = TimeBlock(block_);
  for (std::size_t i = 0; i < block_; ++i) {
    out.y_hat[i] = work[block_ + i].real();
    work[i] = Complex{0.0, 0.0};
    work[block_ + i] = Complex{out.y_hat[i], 0.0};
  }
  fft_.forward(work.data());

  out.power = PowerSpectrum(n2);
  for (std::size_t j = 0; j < n2; ++j) {
    out.power[j] = std::norm(work[j]);
  }
  return out;
}

MdfFilter::ErrorSignal MdfFilter::form_error(const TimeBlock& desired,
                                             const TimeBlock& y_hat) const {
  require_block(desired, block_, "form_error");
  require_block(y_hat, block_, "form_error");

  ErrorSignal out;
  out.e = TimeBlock(block_);
  ExtendedBlock padded(2 * block_);
  for (std::size_t i = 0; i < block_; ++i) {
    out.e[i] = desired[i] - y_hat[i];
    padded[block_ + i] = out.e[i];
  }
  out.spectrum = dsp::forward_transform(fft_, padded);
  out.power = PowerSpectrum(2 * block_);
  for (std::size_t j = 0; j < out.spectrum.size(); ++j) {
    out.power[j] = std::norm(out.spectrum[j]);
  }
  return out;
}

void MdfFilter::compute_gradient(const Spectrum& err_spectrum) {
  if (err_spectrum.size() != 2 * block_) {
    throw std::invalid_argument("compute_gradient: spectrum size mismatch");
  }
  kernels::gradient(far_history_, err_spectrum, phi_, gradient_);
}

void MdfFilter::apply_update(const std::vector<Real>& mu) {
  if (mu.size() != 2 * block_) {
    throw std::invalid_argument("apply_update: rate vector size mismatch");
  }
  for (Real m : mu) {
    if (!(m >= 0.0 && m <= 1.0)) {
      throw std::invalid_argument("apply_update: rate outside [0, 1]");
    }
  }
  kernels::apply_constrained_update(fft_, weights_, gradient_, mu);
  ++frame_;
}

std::vector<Real> MdfFilter::export_impulse_response() const {
  return kernels::export_taps(fft_, weights_);
}

void MdfFilter::import_impulse_response(const std::vector<Real>& taps) {
  if (taps.size() > parts_ * block_) {
    throw std::invalid_argument(
        "import_impulse_response: more taps than the filter models");
  }
  for (std::size_t k = 0; k < parts_; ++k) {
    ExtendedBlock padded(2 * block_);
    for (std::size_t i = 0; i < block_; ++i) {
      const std::size_t t = k * block_ + i;
      padded[i] = t < taps.size() ? taps[t] : 0.0;
    }
    weights_[k] = dsp::forward_transform(fft_, padded);
  }
}

void MdfFilter::reset() {
  far_history_.clear();
  weights_.clear();
  gradient_.clear();
  std::fill(phi_.powers.begin(), phi_.powers.end(), floor_);
  std::fill(last_far_.samples.begin(), last_far_.samples.end(), 0.0);
  frame_ = 0;
  ingests_ = 0;
}

}  // namespace aec
