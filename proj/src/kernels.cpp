#include "aec/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace aec::kernels {

namespace {

// Below these element counts the loops run on the calling thread; spawning
// a team costs more than the work.
constexpr std::size_t kMinElementsElementwise = 8192;
constexpr std::size_t kMinElementsTransform = 1024;
constexpr std::size_t kMinMacsConvolution = 16384;

void check_shapes(const PartitionedSpectra& a, const PartitionedSpectra& b) {
  if (a.count() != b.count() || a.bins() != b.bins()) {
    throw std::invalid_argument("kernels: partition shape mismatch");
  }
}

inline void predict_bin(const PartitionedSpectra& far,
                        const PartitionedSpectra& weights, std::size_t j,
                        Complex& out) {
  Complex acc{0.0, 0.0};
  for (std::size_t k = 0; k < far.count(); ++k) {
    acc += far[k][j] * weights[k][j];
  }
  out = acc;
}

inline void gradient_partition(const PartitionedSpectra& far,
                               const Spectrum& err, const PowerSpectrum& phi,
                               std::size_t k, Spectrum& out) {
  for (std::size_t j = 0; j < err.size(); ++j) {
    out[j] = std::conj(far[k][j]) * err[j] / phi[j];
  }
}

// mu .* grad[k], inverse transform, zero the last N samples, transform back,
// accumulate into weights[k].
inline void update_partition(const Fft& fft, Spectrum& weights_k,
                             const Spectrum& grad_k,
                             const std::vector<Real>& mu) {
  const std::size_t n2 = fft.size();
  std::vector<Complex> scratch(n2);
  for (std::size_t j = 0; j < n2; ++j) {
    scratch[j] = mu[j] * grad_k[j];
  }
  fft.inverse(scratch.data());
  for (std::size_t i = n2 / 2; i < n2; ++i) scratch[i] = Complex{0.0, 0.0};
  fft.forward(scratch.data());
  for (std::size_t j = 0; j < n2; ++j) {
    weights_k[j] += scratch[j];
  }
}

inline void export_partition(const Fft& fft, const Spectrum& weights_k,
                             Real* taps_out) {
  const std::size_t n2 = fft.size();
  std::vector<Complex> scratch(weights_k.bins);
  fft.inverse(scratch.data());
  for (std::size_t i = 0; i < n2 / 2; ++i) {
    taps_out[i] = scratch[i].real();
  }
}

inline Real convolve_sample(const std::vector<Real>& x,
                            const std::vector<Real>& taps, std::size_t n) {
  const std::size_t len = std::min(taps.size(), n + 1);
  Real acc = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    acc += taps[i] * x[n - i];
  }
  return acc;
}

}  // namespace

void predict_spectrum(const PartitionedSpectra& far,
                      const PartitionedSpectra& weights, Spectrum& out) {
  check_shapes(far, weights);
  const std::size_t bins = far.bins();
  const std::size_t work = bins * far.count();
#ifdef _OPENMP
#pragma omp parallel for if (work >= kMinElementsElementwise)
#endif
  for (std::size_t j = 0; j < bins; ++j) {
    predict_bin(far, weights, j, out[j]);
  }
  (void)work;
}

void gradient(const PartitionedSpectra& far, const Spectrum& err,
              const PowerSpectrum& phi, PartitionedSpectra& grad) {
  check_shapes(far, grad);
  const std::size_t work = far.count() * far.bins();
#ifdef _OPENMP
#pragma omp parallel for if (work >= kMinElementsElementwise)
#endif
  for (std::size_t k = 0; k < far.count(); ++k) {
    gradient_partition(far, err, phi, k, grad[k]);
  }
  (void)work;
}

void apply_constrained_update(const Fft& fft, PartitionedSpectra& weights,
                              const PartitionedSpectra& grad,
                              const std::vector<Real>& mu) {
  check_shapes(weights, grad);
  const std::size_t work = weights.count() * fft.size();
#ifdef _OPENMP
#pragma omp parallel for if (work >= kMinElementsTransform)
#endif
  for (std::size_t k = 0; k < weights.count(); ++k) {
    update_partition(fft, weights[k], grad[k], mu);
  }
  (void)work;
}

std::vector<Real> export_taps(const Fft& fft,
                              const PartitionedSpectra& weights) {
  const std::size_t n = fft.size() / 2;
  std::vector<Real> taps(weights.count() * n);
  const std::size_t work = weights.count() * fft.size();
#ifdef _OPENMP
#pragma omp parallel for if (work >= kMinElementsTransform)
#endif
  for (std::size_t k = 0; k < weights.count(); ++k) {
    export_partition(fft, weights[k], taps.data() + k * n);
  }
  (void)work;
  return taps;
}

std::vector<Real> convolve_switching(const std::vector<Real>& x,
                                     const std::vector<Real>& taps_a,
                                     const std::vector<Real>& taps_b,
                                     std::size_t switch_at) {
  std::vector<Real> y(x.size(), 0.0);
  const std::size_t work = x.size() * std::max(taps_a.size(), taps_b.size());
#ifdef _OPENMP
#pragma omp parallel for if (work >= kMinMacsConvolution)
#endif
  for (std::size_t n = 0; n < x.size(); ++n) {
    y[n] = convolve_sample(x, n < switch_at ? taps_a : taps_b, n);
  }
  (void)work;
  return y;
}

namespace ref {

void predict_spectrum(const PartitionedSpectra& far,
                      const PartitionedSpectra& weights, Spectrum& out) {
  check_shapes(far, weights);
  for (std::size_t j = 0; j < far.bins(); ++j) {
    predict_bin(far, weights, j, out[j]);
  }
}

void gradient(const PartitionedSpectra& far, const Spectrum& err,
              const PowerSpectrum& phi, PartitionedSpectra& grad) {
  check_shapes(far, grad);
  for (std::size_t k = 0; k < far.count(); ++k) {
    gradient_partition(far, err, phi, k, grad[k]);
  }
}

void apply_constrained_update(const Fft& fft, PartitionedSpectra& weights,
                              const PartitionedSpectra& grad,
                              const std::vector<Real>& mu) {
  check_shapes(weights, grad);
  for (std::size_t k = 0; k < weights.count(); ++k) {
    update_partition(fft, weights[k], grad[k], mu);
  }
}

std::vector<Real> export_taps(const Fft& fft,
                              const PartitionedSpectra& weights) {
  const std::size_t n = fft.size() / 2;
  std::vector<Real> taps(weights.count() * n);
  for (std::size_t k = 0; k < weights.count(); ++k) {
    export_partition(fft, weights[k], taps.data() + k * n);
  }
  return taps;
}

std::vector<Real> convolve_switching(const std::vector<Real>& x,
                                     const std::vector<Real>& taps_a,
                                     const std::vector<Real>& taps_b,
                                     std::size_t switch_at) {
  std::vector<Real> y(x.size(), 0.0);
  for (std::size_t n = 0; n < x.size(); ++n) {
    y[n] = convolve_sample(x, n < switch_at ? taps_a : taps_b, n);
  }
  return y;
}

}  // namespace ref

}  // namespace aec::kernels
