#include "aec/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace aec {

Fft::Fft(std::size_t size) : size_(size) {
  if (!is_power_of_two(size_)) {
    throw std::invalid_argument("Fft: size must be a power of two");
  }
  bit_reverse_.resize(size_);
  std::size_t log2n = 0;
  while ((std::size_t{1} << log2n) < size_) ++log2n;
  for (std::size_t i = 0; i < size_; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < log2n; ++b) {
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (log2n - 1 - b);
    }
    bit_reverse_[i] = r;
  }
  twiddle_.resize(size_ / 2);
  for (std::size_t j = 0; j < size_ / 2; ++j) {
    const double angle =
        -2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(size_);
    twiddle_[j] = Complex{std::cos(angle), std::sin(angle)};
  }
}

void Fft::transform(Complex* data, bool invert) const {
  for (std::size_t i = 0; i < size_; ++i) {
    const std::size_t j = bit_reverse_[i];
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= size_; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t step = size_ / len;
    for (std::size_t start = 0; start < size_; start += len) {
      for (std::size_t j = 0; j < half; ++j) {
        Complex w = twiddle_[j * step];
        if (invert) w = std::conj(w);
        const Complex odd = data[start + j + half] * w;
        const Complex even = data[start + j];
        data[start + j] = even + odd;
        data[start + j + half] = even - odd;
      }
    }
  }
  if (invert) {
    const Real scale = 1.0 / static_cast<Real>(size_);
    for (std::size_t i = 0; i < size_; ++i) data[i] *= scale;
  }
}

void Fft::forward(Complex* data) const { transform(data, false); }

void Fft::inverse(Complex* data) const { transform(data, true); }

}  // namespace aec
