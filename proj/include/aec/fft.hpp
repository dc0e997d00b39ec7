#ifndef AEC_FFT_HPP
#define AEC_FFT_HPP

#include <cstddef>
#include <vector>

#include "aec/types.hpp"

namespace aec {

/// Radix-2 complex FFT for power-of-two sizes with precomputed twiddles.
/// Forward is unnormalized; inverse carries the 1/size factor. The transform
/// is fully deterministic: no planner state, no threading inside one call.
class Fft {
 public:
  explicit Fft(std::size_t size);

  std::size_t size() const { return size_; }

  /// In-place forward DFT: X[k] = sum_n x[n] exp(-2*pi*i*k*n/size).
  void forward(Complex* data) const;

  /// In-place inverse DFT with 1/size normalization.
  void inverse(Complex* data) const;

  static bool is_power_of_two(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
  }

 private:
  void transform(Complex* data, bool invert) const;

  std::size_t size_;
  std::vector<std::size_t> bit_reverse_;
  std::vector<Complex> twiddle_;  // exp(-2*pi*i*j/size) for j < size/2
};

}  // namespace aec

#endif  // AEC_FFT_HPP
