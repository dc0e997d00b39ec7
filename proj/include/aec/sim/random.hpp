#ifndef AEC_SIM_RANDOM_HPP
#define AEC_SIM_RANDOM_HPP

#include <cstdint>
#include <random>

#include "aec/types.hpp"

namespace aec::sim {

/// splitmix64-style mixing so each signal component gets an independent,
/// reproducible stream from one scenario seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic Gaussian generator (Box-Muller over mt19937_64 words);
/// avoids std::normal_distribution so streams are identical across standard
/// libraries.
class GaussianRng {
 public:
  explicit GaussianRng(std::uint64_t seed) : gen_(seed) {}

  Real uniform() {  // in (0, 1]
    const std::uint64_t bits = (gen_() >> 11) + 1;  // 53 bits, never zero
    return static_cast<Real>(bits) * 0x1.0p-53;
  }

  Real gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const Real u1 = uniform();
    const Real u2 = uniform();
    const Real radius = std::sqrt(-2.0 * std::log(u1));
    const Real angle = 2.0 * 3.14159265358979323846 * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  Real spare_ = 0.0;
};

}  // namespace aec::sim

#endif  // AEC_SIM_RANDOM_HPP
