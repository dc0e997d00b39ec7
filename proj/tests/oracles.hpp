// Independent reference computations for the test suites. Everything here is
// deliberately naive (dense matrices, direct sums) and shares no code with
// the library's transform or filter paths.
#ifndef AEC_TESTS_ORACLES_HPP
#define AEC_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "aec/types.hpp"

namespace oracle {

using aec::Complex;
using aec::Real;

inline constexpr Real kPi = 3.14159265358979323846;

/// Dense DFT by definition: X[k] = sum_n x[n] exp(-2*pi*i*k*n/M).
inline std::vector<Complex> dft(const std::vector<Complex>& x) {
  const std::size_t m = x.size();
  std::vector<Complex> out(m, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t n = 0; n < m; ++n) {
      const Real angle = -2.0 * kPi * static_cast<Real>(k * n) /
                         static_cast<Real>(m);
      out[k] += x[n] * Complex{std::cos(angle), std::sin(angle)};
    }
  }
  return out;
}

/// Dense inverse DFT with 1/M normalization.
inline std::vector<Complex> idft(const std::vector<Complex>& x) {
  const std::size_t m = x.size();
  std::vector<Complex> out(m, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t n = 0; n < m; ++n) {
      const Real angle =
          2.0 * kPi * static_cast<Real>(k * n) / static_cast<Real>(m);
      out[k] += x[n] * Complex{std::cos(angle), std::sin(angle)};
    }
    out[k] /= static_cast<Real>(m);
  }
  return out;
}

using Matrix = std::vector<std::vector<Complex>>;

inline Matrix dft_matrix(std::size_t m, bool inverse) {
  Matrix f(m, std::vector<Complex>(m));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      const Real sign = inverse ? 2.0 : -2.0;
      const Real angle =
          sign * kPi * static_cast<Real>(j * k) / static_cast<Real>(m);
      f[j][k] = Complex{std::cos(angle), std::sin(angle)};
      if (inverse) f[j][k] /= static_cast<Real>(m);
    }
  }
  return f;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t m = a.size();
  Matrix c(m, std::vector<Complex>(m, Complex{0.0, 0.0}));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = 0; j < m; ++j) {
        c[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return c;
}

/// Explicit constraint matrix F * diag(selector) * F^-1, where the selector
/// keeps the tail half (output constraint) or the head half (gradient
/// constraint) of the time-domain image.
inline Matrix projection_matrix(std::size_t m, bool keep_tail) {
  Matrix d(m, std::vector<Complex>(m, Complex{0.0, 0.0}));
  for (std::size_t i = 0; i < m; ++i) {
    const bool keep = keep_tail ? i >= m / 2 : i < m / 2;
    if (keep) d[i][i] = Complex{1.0, 0.0};
  }
  return matmul(matmul(dft_matrix(m, false), d), dft_matrix(m, true));
}

inline std::vector<Complex> apply(const Matrix& m,
                                  const std::vector<Complex>& x) {
  std::vector<Complex> out(x.size(), Complex{0.0, 0.0});
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      out[i] += m[i][j] * x[j];
    }
  }
  return out;
}

/// Direct time-domain convolution, x[n] == 0 for n < 0.
inline std::vector<Real> convolve(const std::vector<Real>& x,
                                  const std::vector<Real>& taps) {
  std::vector<Real> y(x.size(), 0.0);
  for (std::size_t n = 0; n < x.size(); ++n) {
    for (std::size_t i = 0; i < taps.size() && i <= n; ++i) {
      y[n] += taps[i] * x[n - i];
    }
  }
  return y;
}

// Random data helpers for the suites.

inline std::vector<Real> random_real(std::mt19937& gen, std::size_t n,
                                     Real amplitude = 1.0) {
  std::uniform_real_distribution<Real> dist(-amplitude, amplitude);
  std::vector<Real> out(n);
  for (auto& v : out) v = dist(gen);
  return out;
}

inline std::vector<Complex> random_complex(std::mt19937& gen, std::size_t n,
                                           Real amplitude = 1.0) {
  std::uniform_real_distribution<Real> dist(-amplitude, amplitude);
  std::vector<Complex> out(n);
  for (auto& v : out) v = Complex{dist(gen), dist(gen)};
  return out;
}

/// Random Hermitian-symmetric spectrum of even length (real DC/Nyquist).
inline std::vector<Complex> random_hermitian(std::mt19937& gen,
                                             std::size_t n) {
  std::uniform_real_distribution<Real> dist(-1.0, 1.0);
  std::vector<Complex> out(n, Complex{0.0, 0.0});
  out[0] = Complex{dist(gen), 0.0};
  out[n / 2] = Complex{dist(gen), 0.0};
  for (std::size_t k = 1; k < n / 2; ++k) {
    out[k] = Complex{dist(gen), dist(gen)};
    out[n - k] = std::conj(out[k]);
  }
  return out;
}

inline Real max_abs_diff(const std::vector<Complex>& a,
                         const std::vector<Complex>& b) {
  Real worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

inline Real max_abs_diff(const std::vector<Real>& a,
                         const std::vector<Real>& b) {
  Real worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

}  // namespace oracle

#endif  // AEC_TESTS_ORACLES_HPP
