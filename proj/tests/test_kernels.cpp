#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "aec/fft.hpp"
#include "aec/kernels.hpp"
#include "oracles.hpp"

using namespace aec;

namespace {

// Shapes on both sides of the parallel-dispatch thresholds.
struct Shape {
  std::size_t block;
  std::size_t partitions;
};
const Shape kShapes[] = {{4, 2}, {64, 16}, {256, 64}};

PartitionedSpectra random_partitions(std::mt19937& gen, std::size_t k,
                                     std::size_t bins) {
  PartitionedSpectra out(k, bins);
  for (std::size_t p = 0; p < k; ++p) {
    out[p] = Spectrum(oracle::random_complex(gen, bins));
  }
  return out;
}

PowerSpectrum random_power(std::mt19937& gen, std::size_t bins) {
  std::uniform_real_distribution<Real> dist(0.1, 2.0);
  PowerSpectrum out(bins);
  for (auto& p : out.powers) p = dist(gen);
  return out;
}

bool identical(const Spectrum& a, const Spectrum& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] != b[j]) return false;
  }
  return true;
}

bool identical(const PartitionedSpectra& a, const PartitionedSpectra& b) {
  for (std::size_t k = 0; k < a.count(); ++k) {
    if (!identical(a[k], b[k])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parallel prediction is bitwise identical to the reference") {
  std::mt19937 gen(101);
  for (const Shape& s : kShapes) {
    const std::size_t bins = 2 * s.block;
    const PartitionedSpectra far = random_partitions(gen, s.partitions, bins);
    const PartitionedSpectra weights =
        random_partitions(gen, s.partitions, bins);
    Spectrum got(bins), expected(bins);
    kernels::predict_spectrum(far, weights, got);
    kernels::ref::predict_spectrum(far, weights, expected);
    CHECK(identical(got, expected));
  }
}

TEST_CASE("parallel gradient is bitwise identical to the reference") {
  std::mt19937 gen(103);
  for (const Shape& s : kShapes) {
    const std::size_t bins = 2 * s.block;
    const PartitionedSpectra far = random_partitions(gen, s.partitions, bins);
    const Spectrum err = Spectrum(oracle::random_complex(gen, bins));
    const PowerSpectrum phi = random_power(gen, bins);
    PartitionedSpectra got(s.partitions, bins), expected(s.partitions, bins);
    kernels::gradient(far, err, phi, got);
    kernels::ref::gradient(far, err, phi, expected);
    CHECK(identical(got, expected));
  }
}

TEST_CASE("parallel constrained update is bitwise identical to the reference") {
  std::mt19937 gen(107);
  for (const Shape& s : kShapes) {
    const std::size_t bins = 2 * s.block;
    Fft fft(bins);
    PartitionedSpectra got = random_partitions(gen, s.partitions, bins);
    PartitionedSpectra expected = got;
    const PartitionedSpectra grad =
        random_partitions(gen, s.partitions, bins);
    std::uniform_real_distribution<Real> dist(0.0, 1.0);
    std::vector<Real> mu(bins);
    for (auto& m : mu) m = dist(gen);
    kernels::apply_constrained_update(fft, got, grad, mu);
    kernels::ref::apply_constrained_update(fft, expected, grad, mu);
    CHECK(identical(got, expected));
  }
}

TEST_CASE("parallel tap export is bitwise identical to the reference") {
  std::mt19937 gen(109);
  for (const Shape& s : kShapes) {
    const std::size_t bins = 2 * s.block;
    Fft fft(bins);
    const PartitionedSpectra weights =
        random_partitions(gen, s.partitions, bins);
    const std::vector<Real> got = kernels::export_taps(fft, weights);
    const std::vector<Real> expected = kernels::ref::export_taps(fft, weights);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i] == expected[i]);
    }
  }
}

TEST_CASE("parallel switching convolution is bitwise identical") {
  std::mt19937 gen(113);
  for (std::size_t n : {std::size_t{100}, std::size_t{5000}}) {
    const std::vector<Real> x = oracle::random_real(gen, n);
    const std::vector<Real> a = oracle::random_real(gen, 64);
    const std::vector<Real> b = oracle::random_real(gen, 64);
    const std::vector<Real> got = kernels::convolve_switching(x, a, b, n / 2);
    const std::vector<Real> expected =
        kernels::ref::convolve_switching(x, a, b, n / 2);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(got[i] == expected[i]);
    }
  }
}

TEST_CASE("switching convolution matches the direct oracle per segment") {
  std::mt19937 gen(127);
  const std::size_t n = 400;
  const std::size_t switch_at = 250;
  const std::vector<Real> x = oracle::random_real(gen, n);
  const std::vector<Real> a = oracle::random_real(gen, 32);
  const std::vector<Real> b = oracle::random_real(gen, 32);
  const std::vector<Real> got = kernels::convolve_switching(x, a, b, switch_at);
  const std::vector<Real> with_a = oracle::convolve(x, a);
  const std::vector<Real> with_b = oracle::convolve(x, b);
  for (std::size_t i = 0; i < n; ++i) {
    const Real expected = i < switch_at ? with_a[i] : with_b[i];
    CHECK(got[i] == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("kernels reject mismatched shapes") {
  PartitionedSpectra a(2, 8), b(3, 8);
  Spectrum out(8);
  CHECK_THROWS_AS(kernels::predict_spectrum(a, b, out), std::invalid_argument);
}
