// Serial reference vs OpenMP kernels across filter shapes. The small shape
// (N=64, K=16) is the nominal desk-scale engine where the `if` clauses keep
// the loops on one thread; the larger shapes show the parallel payoff.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "aec/fft.hpp"
#include "aec/kernels.hpp"

using namespace aec;

namespace {

struct Fixture {
  Fft fft;
  PartitionedSpectra far;
  PartitionedSpectra weights;
  PartitionedSpectra grad;
  Spectrum err;
  PowerSpectrum phi;
  std::vector<Real> mu;

  Fixture(std::size_t block, std::size_t partitions)
      : fft(2 * block),
        far(partitions, 2 * block),
        weights(partitions, 2 * block),
        grad(partitions, 2 * block),
        err(2 * block),
        phi(2 * block),
        mu(2 * block) {
    std::mt19937 gen(99);
    std::uniform_real_distribution<Real> dist(-1.0, 1.0);
    for (auto& p : far.partitions) {
      for (auto& b : p.bins) b = Complex{dist(gen), dist(gen)};
    }
    for (auto& p : weights.partitions) {
      for (auto& b : p.bins) b = Complex{dist(gen), dist(gen)};
    }
    for (auto& p : grad.partitions) {
      for (auto& b : p.bins) b = Complex{dist(gen), dist(gen)};
    }
    for (auto& b : err.bins) b = Complex{dist(gen), dist(gen)};
    for (auto& p : phi.powers) p = 0.5 + std::abs(dist(gen));
    for (auto& m : mu) m = 0.25;
  }
};

void args_shapes(benchmark::internal::Benchmark* b) {
  b->Args({64, 16})->Args({256, 64})->Args({512, 128});
}

void bm_predict_serial(benchmark::State& state) {
  Fixture f(state.range(0), state.range(1));
  Spectrum out(f.err.size());
  for (auto _ : state) {
    kernels::ref::predict_spectrum(f.far, f.weights, out);
    benchmark::DoNotOptimize(out.bins.data());
  }
}

void bm_predict_omp(benchmark::State& state) {
  Fixture f(state.range(0), state.range(1));
  Spectrum out(f.err.size());
  for (auto _ : state) {
    kernels::predict_spectrum(f.far, f.weights, out);
    benchmark::DoNotOptimize(out.bins.data());
  }
}

void bm_gradient_serial(benchmark::State& state) {
  Fixture f(state.range(0), state.range(1));
  for (auto _ : state) {
    kernels::ref::gradient(f.far, f.err, f.phi, f.grad);
    benchmark::DoNotOptimize(f.grad.partitions.data());
  }
}

void bm_gradient_omp(benchmark::State& state) {
  Fixture f(state.range(0), state.range(1));
  for (auto _ : state) {
    kernels::gradient(f.far, f.err, f.phi, f.grad);
    benchmark::DoNotOptimize(f.grad.partitions.data());
  }
}

void bm_update_serial(benchmark::State& state) {
  Fixture f(state.range(0), state.range(1));
  for (auto _ : state) {
    kernels::ref::apply_constrained_update(f.fft, f.weights, f.grad, f.mu);
    benchmark::DoNotOptimize(f.weights.partitions.data());
  }
}

void bm_update_omp(benchmark::State& state) {
  Fixture f(state.range(0), state.range(1));
  for (auto _ : state) {
    kernels::apply_constrained_update(f.fft, f.weights, f.grad, f.mu);
    benchmark::DoNotOptimize(f.weights.partitions.data());
  }
}

void bm_export_serial(benchmark::State& state) {
  Fixture f(state.range(0), state.range(1));
  for (auto _ : state) {
    auto taps = kernels::ref::export_taps(f.fft, f.weights);
    benchmark::DoNotOptimize(taps.data());
  }
}

void bm_export_omp(benchmark::State& state) {
  Fixture f(state.range(0), state.range(1));
  for (auto _ : state) {
    auto taps = kernels::export_taps(f.fft, f.weights);
    benchmark::DoNotOptimize(taps.data());
  }
}

void bm_convolve_serial(benchmark::State& state) {
  std::mt19937 gen(7);
  std::uniform_real_distribution<Real> dist(-1.0, 1.0);
  std::vector<Real> x(static_cast<std::size_t>(state.range(0)));
  std::vector<Real> taps(1024);
  for (auto& v : x) v = dist(gen);
  for (auto& t : taps) t = dist(gen);
  for (auto _ : state) {
    auto y = kernels::ref::convolve_switching(x, taps, taps, x.size() / 2);
    benchmark::DoNotOptimize(y.data());
  }
}

void bm_convolve_omp(benchmark::State& state) {
  std::mt19937 gen(7);
  std::uniform_real_distribution<Real> dist(-1.0, 1.0);
  std::vector<Real> x(static_cast<std::size_t>(state.range(0)));
  std::vector<Real> taps(1024);
  for (auto& v : x) v = dist(gen);
  for (auto& t : taps) t = dist(gen);
  for (auto _ : state) {
    auto y = kernels::convolve_switching(x, taps, taps, x.size() / 2);
    benchmark::DoNotOptimize(y.data());
  }
}

BENCHMARK(bm_predict_serial)->Apply(args_shapes);
BENCHMARK(bm_predict_omp)->Apply(args_shapes);
BENCHMARK(bm_gradient_serial)->Apply(args_shapes);
BENCHMARK(bm_gradient_omp)->Apply(args_shapes);
BENCHMARK(bm_update_serial)->Apply(args_shapes);
BENCHMARK(bm_update_omp)->Apply(args_shapes);
BENCHMARK(bm_export_serial)->Apply(args_shapes);
BENCHMARK(bm_export_omp)->Apply(args_shapes);
BENCHMARK(bm_convolve_serial)->Arg(8000)->Arg(80000);
BENCHMARK(bm_convolve_omp)->Arg(8000)->Arg(80000);

}  // namespace

BENCHMARK_MAIN();
