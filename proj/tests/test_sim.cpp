#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "aec/sim/metrics.hpp"
#include "aec/sim/runner.hpp"
#include "aec/sim/scenario.hpp"
#include "aec/sim/wav.hpp"
#include "oracles.hpp"

using namespace aec;
using namespace aec::sim;

namespace {

ScenarioConfig tiny_scenario() {
  ScenarioConfig s;
  s.sample_rate = 2000.0;
  s.duration_s = 2.0;
  s.path_change_at_s = -1.0;
  s.block_size = 32;
  s.partitions = 8;
  s.impulse_length = 256;
  s.burst_start_s = 0.5;
  s.seed = 42;
  return s;
}

}  // namespace

TEST_CASE("impulse responses are reproducible and unit energy") {
  const std::vector<Real> a = gen_impulse_response(7, 1024, 30.0, 8000.0);
  const std::vector<Real> b = gen_impulse_response(7, 1024, 30.0, 8000.0);
  REQUIRE(a.size() == 1024);
  CHECK(oracle::max_abs_diff(a, b) == 0.0);

  Real energy = 0.0;
  for (Real t : a) energy += t * t;
  CHECK(energy == doctest::Approx(1.0).epsilon(1e-12));

  const std::vector<Real> c = gen_impulse_response(8, 1024, 30.0, 8000.0);
  CHECK(oracle::max_abs_diff(a, c) > 0.0);
}

TEST_CASE("a vanishing decay concentrates the response energy up front") {
  const std::vector<Real> taps = gen_impulse_response(3, 1024, 0.1, 8000.0);
  Real head = 0.0, total = 0.0;
  for (std::size_t i = 0; i < taps.size(); ++i) {
    total += taps[i] * taps[i];
    if (i < 32) head += taps[i] * taps[i];
  }
  CHECK(head / total > 0.99);
}

TEST_CASE("with no near end the microphone is exactly the echo") {
  const Synthesis syn = synthesize(tiny_scenario());
  REQUIRE(syn.mic.size() == 4000);
  CHECK(oracle::max_abs_diff(syn.mic, syn.echo) == 0.0);
  for (Real v : syn.near) CHECK(v == 0.0);
}

TEST_CASE("a silent far end leaves only the near signal") {
  ScenarioConfig s = tiny_scenario();
  s.far_source = SourceKind::kFile;
  s.far_file.assign(4000, 0.0);
  s.near_source = SourceKind::kFile;
  s.near_file = {0.1, -0.2, 0.3};
  s.nfr_db = 0.0;
  const Synthesis syn = synthesize(s);
  for (Real y : syn.echo) CHECK(y == 0.0);
  CHECK(oracle::max_abs_diff(syn.mic, syn.near) == 0.0);
}

TEST_CASE("the near-end burst power matches the requested ratio") {
  ScenarioConfig s = tiny_scenario();
  s.nfr_db = 0.0;
  const Synthesis syn = synthesize(s);
  Real speech = 0.0, echo = 0.0;
  for (Real v : syn.near) speech += v * v;
  for (Real y : syn.echo) echo += y * y;
  CHECK(speech / echo == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("bursts hold off until their start and then alternate") {
  ScenarioConfig s = tiny_scenario();
  s.nfr_db = 0.0;
  s.burst_period_s = 0.25;  // 500 samples at 2 kHz
  s.burst_start_s = 0.5;
  const Synthesis syn = synthesize(s);
  for (std::size_t n = 0; n < 1000; ++n) {
    CHECK(syn.near_speech[n] == 0.0);
  }
  Real on_energy = 0.0;
  for (std::size_t n = 1000; n < 1500; ++n) {
    on_energy += syn.near_speech[n] * syn.near_speech[n];
  }
  CHECK(on_energy > 0.0);
  for (std::size_t n = 1500; n < 2000; ++n) {
    CHECK(syn.near_speech[n] == 0.0);
  }
}

TEST_CASE("the echo path switch point is honoured") {
  ScenarioConfig s = tiny_scenario();
  s.path_change_at_s = 1.0;
  const Synthesis syn = synthesize(s);
  CHECK(syn.switch_sample == 2000);
  CHECK(oracle::max_abs_diff(syn.rir_a, syn.rir_b) > 0.0);

  const ScenarioConfig fixed_path = tiny_scenario();
  const Synthesis same = synthesize(fixed_path);
  CHECK(same.switch_sample == same.far.size());
  CHECK(oracle::max_abs_diff(same.rir_a, same.rir_b) == 0.0);
}

TEST_CASE("scenario validation rejects contradictions") {
  ScenarioConfig s = tiny_scenario();
  s.path_change_at_s = 3.0;  // beyond the run
  CHECK_THROWS_AS(synthesize(s), std::invalid_argument);

  s = tiny_scenario();
  s.impulse_length = 4096;  // longer than K*N
  CHECK_THROWS_AS(synthesize(s), std::invalid_argument);

  s = tiny_scenario();
  s.far_source = SourceKind::kFile;  // no samples supplied
  CHECK_THROWS_AS(synthesize(s), std::invalid_argument);
}

TEST_CASE("erle handles the trivial fixtures") {
  std::mt19937 gen(51);
  const std::vector<Real> y = oracle::random_real(gen, 256);

  const std::vector<Real> zeros(256, 0.0);
  for (Real e : erle_series(y, zeros, 32, 64)) {
    CHECK(e == 0.0);
  }

  for (Real e : erle_series(y, y, 32, 64)) {
    CHECK(e == kErleCeilDb);
  }

  std::vector<Real> ninety(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) ninety[i] = 0.9 * y[i];
  for (Real e : erle_series(y, ninety, 32, 64)) {
    CHECK(e == doctest::Approx(20.0).epsilon(1e-9));
  }
}

TEST_CASE("misalignment handles the trivial fixtures") {
  std::mt19937 gen(52);
  std::vector<Real> h = oracle::random_real(gen, 64);

  CHECK(misalignment_db(h, std::vector<Real>(64, 0.0)) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(misalignment_db(h, h) == kMisalignmentFloorDb);

  std::vector<Real> half(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) half[i] = 0.5 * h[i];
  CHECK(misalignment_db(h, half) ==
        doctest::Approx(10.0 * std::log10(0.25)).epsilon(1e-9));
}

TEST_CASE("a frozen zero filter yields zero ERLE throughout") {
  CancellerConfig canceller;
  canceller.policy = PolicyKind::kFixed;
  canceller.fixed_mu = 0.0;
  const RunResult result = run_scenario(tiny_scenario(), canceller);
  REQUIRE(!result.rows.empty());
  for (const MetricsRow& row : result.rows) {
    CHECK(std::abs(row.erle_db) < 1e-9);
    CHECK(row.misalignment_db == doctest::Approx(0.0).epsilon(1e-12));
  }
  CHECK(std::abs(result.summary.erle_ss_db) < 1e-9);
}

TEST_CASE("harness ERLE agrees with an independent reconvolution") {
  ScenarioConfig s = tiny_scenario();
  s.path_change_at_s = 1.0;
  const Synthesis syn = synthesize(s);

  CancellerConfig canceller;
  canceller.policy = PolicyKind::kProposed;
  const RunResult result = run_synthesized(syn, s, canceller);

  // Rebuild the clean echo by direct convolution, then reapply the ERLE
  // definition to the recovered echo estimate.
  const std::vector<Real> with_a = oracle::convolve(syn.far, syn.rir_a);
  const std::vector<Real> with_b = oracle::convolve(syn.far, syn.rir_b);
  std::vector<Real> echo(syn.far.size());
  for (std::size_t n = 0; n < echo.size(); ++n) {
    echo[n] = n < syn.switch_sample ? with_a[n] : with_b[n];
  }
  CHECK(oracle::max_abs_diff(echo, syn.echo) < 1e-12);

  // The estimate stream is mic - out; reconstruct it by replaying the engine.
  CancellerConfig cfg = canceller;
  cfg.block_size = s.block_size;
  cfg.partitions = s.partitions;
  Canceller engine(cfg);
  const std::size_t block = s.block_size;
  std::vector<Real> estimate(result.rows.size() * block);
  TimeBlock far(block), mic(block);
  for (std::size_t f = 0; f < result.rows.size(); ++f) {
    std::copy_n(syn.far.begin() + f * block, block, far.samples.begin());
    std::copy_n(syn.mic.begin() + f * block, block, mic.samples.begin());
    auto [out, diag] = engine.process_frame(far, mic);
    for (std::size_t i = 0; i < block; ++i) {
      estimate[f * block + i] = mic[i] - out[i];
    }
  }
  echo.resize(estimate.size());
  const std::vector<Real> expected = erle_series(
      echo, estimate, block,
      std::max<std::size_t>(1, static_cast<std::size_t>(
                                   kErleWindowS * s.sample_rate)));
  for (std::size_t f = 0; f < result.rows.size(); ++f) {
    CHECK(std::abs(result.rows[f].erle_db - expected[f]) < 1e-9);
  }
}

TEST_CASE("scenario runs are fully deterministic") {
  ScenarioConfig s = tiny_scenario();
  s.nfr_db = 0.0;
  s.noise_db = -20.0;
  CancellerConfig canceller;
  canceller.policy = PolicyKind::kProposed;
  const RunResult a = run_scenario(s, canceller);
  const RunResult b = run_scenario(s, canceller);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].erle_db == b.rows[i].erle_db);
    CHECK(a.rows[i].misalignment_db == b.rows[i].misalignment_db);
    CHECK(a.rows[i].eta == b.rows[i].eta);
    CHECK(a.rows[i].mu_mean == b.rows[i].mu_mean);
  }
  CHECK(a.summary.erle_ss_db == b.summary.erle_ss_db);
}

TEST_CASE("metrics rows flag double-talk frames from the burst truth") {
  ScenarioConfig s = tiny_scenario();
  s.nfr_db = 0.0;
  s.burst_period_s = 0.5;
  s.burst_start_s = 0.5;
  CancellerConfig canceller;
  canceller.policy = PolicyKind::kFixed;
  const RunResult result = run_scenario(s, canceller);
  const std::size_t period = 1000;  // 0.5 s at 2 kHz
  for (const MetricsRow& row : result.rows) {
    const std::size_t start = row.frame * s.block_size;
    bool in_burst = false;
    for (std::size_t i = start; i < start + s.block_size; ++i) {
      if ((i / period) % 2 == 1) in_burst = true;
    }
    CHECK(row.double_talk_active == in_burst);
  }
}

TEST_CASE("an empty sweep produces an empty table") {
  CancellerConfig canceller;
  CHECK(nfr_sweep(tiny_scenario(), {}, {PolicyKind::kProposed}, canceller)
            .empty());
}

TEST_CASE("a single sweep cell reproduces the standalone run") {
  ScenarioConfig s = tiny_scenario();
  CancellerConfig canceller;
  canceller.policy = PolicyKind::kNcc;
  ScenarioConfig with_nfr = s;
  with_nfr.nfr_db = -5.0;
  const ScenarioSummary standalone =
      run_scenario(with_nfr, canceller).summary;
  const std::vector<ScenarioSummary> swept =
      nfr_sweep(s, {-5.0}, {PolicyKind::kNcc}, canceller);
  REQUIRE(swept.size() == 1);
  CHECK(swept[0].policy == standalone.policy);
  CHECK(swept[0].nfr_db == standalone.nfr_db);
  CHECK(swept[0].erle_ss_db == standalone.erle_ss_db);
  CHECK(swept[0].erle_ss_excl_switch_db == standalone.erle_ss_excl_switch_db);
  CHECK(swept[0].final_misalignment_db == standalone.final_misalignment_db);
}

TEST_CASE("csv writers emit the pinned schema") {
  std::ostringstream metrics;
  MetricsRow row;
  row.frame = 3;
  row.time_s = 0.024;
  row.erle_db = 1.23456789;
  row.misalignment_db = -45.6789012;
  row.eta = 0.000123456;
  row.mu_mean = 0.75;
  row.double_talk_active = true;
  write_metrics_csv(metrics, {row});
  CHECK(metrics.str() ==
        "frame,time_s,erle_db,misalignment_db,eta,mu_mean,double_talk_active\n"
        "3,0.024,1.23457,-45.6789,0.000123456,0.75,1\n");

  std::ostringstream summary;
  ScenarioSummary s;
  s.policy = "proposed";
  s.nfr_db = -10.0;
  s.erle_ss_db = 23.4567891;
  s.erle_ss_excl_switch_db = 24.0;
  s.final_misalignment_db = -31.25;
  write_summary_csv(summary, {s});
  CHECK(summary.str() ==
        "policy,nfr_db,erle_ss_db,erle_ss_excl_switch_db,"
        "final_misalignment_db\n"
        "proposed,-10,23.4568,24,-31.25\n");
}

TEST_CASE("wav files round-trip through the reader") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "aec_test_tone.wav";
  std::vector<Real> tone(400);
  for (std::size_t i = 0; i < tone.size(); ++i) {
    tone[i] = 0.5 * std::sin(2.0 * oracle::kPi * 440.0 *
                             static_cast<Real>(i) / 8000.0);
  }
  write_wav_mono16(path.string(), tone, 8000.0);
  const WavData wav = read_wav_mono16(path.string());
  CHECK(wav.sample_rate == 8000.0);
  REQUIRE(wav.samples.size() == tone.size());
  for (std::size_t i = 0; i < tone.size(); ++i) {
    CHECK(std::abs(wav.samples[i] - tone[i]) <= 1.0 / 32768.0);
  }
  fs::remove(path);
}

TEST_CASE("malformed wav input raises an io error") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "aec_test_bad.wav";
  std::ofstream(path.string()) << "this is not a wav file at all";
  CHECK_THROWS_AS(read_wav_mono16(path.string()), IoError);
  CHECK_THROWS_AS(read_wav_mono16("/nonexistent/nowhere.wav"), IoError);
  fs::remove(path);
}

TEST_CASE("sustained double-talk wrecks the baseline but not the proposed "
          "policy") {
  ScenarioConfig s;
  s.sample_rate = 8000.0;
  s.duration_s = 16.0;
  s.path_change_at_s = -1.0;
  s.nfr_db = 0.0;
  s.noise_db = -30.0;      // the closed loop needs a noise floor to settle
  s.burst_period_s = 8.0;  // clean first half, one sustained burst after
  s.burst_start_s = 8.0;
  s.seed = 5;

  CancellerConfig fixed;
  fixed.policy = PolicyKind::kFixed;
  fixed.fixed_mu = 0.25;
  CancellerConfig proposed;
  proposed.policy = PolicyKind::kProposed;

  const Synthesis syn = synthesize(s);
  const RunResult baseline = run_synthesized(syn, s, fixed);
  const RunResult closed_loop = run_synthesized(syn, s, proposed);

  const std::size_t burst_frame =
      static_cast<std::size_t>(8.0 * s.sample_rate) / s.block_size;
  auto worst_during_burst = [&](const RunResult& r) {
    Real worst = -1e9;
    for (std::size_t f = burst_frame; f < r.rows.size(); ++f) {
      worst = std::max(worst, r.rows[f].misalignment_db);
    }
    return worst;
  };
  const Real baseline_before = baseline.rows[burst_frame - 1].misalignment_db;
  const Real proposed_before =
      closed_loop.rows[burst_frame - 1].misalignment_db;
  CHECK(worst_during_burst(baseline) - baseline_before > 10.0);
  CHECK(worst_during_burst(closed_loop) - proposed_before < 3.0);
}
