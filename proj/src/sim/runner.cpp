#include "aec/sim/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace aec::sim {

namespace {

std::string fmt6(Real v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Real mean_or_zero(const std::vector<Real>& values) {
  if (values.empty()) return 0.0;
  Real s = 0.0;
  for (Real v : values) s += v;
  return s / static_cast<Real>(values.size());
}

}  // namespace

std::string policy_name(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kProposed:
      return "proposed";
    case PolicyKind::kFixed:
      return "fixed";
    case PolicyKind::kNcc:
      return "ncc";
  }
  return "unknown";
}

RunResult run_scenario(const ScenarioConfig& scenario,
                       const CancellerConfig& canceller) {
  return run_synthesized(synthesize(scenario), scenario, canceller);
}

RunResult run_synthesized(const Synthesis& signals,
                          const ScenarioConfig& scenario,
                          const CancellerConfig& canceller) {
  CancellerConfig cfg = canceller;
  cfg.block_size = scenario.block_size;
  cfg.partitions = scenario.partitions;
  Canceller engine(cfg);

  const std::size_t block = scenario.block_size;
  const std::size_t frames = signals.far.size() / block;
  const Real fs = scenario.sample_rate;

  std::vector<Real> echo_estimate(frames * block, 0.0);
  RunResult result;
  result.rows.resize(frames);

  TimeBlock far(block), mic(block);
  for (std::size_t f = 0; f < frames; ++f) {
    const std::size_t base = f * block;
    std::copy_n(signals.far.begin() + base, block, far.samples.begin());
    std::copy_n(signals.mic.begin() + base, block, mic.samples.begin());
    auto [out, diag] = engine.process_frame(far, mic);

    for (std::size_t i = 0; i < block; ++i) {
      echo_estimate[base + i] = mic[i] - out[i];
    }

    MetricsRow& row = result.rows[f];
    row.frame = f;
    row.time_s = static_cast<Real>(base) / fs;
    row.eta = diag.eta;
    row.mu_mean = diag.mu_mean;

    const std::vector<Real>& truth =
        base + block <= signals.switch_sample ? signals.rir_a : signals.rir_b;
    row.misalignment_db =
        misalignment_db(truth, engine.export_impulse_response());

    row.double_talk_active = false;
    for (std::size_t i = 0; i < block; ++i) {
      if (signals.near_speech[base + i] != 0.0) {
        row.double_talk_active = true;
        break;
      }
    }
  }

  const std::size_t window =
      std::max<std::size_t>(1, static_cast<std::size_t>(kErleWindowS * fs));
  std::vector<Real> truncated_echo(signals.echo.begin(),
                                   signals.echo.begin() + frames * block);
  const std::vector<Real> erle =
      erle_series(truncated_echo, echo_estimate, block, window);
  for (std::size_t f = 0; f < frames; ++f) {
    result.rows[f].erle_db = erle[f];
  }

  ScenarioSummary& summary = result.summary;
  summary.policy = policy_name(cfg.policy);
  summary.nfr_db = scenario.nfr_db;
  const Real switch_s =
      static_cast<Real>(signals.switch_sample) / fs;
  std::vector<Real> steady, steady_excl;
  for (const MetricsRow& row : result.rows) {
    if (row.time_s < kSteadyStateSkipS) continue;
    steady.push_back(row.erle_db);
    const bool in_reconvergence = scenario.path_change_enabled() &&
                                  row.time_s >= switch_s &&
                                  row.time_s < switch_s + kSteadyStateSkipS;
    if (!in_reconvergence) steady_excl.push_back(row.erle_db);
  }
  summary.erle_ss_db = mean_or_zero(steady);
  summary.erle_ss_excl_switch_db = mean_or_zero(steady_excl);
  summary.final_misalignment_db =
      result.rows.empty() ? 0.0 : result.rows.back().misalignment_db;
  summary.eta_low = summary.eta_high =
      result.rows.empty() ? 0.0 : result.rows.front().eta;
  for (const MetricsRow& row : result.rows) {
    summary.eta_low = std::min(summary.eta_low, row.eta);
    summary.eta_high = std::max(summary.eta_high, row.eta);
  }
  return result;
}

std::vector<ScenarioSummary> nfr_sweep(const ScenarioConfig& base,
                                       const std::vector<Real>& nfr_list,
                                       const std::vector<PolicyKind>& policies,
                                       const CancellerConfig& canceller) {
  std::vector<ScenarioConfig> scenarios;
  std::vector<Synthesis> signals;
  scenarios.reserve(nfr_list.size());
  for (Real nfr : nfr_list) {
    ScenarioConfig scenario = base;
    scenario.nfr_db = nfr;
    signals.push_back(synthesize(scenario));
    scenarios.push_back(std::move(scenario));
  }

  const std::size_t cells = policies.size() * nfr_list.size();
  std::vector<ScenarioSummary> out(cells);
#ifdef _OPENMP
#pragma omp parallel for if (cells > 1)
#endif
  for (std::size_t cell = 0; cell < cells; ++cell) {
    const std::size_t p = cell / nfr_list.size();
    const std::size_t s = cell % nfr_list.size();
    CancellerConfig cfg = canceller;
    cfg.policy = policies[p];
    out[cell] =
        run_synthesized(signals[s], scenarios[s], cfg).summary;
  }
  return out;
}

void write_metrics_csv(std::ostream& os, const std::vector<MetricsRow>& rows) {
  os << "frame,time_s,erle_db,misalignment_db,eta,mu_mean,double_talk_active\n";
  for (const MetricsRow& r : rows) {
    os << r.frame << ',' << fmt6(r.time_s) << ',' << fmt6(r.erle_db) << ','
       << fmt6(r.misalignment_db) << ',' << fmt6(r.eta) << ','
       << fmt6(r.mu_mean) << ',' << (r.double_talk_active ? 1 : 0) << '\n';
  }
}

void write_summary_csv(std::ostream& os,
                       const std::vector<ScenarioSummary>& summaries) {
  os << "policy,nfr_db,erle_ss_db,erle_ss_excl_switch_db,"
        "final_misalignment_db\n";
  for (const ScenarioSummary& s : summaries) {
    os << s.policy << ',' << fmt6(s.nfr_db) << ',' << fmt6(s.erle_ss_db) << ','
       << fmt6(s.erle_ss_excl_switch_db) << ','
       << fmt6(s.final_misalignment_db) << '\n';
  }
}

}  // namespace aec::sim
