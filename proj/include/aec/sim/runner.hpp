#ifndef AEC_SIM_RUNNER_HPP
#define AEC_SIM_RUNNER_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "aec/canceller.hpp"
#include "aec/sim/metrics.hpp"
#include "aec/sim/scenario.hpp"

namespace aec::sim {

struct ScenarioSummary {
  std::string policy;
  Real nfr_db = kOffDb;
  Real erle_ss_db = 0.0;              // steady state, first 2 s excluded
  Real erle_ss_excl_switch_db = 0.0;  // also excludes 2 s after the switch
  Real final_misalignment_db = 0.0;
  Real eta_low = 0.0;                 // eta trajectory extremes
  Real eta_high = 0.0;
};

struct RunResult {
  std::vector<MetricsRow> rows;
  ScenarioSummary summary;
};

/// Seconds of adaptation excluded from every steady-state average.
inline constexpr Real kSteadyStateSkipS = 2.0;

/// Trailing ERLE window, in seconds.
inline constexpr Real kErleWindowS = 0.25;

std::string policy_name(PolicyKind kind);

/// Streams one synthesized scenario through a fresh canceller and collects
/// per-frame metrics. Block size and partition count come from the scenario.
RunResult run_scenario(const ScenarioConfig& scenario,
                       const CancellerConfig& canceller);

/// Same, on signals synthesized beforehand (lets sweep cells share them).
RunResult run_synthesized(const Synthesis& signals,
                          const ScenarioConfig& scenario,
                          const CancellerConfig& canceller);

/// Cross product of NFR values and policies, every cell on the same seed.
/// Cells run in parallel; the summaries come back in deterministic
/// policy-major order.
std::vector<ScenarioSummary> nfr_sweep(const ScenarioConfig& base,
                                       const std::vector<Real>& nfr_list,
                                       const std::vector<PolicyKind>& policies,
                                       const CancellerConfig& canceller);

void write_metrics_csv(std::ostream& os, const std::vector<MetricsRow>& rows);
void write_summary_csv(std::ostream& os,
                       const std::vector<ScenarioSummary>& summaries);

}  // namespace aec::sim

#endif  // AEC_SIM_RUNNER_HPP
