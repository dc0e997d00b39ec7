#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aec/canceller.hpp"
#include "aec/sim/runner.hpp"
#include "aec/sim/scenario.hpp"
#include "aec/sim/wav.hpp"

namespace {

using aec::PolicyKind;
using aec::Real;

struct Options {
  std::string policy = "proposed";
  std::string policies = "proposed,ncc,fixed";
  std::string nfr_db = "off";
  std::string noise_db = "off";
  std::string nfr_db_list = "-10,0,10";
  double duration_s = 32.0;
  double path_change_at_s = 16.0;
  double sample_rate = 8000.0;
  double fixed_mu = 0.25;
  double burst_period_s = 1.0;
  double burst_start_s = 4.0;
  std::size_t block_size = 64;
  std::size_t partitions = 16;
  std::uint64_t seed = 1;
  std::string far_wav;
  std::string near_wav;
  std::string out = "metrics.csv";
};

Real parse_db(const std::string& text) {
  if (text == "off") return aec::sim::kOffDb;
  try {
    std::size_t used = 0;
    const Real v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad dB value: " + text);
  }
}

PolicyKind parse_policy(const std::string& name) {
  if (name == "proposed") return PolicyKind::kProposed;
  if (name == "fixed") return PolicyKind::kFixed;
  if (name == "ncc") return PolicyKind::kNcc;
  throw std::invalid_argument("unknown policy: " + name);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void add_scenario_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--nfr-db", opt.nfr_db,
                  "near-end to far-end ratio in dB, or 'off'");
  cmd->add_option("--noise-db", opt.noise_db,
                  "background noise relative to the echo in dB, or 'off'");
  cmd->add_option("--duration-s", opt.duration_s, "run length in seconds");
  cmd->add_option("--path-change-at-s", opt.path_change_at_s,
                  "echo path switch time; <= 0 disables the switch");
  cmd->add_option("--sample-rate", opt.sample_rate, "sample rate in Hz");
  cmd->add_option("--block-size", opt.block_size, "MDF block size N");
  cmd->add_option("--partitions", opt.partitions, "MDF partition count K");
  cmd->add_option("--seed", opt.seed, "RNG seed");
  cmd->add_option("--far-wav", opt.far_wav, "16-bit PCM mono far-end input");
  cmd->add_option("--near-wav", opt.near_wav, "16-bit PCM mono near-end input");
  cmd->add_option("--mu", opt.fixed_mu, "rate of the fixed (no-DTD) policy");
  cmd->add_option("--burst-period-s", opt.burst_period_s,
                  "near-end burst on/off period");
  cmd->add_option("--burst-start-s", opt.burst_start_s,
                  "quiet lead-in before the first near-end burst");
}

aec::sim::ScenarioConfig build_scenario(const Options& opt) {
  aec::sim::ScenarioConfig scenario;
  scenario.sample_rate = opt.sample_rate;
  scenario.duration_s = opt.duration_s;
  scenario.path_change_at_s = opt.path_change_at_s;
  scenario.nfr_db = parse_db(opt.nfr_db);
  scenario.noise_db = parse_db(opt.noise_db);
  scenario.seed = opt.seed;
  scenario.block_size = opt.block_size;
  scenario.partitions = opt.partitions;
  scenario.burst_period_s = opt.burst_period_s;
  scenario.burst_start_s = opt.burst_start_s;
  scenario.impulse_length =
      std::min<std::size_t>(1024, opt.block_size * opt.partitions);

  if (!opt.far_wav.empty()) {
    aec::sim::WavData wav = aec::sim::read_wav_mono16(opt.far_wav);
    if (wav.sample_rate != scenario.sample_rate) {
      throw std::invalid_argument(
          opt.far_wav + ": sample rate differs from --sample-rate");
    }
    scenario.far_source = aec::sim::SourceKind::kFile;
    scenario.far_file = std::move(wav.samples);
    const Real available =
        static_cast<Real>(scenario.far_file.size()) / scenario.sample_rate;
    scenario.duration_s = std::min(scenario.duration_s, available);
  }
  if (!opt.near_wav.empty()) {
    aec::sim::WavData wav = aec::sim::read_wav_mono16(opt.near_wav);
    if (wav.sample_rate != scenario.sample_rate) {
      throw std::invalid_argument(
          opt.near_wav + ": sample rate differs from --sample-rate");
    }
    scenario.near_source = aec::sim::SourceKind::kFile;
    scenario.near_file = std::move(wav.samples);
  }
  return scenario;
}

aec::CancellerConfig build_canceller(const Options& opt, PolicyKind kind) {
  aec::CancellerConfig cfg;
  cfg.block_size = opt.block_size;
  cfg.partitions = opt.partitions;
  cfg.policy = kind;
  cfg.fixed_mu = opt.fixed_mu;
  return cfg;
}

template <typename WriteFn>
void write_file(const std::string& path, WriteFn&& write) {
  std::ofstream out(path);
  if (!out) throw aec::sim::IoError("cannot open " + path + " for writing");
  write(out);
  out.flush();
  if (!out) throw aec::sim::IoError("failed writing " + path);
}

int run_command(const Options& opt) {
  const aec::sim::ScenarioConfig scenario = build_scenario(opt);
  const aec::CancellerConfig canceller =
      build_canceller(opt, parse_policy(opt.policy));
  const aec::sim::RunResult result =
      aec::sim::run_scenario(scenario, canceller);
  write_file(opt.out, [&](std::ostream& os) {
    aec::sim::write_metrics_csv(os, result.rows);
  });
  const aec::sim::ScenarioSummary& s = result.summary;
  std::cout << "policy=" << s.policy << " erle_ss_db=" << s.erle_ss_db
            << " erle_ss_excl_switch_db=" << s.erle_ss_excl_switch_db
            << " final_misalignment_db=" << s.final_misalignment_db
            << " eta_low=" << s.eta_low << " eta_high=" << s.eta_high << "\n";
  return 0;
}

int sweep_command(const Options& opt) {
  const aec::sim::ScenarioConfig base = build_scenario(opt);
  std::vector<Real> nfr_values;
  for (const std::string& item : split_list(opt.nfr_db_list)) {
    nfr_values.push_back(parse_db(item));
  }
  std::vector<PolicyKind> policies;
  for (const std::string& item : split_list(opt.policies)) {
    policies.push_back(parse_policy(item));
  }
  if (policies.empty()) throw std::invalid_argument("no policies selected");

  const aec::CancellerConfig canceller =
      build_canceller(opt, PolicyKind::kProposed);
  const std::vector<aec::sim::ScenarioSummary> summaries =
      aec::sim::nfr_sweep(base, nfr_values, policies, canceller);
  write_file(opt.out, [&](std::ostream& os) {
    aec::sim::write_summary_csv(os, summaries);
  });
  std::cout << "wrote " << summaries.size() << " summary rows to " << opt.out
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MDF acoustic echo canceller simulation harness"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* run = app.add_subcommand("run", "run one scenario, emit metrics");
  run->add_option("--policy", opt.policy, "proposed | fixed | ncc");
  add_scenario_flags(run, opt);
  run->add_option("--out", opt.out, "metrics CSV path");

  CLI::App* sweep =
      app.add_subcommand("sweep", "cross NFR values with policies");
  sweep->add_option("--nfr-db-list", opt.nfr_db_list,
                    "comma-separated NFR values in dB");
  sweep->add_option("--policies", opt.policies,
                    "comma-separated policy names");
  add_scenario_flags(sweep, opt);
  sweep->add_option("--out", opt.out, "summary CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return run_command(opt);
    return sweep_command(opt);
  } catch (const aec::sim::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
}
