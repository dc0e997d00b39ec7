#include "aec/canceller.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "aec/dsp.hpp"
#include "aec/fft.hpp"

namespace aec {

void CancellerConfig::validate() const {
  if (!Fft::is_power_of_two(block_size)) {
    throw std::invalid_argument("block_size must be a power of two");
  }
  if (partitions == 0) {
    throw std::invalid_argument("need at least one partition");
  }
  if (!(fixed_mu >= 0.0 && fixed_mu <= 1.0)) {
    throw std::invalid_argument("fixed_mu must lie in [0, 1]");
  }
  if (!(power_lambda > 0.0 && power_lambda < 1.0)) {
    throw std::invalid_argument("power_lambda must lie in (0, 1)");
  }
  if (!(power_floor > 0.0)) {
    throw std::invalid_argument("power_floor must be positive");
  }
  proposed.validate();
  ncc.validate();
}

namespace {

CancellerConfig validated(CancellerConfig config) {
  config.validate();
  return config;
}

}  // namespace

Canceller::Policy Canceller::make_policy(const CancellerConfig& config) {
  switch (config.policy) {
    case PolicyKind::kProposed:
      return ProposedRatePolicy(config.block_size, config.partitions,
                                config.proposed);
    case PolicyKind::kFixed:
      return FixedRatePolicy(config.block_size, config.fixed_mu);
    case PolicyKind::kNcc:
      return NccRatePolicy(config.block_size, config.partitions, config.ncc);
  }
  throw std::invalid_argument("unknown policy");
}

Canceller::Canceller(const CancellerConfig& config)
    : cfg_(validated(config)),
      filter_(cfg_.block_size, cfg_.partitions, cfg_.power_lambda,
              cfg_.power_floor),
      policy_(make_policy(cfg_)),
      pred_power_(2 * cfg_.block_size, cfg_.power_floor),
      err_power_(2 * cfg_.block_size, cfg_.power_floor) {}

std::pair<TimeBlock, FrameDiagnostics> Canceller::process_frame(
    const TimeBlock& far, const TimeBlock& mic) {
  filter_.ingest_far_end(far);
  const MdfFilter::Prediction pred = filter_.predict_echo();
  const MdfFilter::ErrorSignal err = filter_.form_error(mic, pred.y_hat);

  dsp::update_power(pred_power_, pred.power, cfg_.power_lambda,
                    cfg_.power_floor);
  dsp::update_power(err_power_, err.power, cfg_.power_lambda,
                    cfg_.power_floor);

  FrameDiagnostics diag{};
  std::vector<Real> mu;
  if (auto* proposed = std::get_if<ProposedRatePolicy>(&policy_)) {
    proposed->observe_far(far);
    mu = proposed->compute_mu(pred_power_, err_power_);
    diag.bootstrap_active = proposed->bootstrap_active();
  } else if (auto* fixed = std::get_if<FixedRatePolicy>(&policy_)) {
    mu = fixed->compute_mu();
  } else {
    auto& ncc = std::get<NccRatePolicy>(policy_);
    ncc.observe_far(far);
    mu = ncc.compute_mu(pred.y_hat, mic);
    diag.bootstrap_active = ncc.warmup_active();
  }

  filter_.compute_gradient(err.spectrum);
  filter_.apply_update(mu);

  if (auto* proposed = std::get_if<ProposedRatePolicy>(&policy_)) {
    proposed->update_eta(filter_.last_gradient(), pred_power_.sum(),
                         err_power_.sum());
    diag.eta = proposed->eta();
  } else if (auto* fixed = std::get_if<FixedRatePolicy>(&policy_)) {
    diag.eta = fixed->mu();
  } else {
    diag.eta = std::get<NccRatePolicy>(policy_).xi();
  }

  diag.mu_mean =
      std::accumulate(mu.begin(), mu.end(), 0.0) / static_cast<Real>(mu.size());
  diag.residual_energy = 0.0;
  for (Real s : err.e.samples) diag.residual_energy += s * s;
  diag.prediction_energy = 0.0;
  for (Real s : pred.y_hat.samples) diag.prediction_energy += s * s;

  return {err.e, diag};
}

void Canceller::reset() {
  filter_.reset();
  std::fill(pred_power_.powers.begin(), pred_power_.powers.end(),
            cfg_.power_floor);
  std::fill(err_power_.powers.begin(), err_power_.powers.end(),
            cfg_.power_floor);
  if (auto* proposed = std::get_if<ProposedRatePolicy>(&policy_)) {
    proposed->reset();
  } else if (auto* ncc = std::get_if<NccRatePolicy>(&policy_)) {
    ncc->reset();
  }
}

}  // namespace aec
