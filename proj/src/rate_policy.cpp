#include "aec/rate_policy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aec {

namespace {

bool is_rate(Real r) { return r >= 0.0 && r <= 1.0; }

std::uint64_t count_active(const TimeBlock& far, Real threshold) {
  std::uint64_t n = 0;
  for (Real s : far.samples) {
    if (std::abs(s) > threshold) ++n;
  }
  return n;
}

}  // namespace

void ProposedRateConfig::validate() const {
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1)");
  }
  if (!is_rate(mu_max) || !is_rate(bootstrap_mu)) {
    throw std::invalid_argument("rates must lie in [0, 1]");
  }
  if (!(eta_min > 0.0 && eta_min <= eta_max)) {
    throw std::invalid_argument("need 0 < eta_min <= eta_max");
  }
  if (!(eta_init >= eta_min && eta_init <= eta_max)) {
    throw std::invalid_argument("eta_init must lie in [eta_min, eta_max]");
  }
}

ProposedRatePolicy::ProposedRatePolicy(std::size_t block_size,
                                       std::size_t partitions,
                                       const ProposedRateConfig& config)
    : cfg_(config),
      bins_(2 * block_size),
      eta_(config.eta_init),
      psi_(partitions, 2 * block_size),
      bootstrap_span_(2 * partitions * block_size) {
  cfg_.validate();
}

void ProposedRatePolicy::observe_far(const TimeBlock& far) {
  active_samples_ += count_active(far, cfg_.activity_threshold);
}

std::vector<Real> ProposedRatePolicy::compute_mu(
    const PowerSpectrum& pred_power, const PowerSpectrum& err_power) const {
  if (bootstrap_active()) {
    return std::vector<Real>(bins_, cfg_.bootstrap_mu);
  }
  std::vector<Real> mu(bins_);
  for (std::size_t j = 0; j < bins_; ++j) {
    mu[j] = std::min(eta_ * pred_power[j] / err_power[j], cfg_.mu_max);
  }
  return mu;
}

void ProposedRatePolicy::update_eta(const PartitionedSpectra& gradient,
                                    Real pred_power_sum, Real err_power_sum) {
  Real aligned = 0.0;   // Re{psi^H grad}
  Real magnitude = 0.0; // sum of |Re{psi_k^* grad_k}|
  for (std::size_t k = 0; k < psi_.count(); ++k) {
    const Spectrum& p = psi_[k];
    const Spectrum& g = gradient[k];
    for (std::size_t j = 0; j < p.size(); ++j) {
      const Real term = p[j].real() * g[j].real() + p[j].imag() * g[j].imag();
      aligned += term;
      magnitude += std::abs(term);
    }
  }
  if (magnitude >= cfg_.gradient_guard) {
    const Real ratio = std::min(pred_power_sum / err_power_sum, 1.0);
    const Real exponent = cfg_.rho * ratio * aligned / magnitude;
    eta_ = std::clamp(eta_ * std::exp(exponent), cfg_.eta_min, cfg_.eta_max);
  }
  smooth_gradient(gradient);
}

void ProposedRatePolicy::smooth_gradient(const PartitionedSpectra& gradient) {
  if (gradient.count() != psi_.count() || gradient.bins() != psi_.bins()) {
    throw std::invalid_argument("smooth_gradient: shape mismatch");
  }
  for (std::size_t k = 0; k < psi_.count(); ++k) {
    for (std::size_t j = 0; j < psi_.bins(); ++j) {
      psi_[k][j] = cfg_.alpha * psi_[k][j] + gradient[k][j];
    }
  }
}

void ProposedRatePolicy::reset() {
  eta_ = cfg_.eta_init;
  psi_.clear();
  active_samples_ = 0;
}

void NccRateConfig::validate() const {
  if (!is_rate(mu_on)) throw std::invalid_argument("mu_on must lie in [0, 1]");
  if (!(window > 0.0 && window < 1.0)) {
    throw std::invalid_argument("window must lie in (0, 1)");
  }
  if (!(regularizer > 0.0)) {
    throw std::invalid_argument("regularizer must be positive");
  }
}

NccRatePolicy::NccRatePolicy(std::size_t block_size, std::size_t partitions,
                             const NccRateConfig& config)
    : cfg_(config),
      bins_(2 * block_size),
      warmup_span_(2 * partitions * block_size) {
  cfg_.validate();
}

void NccRatePolicy::observe_far(const TimeBlock& far) {
  active_samples_ += count_active(far, cfg_.activity_threshold);
}

std::vector<Real> NccRatePolicy::compute_mu(const TimeBlock& y_hat,
                                            const TimeBlock& mic) {
  if (y_hat.size() != mic.size() || y_hat.size() == 0) {
    throw std::invalid_argument("compute_mu: block size mismatch");
  }
  const Real n = static_cast<Real>(y_hat.size());
  Real yd = 0.0, y2 = 0.0, d2 = 0.0;
  for (std::size_t i = 0; i < y_hat.size(); ++i) {
    yd += y_hat[i] * mic[i];
    y2 += y_hat[i] * y_hat[i];
    d2 += mic[i] * mic[i];
  }
  const Real w = cfg_.window;
  mean_yd_ = w * mean_yd_ + (1.0 - w) * yd / n;
  mean_y2_ = w * mean_y2_ + (1.0 - w) * y2 / n;
  mean_d2_ = w * mean_d2_ + (1.0 - w) * d2 / n;
  xi_ = mean_yd_ / std::sqrt(mean_y2_ * mean_d2_ + cfg_.regularizer);

  if (warmup_active()) {
    return std::vector<Real>(bins_, cfg_.mu_on);
  }
  if (xi_ < cfg_.threshold) {
    hang_ = cfg_.hangover_frames;
    return std::vector<Real>(bins_, 0.0);
  }
  if (hang_ > 0) {
    --hang_;
    return std::vector<Real>(bins_, 0.0);
  }
  return std::vector<Real>(bins_, cfg_.mu_on);
}

void NccRatePolicy::reset() {
  mean_yd_ = mean_y2_ = mean_d2_ = 0.0;
  xi_ = 0.0;
  hang_ = 0;
  active_samples_ = 0;
}

FixedRatePolicy::FixedRatePolicy(std::size_t block_size, Real mu)
    : bins_(2 * block_size), mu_(mu) {
  if (!is_rate(mu_)) {
    throw std::invalid_argument("FixedRatePolicy: mu must lie in [0, 1]");
  }
}

}  // namespace aec
