#include "aircomp/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace aircomp {

ChannelVector::ChannelVector(std::vector<double> gains) : gains_(std::move(gains)) {
  if (gains_.empty()) throw DomainError("channel vector must hold at least one sensor");
  for (std::size_t k = 0; k < gains_.size(); ++k) {
    if (!std::isfinite(gains_[k]) || gains_[k] <= 0.0) {
      throw DomainError("channel magnitude h_" + std::to_string(k) +
                        " must be finite and strictly positive");
    }
  }
}

double ChannelVector::min() const noexcept { return *std::min_element(gains_.begin(), gains_.end()); }

double ChannelVector::max() const noexcept { return *std::max_element(gains_.begin(), gains_.end()); }

ChannelVector ChannelVector::from_power_gains(std::span<const double> power_gains) {
  std::vector<double> h;
  h.reserve(power_gains.size());
  for (double p : power_gains) {
    if (!std::isfinite(p) || p <= 0.0) throw DomainError("channel-power gain must be finite and positive");
    h.push_back(std::sqrt(p));
  }
  return ChannelVector(std::move(h));
}

SystemInstance::SystemInstance(ChannelVector channels, double noise_variance)
    : channels_(std::move(channels)), noise_variance_(noise_variance) {
  if (!std::isfinite(noise_variance_) || noise_variance_ <= 0.0) {
    throw DomainError("noise variance must be finite and strictly positive");
  }
}

TxRxDesign TxRxDesign::zero(std::size_t sensors) { return TxRxDesign{0.0, std::vector<double>(sensors, 0.0)}; }

void check_compatible(const SystemInstance& instance, const TxRxDesign& design) {
  if (design.tx_gains.size() != instance.sensors()) {
    throw DimensionMismatch("design has " + std::to_string(design.tx_gains.size()) +
                            " tx gains but instance has " + std::to_string(instance.sensors()) + " sensors");
  }
}

double mse(const SystemInstance& instance, const TxRxDesign& design) {
  check_compatible(instance, design);
  const auto h = instance.channels().gains();
  const double g = design.rx_gain;
  double total = 0.0;
  for (std::size_t k = 0; k < h.size(); ++k) {
    const double misalignment = g * h[k] * design.tx_gains[k] - 1.0;
    total += misalignment * misalignment;
  }
  return total + instance.noise_variance() * g * g;
}

double sum_power(const TxRxDesign& design) noexcept {
  double total = 0.0;
  for (double b : design.tx_gains) total += b * b;
  return total;
}

double received_output(const SystemInstance& instance, const TxRxDesign& design,
                       std::span<const double> signals, double noise_sample) {
  check_compatible(instance, design);
  if (signals.size() != instance.sensors()) {
    throw DimensionMismatch("signal vector length does not match the number of sensors");
  }
  const auto h = instance.channels().gains();
  double superposition = noise_sample;
  for (std::size_t k = 0; k < h.size(); ++k) superposition += h[k] * design.tx_gains[k] * signals[k];
  return design.rx_gain * superposition;
}

MsePowerPoint evaluate(const SystemInstance& instance, const TxRxDesign& design) {
  return MsePowerPoint{mse(instance, design), sum_power(design)};
}

}  // namespace aircomp
