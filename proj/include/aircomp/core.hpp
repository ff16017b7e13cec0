#ifndef AIRCOMP_CORE_HPP
#define AIRCOMP_CORE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "aircomp/errors.hpp"

namespace aircomp {

/// Channel magnitudes |h_k| of the K sensors. Phases are assumed to be
/// compensated at the transmitters, so only magnitudes are stored.
class ChannelVector {
 public:
  /// Throws DomainError unless gains is non-empty and every entry is finite
  /// and strictly positive.
  explicit ChannelVector(std::vector<double> gains);

  std::size_t size() const noexcept { return gains_.size(); }
  double operator[](std::size_t k) const noexcept { return gains_[k]; }
  std::span<const double> gains() const noexcept { return gains_; }

  double min() const noexcept;
  double max() const noexcept;

  /// Builds magnitudes h_k = sqrt(p_k) from channel-power gains p_k = |h_k|^2.
  static ChannelVector from_power_gains(std::span<const double> power_gains);

 private:
  std::vector<double> gains_;
};

/// Channels plus receiver noise variance sigma^2.
class SystemInstance {
 public:
  SystemInstance(ChannelVector channels, double noise_variance);

  const ChannelVector& channels() const noexcept { return channels_; }
  double noise_variance() const noexcept { return noise_variance_; }
  std::size_t sensors() const noexcept { return channels_.size(); }

 private:
  ChannelVector channels_;
  double noise_variance_;
};

/// Receiver scaling g and transmitter scalings b_k.
struct TxRxDesign {
  double rx_gain = 0.0;
  std::vector<double> tx_gains;

  /// All-zero design for K sensors (g = 0, b = 0).
  static TxRxDesign zero(std::size_t sensors);
};

struct MsePowerPoint {
  double mse = 0.0;
  double sum_power = 0.0;
};

/// Computation MSE: sum_k (g h_k b_k - 1)^2 + sigma^2 g^2.
double mse(const SystemInstance& instance, const TxRxDesign& design);

/// Sum of transmit powers, sum_k b_k^2.
double sum_power(const TxRxDesign& design) noexcept;

/// Receiver output y = g (sum_k h_k b_k x_k + n) for one channel use.
double received_output(const SystemInstance& instance, const TxRxDesign& design,
                       std::span<const double> signals, double noise_sample);

MsePowerPoint evaluate(const SystemInstance& instance, const TxRxDesign& design);

/// Throws DimensionMismatch if the design does not have one entry per sensor.
void check_compatible(const SystemInstance& instance, const TxRxDesign& design);

}  // namespace aircomp

#endif  // AIRCOMP_CORE_HPP
