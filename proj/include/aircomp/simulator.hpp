#ifndef AIRCOMP_SIMULATOR_HPP
#define AIRCOMP_SIMULATOR_HPP

#include <cstdint>
#include <span>
#include <string_view>

#include "aircomp/core.hpp"
#include "aircomp/rng.hpp"

namespace aircomp::sim {

/// Rayleigh fading with E[h^2] = mean_power_gain.
class FadingModel {
 public:
  explicit FadingModel(double mean_power_gain = 1.0);
  double mean_power_gain() const noexcept { return mean_power_gain_; }

 private:
  double mean_power_gain_;
};

enum class Policy {
  sum_power_mse,  ///< E[MSE*]/K with P = K * sum_power_limit_per_sensor
  sum_power_pw,   ///< E[PW*]/K with eps = K * mse_limit_per_sensor
  peak_mse,       ///< E[MSE]/K of the per-sensor-capped baseline
};

std::string_view to_string(Policy policy) noexcept;
/// Throws DomainError on an unknown name.
Policy policy_from_string(std::string_view name);

struct EnsembleSpec {
  int sensors = 10;
  long long trials = 1'000'000;
  Policy policy = Policy::sum_power_mse;
  double sum_power_limit_per_sensor = 10.0;
  double mse_limit_per_sensor = 0.2;
  double peak_limit = 10.0;
  double noise_variance = 1.0;
  std::uint64_t seed = 1;

  /// Throws DomainError if counts are non-positive or the limit used by the
  /// selected policy is not positive (or, for sum_power_pw, not below 1).
  void validate() const;
};

struct AggregateStats {
  double mean = 0.0;
  double std_error = 0.0;
  long long trials = 0;
};

/// K Rayleigh magnitudes h = sqrt(mu/2) * |u1 + j u2| drawn from `engine`.
ChannelVector sample_channels(const FadingModel& model, int sensors, Engine& engine);
/// Same, from substream 0 of `seed`.
ChannelVector sample_channels(const FadingModel& model, int sensors, std::uint64_t seed);

/// Monte Carlo estimate of E|y - sum_k x_k|^2 with x_k ~ N(0, 1) i.i.d. and
/// n ~ N(0, sigma^2).
AggregateStats empirical_mse(const SystemInstance& instance, const TxRxDesign& design, long long samples,
                             std::uint64_t seed);

/// Mean and standard error of a per-trial sample, summed in index order.
AggregateStats summarize(std::span<const double> values);

/// Trial-averaged, K-normalized objective of the selected policy over fading
/// draws. Trial t uses substream t of spec.seed, and per-trial values are
/// reduced in trial order, so the result does not depend on `workers`
/// (0 = hardware concurrency). Each trial re-checks its own constraint and
/// throws SolverFailure if it is violated.
AggregateStats ensemble_average(const EnsembleSpec& spec, const FadingModel& model, unsigned workers = 0);

}  // namespace aircomp::sim

#endif  // AIRCOMP_SIMULATOR_HPP
