#ifndef AIRCOMP_TOOLS_EXPERIMENTS_HPP
#define AIRCOMP_TOOLS_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "aircomp/core.hpp"
#include "csv.hpp"

namespace aircomp::tools {

/// Named channel-power gain set: "S1" (ten unit gains) or
/// "S2" (0.1, 0.3, ..., 1.9).
std::vector<double> channel_power_set(const std::string& name);

struct FigureDefaults {
  double noise_variance = 1.0;
  // fig2
  std::vector<double> fig2_mse_limits{1.0, 3.0, 5.0, 7.0};
  // fig3: log-spaced sweep
  int fig3_points = 40;
  double fig3_lo = 0.1;
  double fig3_hi = 9.9;
  // fig4
  std::vector<double> fig4_mean_gains{0.5, 1.0};
  std::vector<int> fig4_sensors{5, 10, 15, 20, 25, 30};
  double fig4_sum_power_per_sensor = 10.0;
  double fig4_peak_limit = 10.0;
  long long trials = 1'000'000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
};

/// (MSE, PW) pairs for S1 and S2, once by sweeping the sum-power limit
/// through the minimum-MSE policy and once by sweeping the MSE limit through
/// the minimum-power policy.
CsvTable figure1(const FigureDefaults& opts);
/// Per-sensor transmit gains of the minimum-power design for each MSE limit.
CsvTable figure2(const FigureDefaults& opts);
/// Receiver gain of the minimum-power design versus the MSE limit.
CsvTable figure3(const FigureDefaults& opts);
/// Normalized average MSE versus K over Rayleigh fading for the sum-power
/// and the peak-power policies. Both policies see the same channel draws.
CsvTable figure4(const FigureDefaults& opts);

std::uint64_t figure4_seed(std::uint64_t master, std::size_t gain_index, int sensors);

}  // namespace aircomp::tools

#endif  // AIRCOMP_TOOLS_EXPERIMENTS_HPP
