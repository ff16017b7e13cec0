#ifndef AIRCOMP_BASELINE_PEAK_HPP
#define AIRCOMP_BASELINE_PEAK_HPP

#include "aircomp/core.hpp"

namespace aircomp {

/// Per-sensor transmit power cap P0 (b_k^2 <= P0 for every k).
class PeakConstraint {
 public:
  explicit PeakConstraint(double per_sensor_limit);
  double per_sensor_limit() const noexcept { return limit_; }

 private:
  double limit_;
};

struct PeakSolveResult {
  MsePowerPoint point;
  TxRxDesign design;
};

/// Minimum-MSE design under per-sensor power caps.
///
/// For a fixed g > 0 the objective separates over sensors and is minimized by
/// b_k = min(1 / (g h_k), sqrt(P0)); the remaining function of g,
///   sum_k max(0, 1 - g h_k sqrt(P0))^2 + sigma^2 g^2,
/// is convex. It is scanned on 1024 log-spaced points of [1e-5, 1e3] / h_min
/// and refined by golden section.
PeakSolveResult solve_min_mse_peak(const SystemInstance& instance, const PeakConstraint& peak);

}  // namespace aircomp

#endif  // AIRCOMP_BASELINE_PEAK_HPP
