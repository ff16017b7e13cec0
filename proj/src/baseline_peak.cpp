#include "aircomp/baseline_peak.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "aircomp/scalar_search.hpp"

namespace aircomp {

PeakConstraint::PeakConstraint(double per_sensor_limit) : limit_(per_sensor_limit) {
  if (!std::isfinite(limit_) || limit_ <= 0.0) throw DomainError("peak power limit must be finite and positive");
}

namespace {

double clamped_gain(double g, double h, double amplitude_cap) { return std::min(1.0 / (g * h), amplitude_cap); }

}  // namespace

PeakSolveResult solve_min_mse_peak(const SystemInstance& instance, const PeakConstraint& peak) {
  const auto h = instance.channels().gains();
  const double sigma2 = instance.noise_variance();
  const double cap = std::sqrt(peak.per_sensor_limit());

  const auto objective = [&](double g) {
    double total = sigma2 * g * g;
    for (double hk : h) {
      const double e = std::max(0.0, 1.0 - g * hk * cap);
      total += e * e;
    }
    return total;
  };

  constexpr int kGrid = 1024;
  const double g_lo = 1e-5 / instance.channels().min();
  const double g_hi = 1e3 / instance.channels().min();
  const double ratio = g_hi / g_lo;
  int best = 0;
  double best_value = objective(g_lo);
  std::vector<double> grid(kGrid);
  for (int i = 0; i < kGrid; ++i) {
    grid[i] = g_lo * std::pow(ratio, static_cast<double>(i) / (kGrid - 1));
    const double v = objective(grid[i]);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  const auto refined =
      scalar::golden_section(objective, grid[std::max(best - 1, 0)], grid[std::min(best + 1, kGrid - 1)], 1e-12);
  const double g = refined.value <= best_value ? refined.argmin : grid[best];

  PeakSolveResult result;
  result.design.rx_gain = g;
  result.design.tx_gains.reserve(h.size());
  for (double hk : h) result.design.tx_gains.push_back(clamped_gain(g, hk, cap));
  result.point = evaluate(instance, result.design);
  return result;
}

}  // namespace aircomp
