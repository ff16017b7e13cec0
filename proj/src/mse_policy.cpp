#include "aircomp/mse_policy.hpp"

#include <cmath>

namespace aircomp {
namespace {

void check_power_limit(double sum_power_limit) {
  if (!std::isfinite(sum_power_limit) || sum_power_limit <= 0.0) {
    throw DomainError("sum-power limit must be finite and strictly positive");
  }
}

}  // namespace

std::vector<double> reformulated_solution(const SystemInstance& instance, double sum_power_limit) {
  check_power_limit(sum_power_limit);
  const double noise_to_power = instance.noise_variance() / sum_power_limit;
  std::vector<double> bhat;
  bhat.reserve(instance.sensors());
  for (double h : instance.channels().gains()) bhat.push_back(h / (noise_to_power + h * h));
  return bhat;
}

MseSolveReport solve_min_mse(const SystemInstance& instance, double sum_power_limit) {
  MseSolveReport report;
  report.intermediate = reformulated_solution(instance, sum_power_limit);

  double bhat_energy = 0.0;
  for (double v : report.intermediate) bhat_energy += v * v;

  // sum_k bhat_k^2 = g^2 P on the active constraint.
  const double g = std::sqrt(bhat_energy / sum_power_limit);
  report.design.rx_gain = g;
  report.design.tx_gains.reserve(report.intermediate.size());
  for (double v : report.intermediate) report.design.tx_gains.push_back(v / g);

  const double noise_to_power = instance.noise_variance() / sum_power_limit;
  double mse_star = 0.0;
  for (double h : instance.channels().gains()) mse_star += noise_to_power / (noise_to_power + h * h);
  report.mse_star = mse_star;
  report.power_used = sum_power(report.design);
  return report;
}

std::vector<double> power_allocation_profile(const SystemInstance& instance, double sum_power_limit) {
  const auto report = solve_min_mse(instance, sum_power_limit);
  std::vector<double> powers;
  powers.reserve(report.design.tx_gains.size());
  for (double b : report.design.tx_gains) powers.push_back(b * b);
  return powers;
}

}  // namespace aircomp
