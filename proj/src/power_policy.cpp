#include "aircomp/power_policy.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "aircomp/mse_policy.hpp"
#include "aircomp/scalar_search.hpp"

namespace aircomp {
namespace {

constexpr double kRelTol = 1e-12;
constexpr int kMaxIter = 200;

double misalignment_energy(std::span<const double> costs, double m) {
  double total = 0.0;
  for (double c : costs) {
    const double tau = c / (c + m);
    total += tau * tau;
  }
  return total;
}

// Doubles hi until pred(hi) holds.
template <typename Pred>
double expand_upward(double hi, Pred pred, int& iterations, const char* stage) {
  for (int it = 0; !pred(hi); ++it) {
    if (it >= kMaxIter || !std::isfinite(hi)) {
      throw SolverFailure(std::string("solve_m: could not bracket ") + stage);
    }
    hi *= 2.0;
    ++iterations;
  }
  return hi;
}

}  // namespace

std::vector<double> channel_costs(const ChannelVector& channels) {
  std::vector<double> costs;
  costs.reserve(channels.size());
  for (double h : channels.gains()) costs.push_back(1.0 / (h * h));
  return costs;
}

double fixed_point_residual(std::span<const double> costs, double mse_limit, double m) {
  double tau_energy = 0.0;
  double weighted = 0.0;
  for (double c : costs) {
    const double tau = c / (c + m);
    const double one_minus_tau = m / (c + m);
    tau_energy += tau * tau;
    weighted += c * one_minus_tau * one_minus_tau;
  }
  return m * (mse_limit - tau_energy) - weighted;
}

FixedPointSolution solve_m(std::span<const double> costs, double mse_limit) {
  const auto sensors = static_cast<double>(costs.size());
  if (costs.empty()) throw DomainError("solve_m: at least one channel cost is required");
  for (double c : costs) {
    if (!std::isfinite(c) || c <= 0.0) throw DomainError("solve_m: channel costs must be finite and positive");
  }
  if (!std::isfinite(mse_limit) || mse_limit <= 0.0 || mse_limit >= sensors) {
    throw DomainError("solve_m: MSE limit must lie in (0, K)");
  }

  int iterations = 0;
  double c_max = 0.0;
  for (double c : costs) c_max = std::max(c_max, c);

  // Stage 1: sum_k tau_k^2 falls strictly from K to 0 as M grows.
  const auto excess = [&](double m) { return misalignment_energy(costs, m) - mse_limit; };
  const double stage1_hi = expand_upward(c_max, [&](double m) { return excess(m) < 0.0; }, iterations,
                                         "the feasibility boundary");
  const auto boundary = scalar::bisect(excess, 0.0, stage1_hi, kRelTol, kMaxIter);
  iterations += boundary.iterations;
  // Step just past the boundary so the denominator is strictly positive.
  double m_min = boundary.root;
  while (misalignment_energy(costs, m_min) >= mse_limit) {
    m_min = std::nextafter(m_min, std::numeric_limits<double>::infinity()) * (1.0 + 4 * kRelTol);
  }

  // Stage 2: F(M_min+) < 0 and F -> +inf.
  const auto root_fn = [&](double m) { return fixed_point_residual(costs, mse_limit, m); };
  if (root_fn(m_min) >= 0.0) {
    throw SolverFailure("solve_m: expected F < 0 just above the feasibility boundary");
  }
  const double stage2_hi =
      expand_upward(2.0 * m_min, [&](double m) { return root_fn(m) > 0.0; }, iterations, "the fixed point");
  const auto root = scalar::bisect(root_fn, m_min, stage2_hi, kRelTol, kMaxIter);
  iterations += root.iterations;

  if (!(mse_limit - misalignment_energy(costs, root.root) > 0.0)) {
    throw SolverFailure("solve_m: fixed point has a non-positive denominator");
  }
  return FixedPointSolution{root.root, std::abs(root_fn(root.root)), iterations};
}

PowerSolveReport solve_min_power(const SystemInstance& instance, double mse_limit) {
  if (!std::isfinite(mse_limit) || mse_limit <= 0.0) {
    throw DomainError("MSE limit must be finite and strictly positive");
  }
  const std::size_t sensors = instance.sensors();
  PowerSolveReport report;
  if (mse_limit >= static_cast<double>(sensors)) {
    report.design = TxRxDesign::zero(sensors);
    report.trivial = true;
    return report;
  }

  const auto costs = channel_costs(instance.channels());
  const auto fixed_point = solve_m(costs, mse_limit);
  const double m = fixed_point.m_value;
  const double sigma = std::sqrt(instance.noise_variance());
  const auto h = instance.channels().gains();

  auto& diag = report.diagnostics;
  diag.m_value = m;
  diag.residual = fixed_point.residual;
  diag.iterations = fixed_point.iterations;
  diag.taus.reserve(sensors);
  double tau_energy = 0.0;
  for (double c : costs) {
    const double tau = c / (c + m);
    diag.taus.push_back(tau);
    tau_energy += tau * tau;
  }
  const double slack = mse_limit - tau_energy;
  const double root_slack = std::sqrt(slack);

  report.design.rx_gain = root_slack / sigma;
  report.design.tx_gains.reserve(sensors);
  double weighted = 0.0;
  for (std::size_t k = 0; k < sensors; ++k) {
    const double tau = diag.taus[k];
    report.design.tx_gains.push_back(sigma * m * h[k] * tau / root_slack);
    const double one_minus_tau = m / (costs[k] + m);
    weighted += costs[k] * one_minus_tau * one_minus_tau;
  }
  report.pw_star = instance.noise_variance() * weighted / slack;
  diag.kkt_multiplier = m / (report.design.rx_gain * report.design.rx_gain);
  return report;
}

double duality_check(const SystemInstance& instance, double mse_limit) {
  if (!(mse_limit > 0.0) || mse_limit >= static_cast<double>(instance.sensors())) {
    throw DomainError("duality_check: MSE limit must lie in (0, K)");
  }
  const auto power = solve_min_power(instance, mse_limit);
  return solve_min_mse(instance, power.pw_star).mse_star;
}

}  // namespace aircomp
