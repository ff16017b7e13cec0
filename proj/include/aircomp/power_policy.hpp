#ifndef AIRCOMP_POWER_POLICY_HPP
#define AIRCOMP_POWER_POLICY_HPP

#include <span>
#include <vector>

#include "aircomp/core.hpp"

namespace aircomp {

/// Fixed-point quantities behind the minimum-power design.
///
/// tau_k = 1 / (1 + M / c_k) with c_k = 1 / h_k^2 is the residual
/// misalignment of sensor k, and the KKT multiplier of the MSE constraint is
/// M / g^2. All fields are zero for the trivial case (limit >= K).
struct FixedPointDiagnostics {
  double m_value = 0.0;
  std::vector<double> taus;
  double kkt_multiplier = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

struct PowerSolveReport {
  TxRxDesign design;
  double pw_star = 0.0;
  FixedPointDiagnostics diagnostics;
  bool trivial = false;  ///< mse_limit >= K: zero design is optimal.
};

/// Result of the scalar root solve.
struct FixedPointSolution {
  double m_value = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

/// Root function of the fixed-point equation, multiplied through by its
/// denominator:
///   F(M) = M (eps - sum_k (c_k/(c_k+M))^2) - sum_k c_k (M/(c_k+M))^2.
double fixed_point_residual(std::span<const double> channel_costs, double mse_limit, double m);

/// Unique M > 0 satisfying
///   M = sum_k c_k (M/(c_k+M))^2 / (eps - sum_k (c_k/(c_k+M))^2)
/// with a positive denominator.
///
/// The search is restricted to (M_min, inf), where M_min solves
/// sum_k (c_k/(c_k+M_min))^2 = eps; F is negative just above M_min and
/// grows without bound, so the root is bracketed by doubling and then
/// bisected to 1e-12 relative width. M = 0 also zeroes F but has a
/// non-positive denominator and is excluded.
///
/// Throws DomainError for eps outside (0, K) or non-positive costs, and
/// SolverFailure if either bisection stage needs more than 200 steps.
FixedPointSolution solve_m(std::span<const double> channel_costs, double mse_limit);

/// Minimum-sum-power design meeting MSE <= eps. For eps >= K the zero design
/// (g = 0, b = 0) is returned with trivial = true. Throws DomainError for
/// eps <= 0 or non-finite eps.
PowerSolveReport solve_min_power(const SystemInstance& instance, double mse_limit);

/// Feeds the minimum power for eps back into the minimum-MSE solver and
/// returns the resulting MSE; equals eps when both closed forms agree.
double duality_check(const SystemInstance& instance, double mse_limit);

/// c_k = 1 / h_k^2.
std::vector<double> channel_costs(const ChannelVector& channels);

}  // namespace aircomp

#endif  // AIRCOMP_POWER_POLICY_HPP
