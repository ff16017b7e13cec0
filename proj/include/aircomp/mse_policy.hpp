#ifndef AIRCOMP_MSE_POLICY_HPP
#define AIRCOMP_MSE_POLICY_HPP

#include <vector>

#include "aircomp/core.hpp"

namespace aircomp {

/// Optimum of "minimize MSE subject to sum_k b_k^2 <= P".
struct MseSolveReport {
  TxRxDesign design;
  double mse_star = 0.0;
  double power_used = 0.0;
  /// Substituted variables bhat_k = g b_k of the convex reformulation.
  std::vector<double> intermediate;
};

/// Minimizer of the separable convex objective
///   sum_k (h_k bhat_k - 1)^2 + (sigma^2 / P) sum_k bhat_k^2,
/// i.e. bhat_k = P h_k / (sigma^2 + P h_k^2). Evaluated as
/// h_k / (sigma^2/P + h_k^2) so that very large P does not overflow.
std::vector<double> reformulated_solution(const SystemInstance& instance, double sum_power_limit);

/// Closed-form minimum-MSE design under a sum-power limit P. The power
/// constraint is always active: the returned design spends exactly P.
/// Throws DomainError if P is not finite and positive.
MseSolveReport solve_min_mse(const SystemInstance& instance, double sum_power_limit);

/// Per-sensor transmit powers |b_k*|^2 of the minimum-MSE design.
std::vector<double> power_allocation_profile(const SystemInstance& instance, double sum_power_limit);

}  // namespace aircomp

#endif  // AIRCOMP_MSE_POLICY_HPP
