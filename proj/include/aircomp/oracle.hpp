#ifndef AIRCOMP_ORACLE_HPP
#define AIRCOMP_ORACLE_HPP

#include <cstdint>

#include "aircomp/core.hpp"

namespace aircomp::oracle {

// Brute-force numerical solvers for the two design problems. Nothing here
// calls into the closed-form policies; they exist to check them.

struct OracleSettings {
  int restarts = 8;
  int max_steps = 100000;
  double step_tolerance = 1e-12;
  std::uint64_t seed = 0x5eed;

  /// Throws DomainError on non-positive counts or tolerance.
  void validate() const;
};

struct OracleResult {
  MsePowerPoint point;  ///< core::evaluate on `design`
  TxRxDesign design;
  bool converged = false;
  int steps = 0;         ///< gradient steps (pg) or golden iterations (nested)
  int best_restart = 0;  ///< pg only
  int skipped_candidates = 0;  ///< nested only: grid points with an infeasible inner problem
};

/// Projected gradient descent for min MSE s.t. sum b^2 <= P, g >= 0, b >= 0,
/// keeping the best of settings.restarts random starts (ties go to the lower
/// restart index). Each iteration sets g to its exact least-squares value for
/// the current b, then takes a projected-gradient step on b that backtracks
/// from a unit step (in coordinates scaled by sqrt(P)) until the sufficient
/// decrease condition holds. A restart stops when the relative objective
/// change drops below settings.step_tolerance or after settings.max_steps.
OracleResult pg_min_mse(const SystemInstance& instance, double sum_power_limit,
                        const OracleSettings& settings = {});

/// Nested search for min sum b^2 s.t. MSE <= eps. For a fixed receiver gain g
/// the optimal transmit gains have the form b_k = lam g h_k / (1 + lam g^2 h_k^2);
/// the multiplier lam is bisected so that the MSE equals eps, and the
/// resulting sum power is minimized over g by a 512-point log grid on
/// [1e-4, 1e4] / h_max followed by golden-section refinement.
/// Throws SolverFailure if no grid point admits a feasible inner problem.
OracleResult nested_min_power(const SystemInstance& instance, double mse_limit,
                              const OracleSettings& settings = {});

}  // namespace aircomp::oracle

#endif  // AIRCOMP_ORACLE_HPP
