#include "aircomp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "aircomp/rng.hpp"
#include "aircomp/scalar_search.hpp"

namespace aircomp::oracle {
namespace {

constexpr int kMaxHalvings = 80;

// Works in scaled coordinates gamma = g sqrt(P), beta_k = b_k / sqrt(P), so
// g h_k b_k = gamma h_k beta_k, the noise term is (sigma^2 / P) gamma^2 and
// the power ball has unit radius.
//
// Each iteration sets gamma to its exact least-squares value for the current
// beta (a scalar quadratic) and then takes one projected-gradient step in
// beta. Plain joint steps on (gamma, beta) crawl along the valley
// gamma * beta = const when sigma^2 / P is small.
struct PgProblem {
  std::span<const double> h;
  double noise_to_power;

  double objective(double gamma, const std::vector<double>& beta) const {
    double total = noise_to_power * gamma * gamma;
    for (std::size_t k = 0; k < h.size(); ++k) {
      const double e = gamma * h[k] * beta[k] - 1.0;
      total += e * e;
    }
    return total;
  }

  double best_gamma(const std::vector<double>& beta) const {
    double num = 0.0, den = noise_to_power;
    for (std::size_t k = 0; k < h.size(); ++k) {
      num += h[k] * beta[k];
      den += h[k] * h[k] * beta[k] * beta[k];
    }
    return std::max(num / den, 0.0);
  }

  void gradient(double gamma, const std::vector<double>& beta, std::vector<double>& grad) const {
    for (std::size_t k = 0; k < h.size(); ++k) {
      grad[k] = 2.0 * (gamma * h[k] * beta[k] - 1.0) * gamma * h[k];
    }
  }

  // Projection onto the nonnegative part of the unit ball.
  static void project(std::vector<double>& beta) {
    double norm2 = 0.0;
    for (auto& v : beta) {
      v = std::max(v, 0.0);
      norm2 += v * v;
    }
    if (norm2 > 1.0) {
      const double scale = 1.0 / std::sqrt(norm2);
      for (auto& v : beta) v *= scale;
    }
  }
};

struct RestartOutcome {
  double gamma = 0.0;
  std::vector<double> beta;
  double value = 0.0;
  int steps = 0;
  bool converged = false;
};

RestartOutcome descend(const PgProblem& problem, double gamma, std::vector<double> beta,
                       const OracleSettings& settings) {
  const std::size_t n = beta.size();
  std::vector<double> grad(n), trial(n);
  double value = problem.objective(gamma, beta);
  RestartOutcome out;
  for (int step = 0; step < settings.max_steps; ++step) {
    const double previous = value;
    gamma = problem.best_gamma(beta);
    value = problem.objective(gamma, beta);
    problem.gradient(gamma, beta, grad);
    double t = 1.0;
    bool accepted = false;
    double trial_value = value;
    for (int halving = 0; halving < kMaxHalvings; ++halving, t *= 0.5) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = beta[i] - t * grad[i];
      problem.project(trial);
      double linear = 0.0, dist2 = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double d = trial[i] - beta[i];
        linear += grad[i] * d;
        dist2 += d * d;
      }
      if (dist2 == 0.0) break;
      trial_value = problem.objective(gamma, trial);
      if (trial_value <= value + linear + 0.5 * dist2 / t && trial_value < value) {
        accepted = true;
        break;
      }
    }
    out.steps = step + 1;
    if (!accepted) {
      // Projected gradient vanished to working precision.
      out.converged = true;
      break;
    }
    beta.swap(trial);
    value = trial_value;
    const double change = previous - value;
    if (change <= settings.step_tolerance * std::max(value, std::numeric_limits<double>::min())) {
      out.converged = true;
      break;
    }
  }
  out.gamma = gamma;
  out.beta = std::move(beta);
  out.value = value;
  return out;
}

}  // namespace

void OracleSettings::validate() const {
  if (restarts < 1 || max_steps < 1 || !(step_tolerance > 0.0)) {
    throw DomainError("oracle settings need restarts >= 1, max_steps >= 1, step_tolerance > 0");
  }
}

OracleResult pg_min_mse(const SystemInstance& instance, double sum_power_limit, const OracleSettings& settings) {
  settings.validate();
  if (!std::isfinite(sum_power_limit) || sum_power_limit <= 0.0) {
    throw DomainError("pg_min_mse: sum-power limit must be finite and positive");
  }
  const auto h = instance.channels().gains();
  const std::size_t sensors = h.size();
  const PgProblem problem{h, instance.noise_variance() / sum_power_limit};
  const double root_power = std::sqrt(sum_power_limit);

  std::vector<RestartOutcome> outcomes;
  outcomes.reserve(static_cast<std::size_t>(settings.restarts));
  for (int r = 0; r < settings.restarts; ++r) {
    auto engine = make_engine(settings.seed, static_cast<std::uint64_t>(r));
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    // b uniform on the power sphere (folded into the nonnegative orthant).
    std::vector<double> beta(sensors);
    double norm2 = 0.0;
    for (auto& v : beta) {
      v = std::abs(normal(engine));
      norm2 += v * v;
    }
    if (norm2 == 0.0) {
      beta[0] = 1.0;
      norm2 = 1.0;
    }
    for (auto& v : beta) v /= std::sqrt(norm2);
    // g uniform on (0, 2 / h_min]
    const double gamma = (1.0 - uniform(engine)) * 2.0 / instance.channels().min() * root_power;

    outcomes.push_back(descend(problem, gamma, std::move(beta), settings));
  }

  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    if (outcomes[r].value < outcomes[best].value) best = r;
  }

  OracleResult result;
  const auto& winner = outcomes[best];
  result.design.rx_gain = winner.gamma / root_power;
  result.design.tx_gains.reserve(sensors);
  for (double v : winner.beta) result.design.tx_gains.push_back(v * root_power);
  result.point = evaluate(instance, result.design);
  result.converged = winner.converged;
  result.steps = winner.steps;
  result.best_restart = static_cast<int>(best);
  return result;
}

namespace {

// For fixed g: b_k = (u/g) h_k / (1 + u h_k^2) with u = lam g^2, and the
// misalignment part of the MSE is sum_k (1/(1 + u h_k^2))^2. Returns the
// transmit gains meeting MSE = eps, or an empty vector when sigma^2 g^2 >= eps.
std::vector<double> inner_design(std::span<const double> h, double noise_variance, double mse_limit, double g) {
  const double target = mse_limit - noise_variance * g * g;
  if (!(target > 0.0)) return {};
  const auto misalignment = [&](double u) {
    double total = 0.0;
    for (double hk : h) {
      const double r = 1.0 / (1.0 + u * hk * hk);
      total += r * r;
    }
    return total - target;
  };
  double h_max = 0.0;
  for (double hk : h) h_max = std::max(h_max, hk);
  double hi = 1.0 / (h_max * h_max);
  int expansions = 0;
  while (misalignment(hi) > 0.0) {
    hi *= 2.0;
    if (++expansions > 2000 || !std::isfinite(hi)) return {};
  }
  const auto u = scalar::bisect(misalignment, 0.0, hi, 1e-15, 400).root;
  std::vector<double> b;
  b.reserve(h.size());
  for (double hk : h) b.push_back((u / g) * hk / (1.0 + u * hk * hk));
  return b;
}

double power_of(const std::vector<double>& b) {
  double total = 0.0;
  for (double v : b) total += v * v;
  return total;
}

}  // namespace

OracleResult nested_min_power(const SystemInstance& instance, double mse_limit, const OracleSettings& settings) {
  settings.validate();
  const std::size_t sensors = instance.sensors();
  if (!std::isfinite(mse_limit) || mse_limit <= 0.0) {
    throw DomainError("nested_min_power: MSE limit must be finite and positive");
  }
  OracleResult result;
  if (mse_limit >= static_cast<double>(sensors)) {
    result.design = TxRxDesign::zero(sensors);
    result.point = evaluate(instance, result.design);
    result.converged = true;
    return result;
  }

  const auto h = instance.channels().gains();
  const double sigma2 = instance.noise_variance();
  const auto objective = [&](double g) {
    const auto b = inner_design(h, sigma2, mse_limit, g);
    return b.empty() ? std::numeric_limits<double>::infinity() : power_of(b);
  };

  constexpr int kGrid = 512;
  const double g_lo = 1e-4 / instance.channels().max();
  const double g_hi = 1e4 / instance.channels().max();
  std::vector<double> grid(kGrid), values(kGrid);
  int best = -1;
  for (int i = 0; i < kGrid; ++i) {
    grid[i] = g_lo * std::pow(g_hi / g_lo, static_cast<double>(i) / (kGrid - 1));
    values[i] = objective(grid[i]);
    if (!std::isfinite(values[i])) {
      ++result.skipped_candidates;
      continue;
    }
    if (best < 0 || values[i] < values[best]) best = i;
  }
  if (best < 0) throw SolverFailure("nested_min_power: no receiver gain on the grid admits a feasible design");

  const double lo = grid[std::max(best - 1, 0)];
  double hi = grid[std::min(best + 1, kGrid - 1)];
  // Beyond sigma g = sqrt(eps) no multiplier can meet the limit.
  hi = std::min(hi, std::sqrt(mse_limit / sigma2) * (1.0 - 1e-15));
  const auto refined = scalar::golden_section(objective, lo, hi, 1e-10);

  double g = refined.argmin;
  if (!(refined.value <= values[best])) g = grid[best];
  result.design.rx_gain = g;
  result.design.tx_gains = inner_design(h, sigma2, mse_limit, g);
  result.point = evaluate(instance, result.design);
  result.steps = refined.iterations;
  result.converged = true;
  return result;
}

}  // namespace aircomp::oracle
