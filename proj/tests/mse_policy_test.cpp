#include <doctest.h>

#include <cmath>

#include "aircomp/core.hpp"
#include "aircomp/mse_policy.hpp"
#include "test_support.hpp"

using namespace aircomp;
using aircomp::testing::close_rel;

TEST_CASE("minimum MSE for ten unit channels") {
  const auto report = solve_min_mse(testing::uniform_instance(10, 1.0, 1.0), 10.0);
  CHECK(close_rel(report.design.rx_gain, 10.0 / 11.0, 1e-12));
  for (double b : report.design.tx_gains) CHECK(close_rel(b, 1.0, 1e-12));
  CHECK(close_rel(report.mse_star, 10.0 / 11.0, 1e-12));
  CHECK(close_rel(report.power_used, 10.0, 1e-12));
}

TEST_CASE("minimum MSE for a single sensor and in the high-power limit") {
  CHECK(close_rel(solve_min_mse(testing::uniform_instance(1, 1.0, 1.0), 10.0).mse_star, 1.0 / 11.0, 1e-12));
  const auto big = solve_min_mse(testing::uniform_instance(10, 1.0, 1.0), 1e9);
  CHECK(big.mse_star < 1e-6);
  CHECK(close_rel(big.mse_star, 10.0 / (1.0 + 1e9), 1e-9));
  CHECK(std::isfinite(solve_min_mse(testing::uniform_instance(4, 2.0, 1.0), 1e12).design.rx_gain));
}

TEST_CASE("invalid sum-power limits are rejected") {
  const auto inst = testing::uniform_instance(2, 1.0, 1.0);
  CHECK_THROWS_AS(solve_min_mse(inst, 0.0), DomainError);
  CHECK_THROWS_AS(solve_min_mse(inst, -3.0), DomainError);
  CHECK_THROWS_AS(solve_min_mse(inst, NAN), DomainError);
  CHECK_THROWS_AS(reformulated_solution(inst, INFINITY), DomainError);
}

TEST_CASE("reformulated solution examples") {
  CHECK(close_rel(reformulated_solution(testing::uniform_instance(1, 1.0, 1.0), 10.0)[0], 10.0 / 11.0, 1e-12));
  const auto two = reformulated_solution(SystemInstance(ChannelVector({1.0, 2.0}), 1.0), 1.0);
  CHECK(close_rel(two[0], 0.5, 1e-12));
  CHECK(close_rel(two[1], 0.4, 1e-12));
  const auto noiseless = reformulated_solution(SystemInstance(ChannelVector({0.5, 3.0}), 1.0), 1e15);
  CHECK(close_rel(noiseless[0], 2.0, 1e-12));
  CHECK(close_rel(noiseless[1], 1.0 / 3.0, 1e-12));
}

TEST_CASE("reformulated solution is the stationary point of each separable term") {
  // term(v) = (h v - 1)^2 + (sigma^2/P) v^2; check a central difference vanishes.
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> power(0.5, 50.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = testing::random_instance(rng, 1, 8);
    const double p = power(rng);
    const auto bhat = reformulated_solution(inst, p);
    for (std::size_t k = 0; k < inst.sensors(); ++k) {
      const double h = inst.channels()[k];
      const auto term = [&](double v) { return (h * v - 1) * (h * v - 1) + inst.noise_variance() / p * v * v; };
      const double step = 1e-5;
      const double slope = (term(bhat[k] + step) - term(bhat[k] - step)) / (2 * step);
      CHECK(std::abs(slope) < 1e-7);
      CHECK(term(bhat[k]) <= term(bhat[k] * 1.01));
      CHECK(term(bhat[k]) <= term(bhat[k] * 0.99));
    }
  }
}

TEST_CASE("report invariants on random instances") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> power(0.5, 50.0);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = testing::random_instance(rng, 1, 16);
    const double p = power(rng);
    const auto report = solve_min_mse(inst, p);
    CHECK(close_rel(report.power_used, p, 1e-9));
    CHECK(close_rel(sum_power(report.design), p, 1e-9));
    CHECK(close_rel(report.mse_star, mse(inst, report.design), 1e-9));
    CHECK(report.mse_star > 0.0);
    CHECK(report.mse_star < static_cast<double>(inst.sensors()));
    for (std::size_t k = 0; k < inst.sensors(); ++k) {
      CHECK(close_rel(report.intermediate[k], report.design.rx_gain * report.design.tx_gains[k], 1e-12));
    }
  }
}

TEST_CASE("monotone in the power limit") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> power(0.5, 50.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = testing::random_instance(rng, 1, 10);
    const double p = power(rng);
    const auto low = solve_min_mse(inst, p);
    const auto high = solve_min_mse(inst, 2 * p);
    CHECK(high.mse_star < low.mse_star);
    for (std::size_t k = 0; k < inst.sensors(); ++k) CHECK(high.intermediate[k] > low.intermediate[k]);

    // Each term P h^2 / (sigma^2 + P h^2)^2 of g^2 falls once P h^2 > sigma^2.
    const double h_min = inst.channels().min();
    if (p * h_min * h_min > inst.noise_variance()) CHECK(high.design.rx_gain < low.design.rx_gain);
  }

  // Identical channels: b_k = sqrt(P / K) rises with P.
  const auto flat = testing::uniform_instance(5, 0.8, 2.0);
  for (double p : {0.1, 1.0, 10.0}) {
    const auto low = solve_min_mse(flat, p), high = solve_min_mse(flat, 2 * p);
    for (std::size_t k = 0; k < 5; ++k) CHECK(high.design.tx_gains[k] > low.design.tx_gains[k]);
  }
}

TEST_CASE("mixed channels: tx gain of the strong sensor and rx gain are not monotone in P") {
  // h = {0.1, 2}, sigma^2 = 1. Doubling P from 10 to 20 moves b_2 from 1.49518 to
  // 1.27048 and g from 0.32625 to 0.38869 (closed form evaluated independently in double precision).
  const SystemInstance inst(ChannelVector({0.1, 2.0}), 1.0);
  const auto low = solve_min_mse(inst, 10.0), high = solve_min_mse(inst, 20.0);
  CHECK(high.design.tx_gains[1] < low.design.tx_gains[1]);
  CHECK(high.design.rx_gain > low.design.rx_gain);
  CHECK(low.design.tx_gains[1] == doctest::Approx(1.49518).epsilon(1e-5));
  CHECK(high.design.tx_gains[1] == doctest::Approx(1.27048).epsilon(1e-5));
  CHECK(low.design.rx_gain == doctest::Approx(0.32625).epsilon(1e-4));
  CHECK(high.design.rx_gain == doctest::Approx(0.38869).epsilon(1e-4));
  CHECK(high.mse_star < low.mse_star);
}

TEST_CASE("power allocation profile") {
  const auto flat = power_allocation_profile(testing::uniform_instance(10, 1.0, 1.0), 10.0);
  for (double p : flat) CHECK(close_rel(p, 1.0, 1e-12));

  // The sensor sitting at h = sigma / sqrt(P) receives the most power.
  const double sigma2 = 0.5, p = 8.0;
  const double peak_h = std::sqrt(sigma2 / p);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> h_dist(0.01, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const SystemInstance inst(ChannelVector({peak_h, h_dist(rng), h_dist(rng)}), sigma2);
    const auto profile = power_allocation_profile(inst, p);
    CHECK(profile[0] >= profile[1]);
    CHECK(profile[0] >= profile[2]);
    CHECK(close_rel(profile[0] + profile[1] + profile[2], p, 1e-9));
  }
}
