#include <doctest.h>

#include "aircomp/mse_policy.hpp"
#include "aircomp/oracle.hpp"
#include "aircomp/power_policy.hpp"
#include "test_support.hpp"

using namespace aircomp;
using aircomp::testing::close_rel;

TEST_CASE("projected gradient reaches the single-sensor and symmetric optima") {
  const auto single = oracle::pg_min_mse(testing::uniform_instance(1, 1.0, 1.0), 10.0);
  CHECK(std::abs(single.point.mse - 1.0 / 11.0) <= 1e-6 * (1.0 / 11.0));
  CHECK(single.converged);

  const auto ten = oracle::pg_min_mse(testing::uniform_instance(10, 1.0, 1.0), 10.0);
  CHECK(std::abs(ten.point.mse - 10.0 / 11.0) <= 1e-6 * (10.0 / 11.0));
  CHECK(ten.point.sum_power <= 10.0 * (1 + 1e-12));

  const auto loud = oracle::pg_min_mse(SystemInstance(ChannelVector({1.0, 2.0}), 1.0), 1e6);
  CHECK(loud.point.mse < 1e-5);
}

TEST_CASE("nested search reaches the symmetric minimum power") {
  const auto inst = testing::uniform_instance(10, 1.0, 1.0);
  const auto result = oracle::nested_min_power(inst, 5.0);
  CHECK(std::abs(result.point.sum_power - 1.0) <= 1e-6);
  CHECK(std::abs(result.point.mse - 5.0) <= 1e-9);

  const auto trivial = oracle::nested_min_power(inst, 10.0);
  CHECK(trivial.point.sum_power == 0.0);
  CHECK(trivial.point.mse == 10.0);
}

TEST_CASE("oracle settings are validated") {
  const auto inst = testing::uniform_instance(2, 1.0, 1.0);
  oracle::OracleSettings bad;
  bad.restarts = 0;
  CHECK_THROWS_AS(oracle::pg_min_mse(inst, 1.0, bad), DomainError);
  bad = {};
  bad.step_tolerance = 0.0;
  CHECK_THROWS_AS(oracle::nested_min_power(inst, 1.0, bad), DomainError);
  CHECK_THROWS_AS(oracle::pg_min_mse(inst, 0.0), DomainError);
  CHECK_THROWS_AS(oracle::nested_min_power(inst, -1.0), DomainError);
}

TEST_CASE("oracle outputs are self-consistent and deterministic") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const auto inst = testing::random_instance(rng, 1, 6);
    const auto a = oracle::pg_min_mse(inst, 5.0);
    const auto b = oracle::pg_min_mse(inst, 5.0);
    CHECK(a.point.mse == b.point.mse);
    CHECK(a.design.tx_gains == b.design.tx_gains);
    CHECK(close_rel(a.point.mse, mse(inst, a.design), 1e-10));
    CHECK(close_rel(a.point.sum_power, sum_power(a.design), 1e-10));

    const double eps = 0.5 * static_cast<double>(inst.sensors());
    const auto n1 = oracle::nested_min_power(inst, eps);
    const auto n2 = oracle::nested_min_power(inst, eps);
    CHECK(n1.point.sum_power == n2.point.sum_power);
    CHECK(close_rel(n1.point.sum_power, sum_power(n1.design), 1e-10));
  }
}

TEST_CASE("closed forms match the oracles on random instances") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const auto inst = testing::random_instance(rng, 1, 6);
    const double p = std::uniform_real_distribution<double>(0.5, 50.0)(rng);
    const auto closed = solve_min_mse(inst, p);
    const auto pg = oracle::pg_min_mse(inst, p);
    CHECK(close_rel(pg.point.mse, closed.mse_star, 1e-6));
    CHECK(pg.point.mse >= closed.mse_star * (1 - 1e-6));

    const double k = static_cast<double>(inst.sensors());
    const double eps = std::uniform_real_distribution<double>(0.05 * k, 0.95 * k)(rng);
    const auto power = solve_min_power(inst, eps);
    const auto nested = oracle::nested_min_power(inst, eps);
    CHECK(close_rel(nested.point.sum_power, power.pw_star, 1e-6));
    CHECK(nested.point.sum_power >= power.pw_star * (1 - 1e-6));
  }
}
