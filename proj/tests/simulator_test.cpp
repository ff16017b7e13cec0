#include <doctest.h>

#include <cmath>

#include "aircomp/mse_policy.hpp"
#include "aircomp/simulator.hpp"
#include "test_support.hpp"

using namespace aircomp;

namespace {

double mean_square(const ChannelVector& h) {
  double total = 0.0;
  for (double v : h.gains()) total += v * v;
  return total / static_cast<double>(h.size());
}

}  // namespace

TEST_CASE("Rayleigh draws have the requested mean power") {
  CHECK(std::abs(mean_square(sim::sample_channels(sim::FadingModel(1.0), 1'000'000, 99)) - 1.0) < 0.01);
  CHECK(std::abs(mean_square(sim::sample_channels(sim::FadingModel(0.5), 1'000'000, 100)) - 0.5) < 0.005);
}

TEST_CASE("channel sampling is deterministic per seed") {
  const auto a = sim::sample_channels(sim::FadingModel(1.0), 16, 5);
  const auto b = sim::sample_channels(sim::FadingModel(1.0), 16, 5);
  const auto c = sim::sample_channels(sim::FadingModel(1.0), 16, 6);
  CHECK(std::equal(a.gains().begin(), a.gains().end(), b.gains().begin()));
  CHECK_FALSE(std::equal(a.gains().begin(), a.gains().end(), c.gains().begin()));
  CHECK_THROWS_AS(sim::FadingModel(0.0), DomainError);
}

TEST_CASE("empirical MSE matches the analytic value") {
  const SystemInstance inst(ChannelVector({0.5, 1.0, 2.0}), 0.25);
  TxRxDesign inverse{1.0, {2.0, 1.0, 0.5}};
  const auto noise_only = sim::empirical_mse(inst, inverse, 100'000, 1);
  CHECK(noise_only.trials == 100'000);
  CHECK(std::abs(noise_only.mean - 0.25) <= 4 * noise_only.std_error);

  const auto unit = testing::uniform_instance(10, 1.0, 1.0);
  const auto optimal = solve_min_mse(unit, 10.0);
  const auto mc = sim::empirical_mse(unit, optimal.design, 1'000'000, 2);
  CHECK(std::abs(mc.mean - 10.0 / 11.0) <= 4 * mc.std_error);

  const auto silent = sim::empirical_mse(unit, TxRxDesign::zero(10), 100'000, 3);
  CHECK(std::abs(silent.mean - 10.0) <= 4 * silent.std_error);

  CHECK_THROWS_AS(sim::empirical_mse(unit, TxRxDesign::zero(3), 10, 1), DimensionMismatch);
  CHECK_THROWS_AS(sim::empirical_mse(unit, TxRxDesign::zero(10), 0, 1), DomainError);
}

TEST_CASE("summary statistics") {
  const std::vector<double> values{1.0, 2.0, 3.0, 4.0};
  const auto stats = sim::summarize(values);
  CHECK(stats.mean == doctest::Approx(2.5));
  CHECK(stats.std_error == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
  CHECK(sim::summarize(std::vector<double>{7.0}).std_error == 0.0);
}

TEST_CASE("ensemble spec validation and policy names") {
  sim::EnsembleSpec spec;
  spec.trials = 0;
  CHECK_THROWS_AS(spec.validate(), DomainError);
  spec = {};
  spec.policy = sim::Policy::peak_mse;
  spec.peak_limit = -1.0;
  CHECK_THROWS_AS(sim::ensemble_average(spec, sim::FadingModel(1.0)), DomainError);
  spec = {};
  spec.policy = sim::Policy::sum_power_pw;
  spec.mse_limit_per_sensor = 0.0;
  CHECK_THROWS_AS(spec.validate(), DomainError);
  CHECK(sim::policy_from_string("peak_mse") == sim::Policy::peak_mse);
  CHECK_THROWS_AS(sim::policy_from_string("water_filling"), DomainError);
}

TEST_CASE("ensemble result does not depend on the worker count") {
  for (auto policy : {sim::Policy::sum_power_mse, sim::Policy::sum_power_pw, sim::Policy::peak_mse}) {
    sim::EnsembleSpec spec;
    spec.sensors = 6;
    spec.trials = 2'000;
    spec.policy = policy;
    spec.seed = 77;
    const auto one = sim::ensemble_average(spec, sim::FadingModel(1.0), 1);
    const auto three = sim::ensemble_average(spec, sim::FadingModel(1.0), 3);
    const auto seven = sim::ensemble_average(spec, sim::FadingModel(1.0), 7);
    CHECK(one.mean == three.mean);
    CHECK(one.std_error == three.std_error);
    CHECK(one.mean == seven.mean);
    CHECK(one.trials == 2'000);
  }
}

TEST_CASE("ensemble trends") {
  sim::EnsembleSpec spec;
  spec.trials = 20'000;
  spec.seed = 3;
  double previous = INFINITY, previous_se = 0.0;
  for (int k : {5, 10, 20}) {
    spec.sensors = k;
    const auto stats = sim::ensemble_average(spec, sim::FadingModel(1.0));
    CHECK(stats.mean + 5 * std::hypot(stats.std_error, previous_se) < previous);
    previous = stats.mean;
    previous_se = stats.std_error;
  }

  spec.sensors = 10;
  spec.trials = 5'000;
  const auto sum_policy = sim::ensemble_average(spec, sim::FadingModel(1.0));
  spec.policy = sim::Policy::peak_mse;
  const auto peak_policy = sim::ensemble_average(spec, sim::FadingModel(1.0));
  CHECK(sum_policy.mean < peak_policy.mean);

  spec.policy = sim::Policy::sum_power_pw;
  spec.mse_limit_per_sensor = 0.2;
  spec.trials = 20'000;
  const auto weak = sim::ensemble_average(spec, sim::FadingModel(0.5));
  const auto strong = sim::ensemble_average(spec, sim::FadingModel(1.0));
  CHECK(strong.mean < weak.mean);
}
