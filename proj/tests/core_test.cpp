#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "aircomp/core.hpp"
#include "test_support.hpp"

using namespace aircomp;
using aircomp::testing::close_rel;

TEST_CASE("channel vector rejects empty, zero, negative and non-finite gains") {
  CHECK_THROWS_AS(ChannelVector({}), DomainError);
  CHECK_THROWS_AS(ChannelVector({1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(ChannelVector({-0.5}), DomainError);
  CHECK_THROWS_AS(ChannelVector({std::nan("")}), DomainError);
  CHECK_THROWS_AS(ChannelVector({INFINITY}), DomainError);
  const ChannelVector h({0.5, 2.0, 1.0});
  CHECK(h.size() == 3);
  CHECK(h.min() == 0.5);
  CHECK(h.max() == 2.0);
}

TEST_CASE("power gains convert to magnitudes") {
  const std::vector<double> gains{0.25, 4.0};
  const auto h = ChannelVector::from_power_gains(gains);
  CHECK(h[0] == doctest::Approx(0.5));
  CHECK(h[1] == doctest::Approx(2.0));
}

TEST_CASE("instance requires positive finite noise variance") {
  CHECK_THROWS_AS(SystemInstance(ChannelVector({1.0}), 0.0), DomainError);
  CHECK_THROWS_AS(SystemInstance(ChannelVector({1.0}), -1.0), DomainError);
  CHECK_THROWS_AS(SystemInstance(ChannelVector({1.0}), INFINITY), DomainError);
}

TEST_CASE("mse examples") {
  const auto ten = testing::uniform_instance(10, 0.7, 1.0);
  CHECK(mse(ten, TxRxDesign::zero(10)) == 10.0);

  const SystemInstance three(ChannelVector({1.0, 2.0, 4.0}), 0.5);
  CHECK(mse(three, TxRxDesign{1.0, {1.0, 0.5, 0.25}}) == doctest::Approx(0.5).epsilon(1e-12));

  // (10/11 - 1)^2 * 10 + (10/11)^2 = 10/121 + 100/121
  const auto unit = testing::uniform_instance(10, 1.0, 1.0);
  CHECK(close_rel(mse(unit, TxRxDesign{10.0 / 11.0, std::vector<double>(10, 1.0)}), 10.0 / 11.0, 1e-12));
}

TEST_CASE("mse rejects mismatched designs") {
  const auto inst = testing::uniform_instance(3, 1.0, 1.0);
  CHECK_THROWS_AS(mse(inst, TxRxDesign::zero(2)), DimensionMismatch);
  CHECK_THROWS_AS(received_output(inst, TxRxDesign::zero(3), std::vector<double>{1.0}, 0.0), DimensionMismatch);
}

TEST_CASE("sum power examples") {
  CHECK(sum_power(TxRxDesign::zero(5)) == 0.0);
  CHECK(sum_power(TxRxDesign{1.0, std::vector<double>(10, 1.0)}) == 10.0);
  CHECK(sum_power(TxRxDesign{1.0, {3.0, 4.0}}) == 25.0);
}

TEST_CASE("received output examples") {
  const SystemInstance single(ChannelVector({2.0}), 1.0);
  CHECK(received_output(single, TxRxDesign{0.0, {3.0}}, std::vector<double>{1.0}, 0.5) == 0.0);
  CHECK(received_output(single, TxRxDesign{1.0, {3.0}}, std::vector<double>{1.0}, 0.5) == 6.5);
  const auto pair = testing::uniform_instance(2, 1.0, 1.0);
  CHECK(received_output(pair, TxRxDesign{2.0, {1.0, 1.0}}, std::vector<double>{1.0, -1.0}, 0.0) == 0.0);
}

TEST_CASE("mse properties on random instances") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.05, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = testing::random_instance(rng, 1, 12);
    const std::size_t k = inst.sensors();
    CHECK(mse(inst, TxRxDesign::zero(k)) == static_cast<double>(k));

    // Perfect alignment leaves only the noise term.
    const double g = unit(rng);
    TxRxDesign aligned{g, {}};
    for (double h : inst.channels().gains()) aligned.tx_gains.push_back(1.0 / (g * h));
    CHECK(close_rel(mse(inst, aligned), inst.noise_variance() * g * g, 1e-9));

    // Joint permutation of (h_k, b_k) leaves both metrics unchanged.
    TxRxDesign design{unit(rng), {}};
    for (std::size_t i = 0; i < k; ++i) design.tx_gains.push_back(unit(rng));
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<double> h_perm;
    TxRxDesign permuted{design.rx_gain, {}};
    for (auto i : order) {
      h_perm.push_back(inst.channels()[i]);
      permuted.tx_gains.push_back(design.tx_gains[i]);
    }
    const SystemInstance inst_perm(ChannelVector(h_perm), inst.noise_variance());
    CHECK(close_rel(mse(inst_perm, permuted), mse(inst, design), 1e-12));
    CHECK(close_rel(sum_power(permuted), sum_power(design), 1e-12));
  }
}
