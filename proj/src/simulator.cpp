#include "aircomp/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "aircomp/baseline_peak.hpp"
#include "aircomp/mse_policy.hpp"
#include "aircomp/power_policy.hpp"

namespace aircomp::sim {

FadingModel::FadingModel(double mean_power_gain) : mean_power_gain_(mean_power_gain) {
  if (!std::isfinite(mean_power_gain_) || mean_power_gain_ <= 0.0) {
    throw DomainError("mean channel-power gain must be finite and positive");
  }
}

std::string_view to_string(Policy policy) noexcept {
  switch (policy) {
    case Policy::sum_power_mse: return "sum_power_mse";
    case Policy::sum_power_pw: return "sum_power_pw";
    case Policy::peak_mse: return "peak_mse";
  }
  return "unknown";
}

Policy policy_from_string(std::string_view name) {
  for (auto p : {Policy::sum_power_mse, Policy::sum_power_pw, Policy::peak_mse}) {
    if (name == to_string(p)) return p;
  }
  throw DomainError("unknown policy '" + std::string(name) + "'");
}

void EnsembleSpec::validate() const {
  if (sensors < 1) throw DomainError("ensemble needs at least one sensor");
  if (trials < 1) throw DomainError("ensemble needs at least one trial");
  if (!(noise_variance > 0.0) || !std::isfinite(noise_variance)) throw DomainError("noise variance must be positive");
  switch (policy) {
    case Policy::sum_power_mse:
      if (!(sum_power_limit_per_sensor > 0.0) || !std::isfinite(sum_power_limit_per_sensor)) {
        throw DomainError("sum_power_mse needs a positive per-sensor sum-power limit");
      }
      break;
    case Policy::sum_power_pw:
      if (!(mse_limit_per_sensor > 0.0) || !std::isfinite(mse_limit_per_sensor)) {
        throw DomainError("sum_power_pw needs a positive per-sensor MSE limit");
      }
      break;
    case Policy::peak_mse:
      if (!(peak_limit > 0.0) || !std::isfinite(peak_limit)) throw DomainError("peak_mse needs a positive peak limit");
      break;
  }
}

ChannelVector sample_channels(const FadingModel& model, int sensors, Engine& engine) {
  if (sensors < 1) throw DomainError("sample_channels needs at least one sensor");
  std::normal_distribution<double> normal;
  const double scale = std::sqrt(model.mean_power_gain() / 2.0);
  std::vector<double> h(static_cast<std::size_t>(sensors));
  for (auto& v : h) {
    double magnitude = 0.0;
    // A zero draw has probability ~0 but is not a valid channel.
    while (magnitude == 0.0) {
      const double u1 = normal(engine);
      const double u2 = normal(engine);
      magnitude = std::hypot(u1, u2);
    }
    v = scale * magnitude;
  }
  return ChannelVector(std::move(h));
}

ChannelVector sample_channels(const FadingModel& model, int sensors, std::uint64_t seed) {
  auto engine = make_engine(seed, 0);
  return sample_channels(model, sensors, engine);
}

AggregateStats summarize(std::span<const double> values) {
  AggregateStats stats;
  stats.trials = static_cast<long long>(values.size());
  if (values.empty()) return stats;
  double mean = 0.0, m2 = 0.0;
  long long n = 0;
  for (double v : values) {
    ++n;
    const double delta = v - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (v - mean);
  }
  stats.mean = mean;
  stats.std_error = n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1) / static_cast<double>(n)) : 0.0;
  return stats;
}

AggregateStats empirical_mse(const SystemInstance& instance, const TxRxDesign& design, long long samples,
                             std::uint64_t seed) {
  check_compatible(instance, design);
  if (samples < 1) throw DomainError("empirical_mse needs at least one sample");
  auto engine = make_engine(seed, 0);
  std::normal_distribution<double> normal;
  const double sigma = std::sqrt(instance.noise_variance());
  std::vector<double> x(instance.sensors());
  std::vector<double> errors(static_cast<std::size_t>(samples));
  for (auto& err : errors) {
    double target = 0.0;
    for (auto& xk : x) {
      xk = normal(engine);
      target += xk;
    }
    const double noise = sigma * normal(engine);
    const double e = received_output(instance, design, x, noise) - target;
    err = e * e;
  }
  return summarize(errors);
}

namespace {

double run_trial(const EnsembleSpec& spec, const FadingModel& model, long long trial) {
  auto engine = make_engine(spec.seed, static_cast<std::uint64_t>(trial));
  const SystemInstance instance(sample_channels(model, spec.sensors, engine), spec.noise_variance);
  const double k = static_cast<double>(spec.sensors);
  switch (spec.policy) {
    case Policy::sum_power_mse: {
      const double limit = k * spec.sum_power_limit_per_sensor;
      const auto report = solve_min_mse(instance, limit);
      if (report.power_used > limit * (1.0 + 1e-9)) throw SolverFailure("trial exceeded its sum-power limit");
      return report.mse_star / k;
    }
    case Policy::sum_power_pw: {
      const double limit = k * spec.mse_limit_per_sensor;
      const auto report = solve_min_power(instance, limit);
      if (mse(instance, report.design) > limit + 1e-8) throw SolverFailure("trial exceeded its MSE limit");
      return report.pw_star / k;
    }
    case Policy::peak_mse: {
      const auto result = solve_min_mse_peak(instance, PeakConstraint(spec.peak_limit));
      for (double b : result.design.tx_gains) {
        if (b * b > spec.peak_limit * (1.0 + 1e-12)) throw SolverFailure("trial exceeded its peak-power limit");
      }
      return result.point.mse / k;
    }
  }
  throw DomainError("unknown policy");
}

}  // namespace

AggregateStats ensemble_average(const EnsembleSpec& spec, const FadingModel& model, unsigned workers) {
  spec.validate();
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const auto trials = spec.trials;
  workers = static_cast<unsigned>(std::min<long long>(workers, trials));

  std::vector<double> values(static_cast<std::size_t>(trials));
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const long long begin = trials * w / workers;
      const long long end = trials * (w + 1) / workers;
      pool.emplace_back([&, begin, end] {
        try {
          for (long long t = begin; t < end; ++t) values[static_cast<std::size_t>(t)] = run_trial(spec, model, t);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return summarize(values);
}

}  // namespace aircomp::sim
