#include "experiments.hpp"

#include <cmath>
#include <stdexcept>

#include "aircomp/mse_policy.hpp"
#include "aircomp/power_policy.hpp"
#include "aircomp/rng.hpp"
#include "aircomp/simulator.hpp"

namespace aircomp::tools {

std::vector<double> channel_power_set(const std::string& name) {
  if (name == "S1") return std::vector<double>(10, 1.0);
  if (name == "S2") return {0.1, 0.3, 0.5, 0.7, 0.9, 1.1, 1.3, 1.5, 1.7, 1.9};
  throw DomainError("unknown channel set '" + name + "'");
}

namespace {

SystemInstance named_instance(const std::string& set, double noise_variance) {
  return SystemInstance(ChannelVector::from_power_gains(channel_power_set(set)), noise_variance);
}

const std::vector<std::string> kSets{"S1", "S2"};

}  // namespace

CsvTable figure1(const FigureDefaults& opts) {
  CsvTable table({"set", "trace", "parameter", "mse[power]", "sum_power[power]"});
  for (const auto& set : kSets) {
    const auto instance = named_instance(set, opts.noise_variance);
    // P = 10^(-1 + i/10), i = 0..40
    for (int i = 0; i <= 40; ++i) {
      const double limit = std::pow(10.0, -1.0 + i / 10.0);
      const auto report = solve_min_mse(instance, limit);
      table.add_row({set, "sweep_sum_power", format_number(limit), format_number(report.mse_star),
                     format_number(report.power_used)});
    }
    const double sensors = static_cast<double>(instance.sensors());
    for (int i = 1; 0.5 * i < sensors; ++i) {
      const double limit = 0.5 * i;
      const auto report = solve_min_power(instance, limit);
      table.add_row({set, "sweep_mse_limit", format_number(limit), format_number(mse(instance, report.design)),
                     format_number(report.pw_star)});
    }
  }
  return table;
}

CsvTable figure2(const FigureDefaults& opts) {
  CsvTable table({"set", "mse_limit[power]", "sensor", "channel_power_gain[power]", "h[amplitude]",
                  "b[amplitude]", "b_power[power]"});
  for (const auto& set : kSets) {
    const auto gains = channel_power_set(set);
    const auto instance = named_instance(set, opts.noise_variance);
    for (double limit : opts.fig2_mse_limits) {
      const auto report = solve_min_power(instance, limit);
      for (std::size_t k = 0; k < gains.size(); ++k) {
        const double b = report.design.tx_gains[k];
        table.add_row({set, format_number(limit), std::to_string(k + 1), format_number(gains[k]),
                       format_number(instance.channels()[k]), format_number(b), format_number(b * b)});
      }
    }
  }
  return table;
}

CsvTable figure3(const FigureDefaults& opts) {
  if (opts.fig3_points < 2 || !(opts.fig3_lo > 0.0) || !(opts.fig3_hi > opts.fig3_lo)) {
    throw DomainError("fig3 sweep needs >= 2 points and 0 < lo < hi");
  }
  CsvTable table({"set", "mse_limit[power]", "g[amplitude]", "sum_power[power]"});
  for (const auto& set : kSets) {
    const auto instance = named_instance(set, opts.noise_variance);
    for (int i = 0; i < opts.fig3_points; ++i) {
      const double limit =
          opts.fig3_lo * std::pow(opts.fig3_hi / opts.fig3_lo, static_cast<double>(i) / (opts.fig3_points - 1));
      const auto report = solve_min_power(instance, limit);
      table.add_row(
          {set, format_number(limit), format_number(report.design.rx_gain), format_number(report.pw_star)});
    }
  }
  return table;
}

std::uint64_t figure4_seed(std::uint64_t master, std::size_t gain_index, int sensors) {
  return substream_seed(master, gain_index * 100000 + static_cast<std::uint64_t>(sensors));
}

CsvTable figure4(const FigureDefaults& opts) {
  CsvTable table({"policy", "mean_power_gain[power]", "sensors", "trials", "mse_per_sensor[power]",
                  "std_error[power]"});
  for (std::size_t gi = 0; gi < opts.fig4_mean_gains.size(); ++gi) {
    const sim::FadingModel model(opts.fig4_mean_gains[gi]);
    for (int sensors : opts.fig4_sensors) {
      for (auto policy : {sim::Policy::sum_power_mse, sim::Policy::peak_mse}) {
        sim::EnsembleSpec spec;
        spec.sensors = sensors;
        spec.trials = opts.trials;
        spec.policy = policy;
        spec.sum_power_limit_per_sensor = opts.fig4_sum_power_per_sensor;
        spec.peak_limit = opts.fig4_peak_limit;
        spec.noise_variance = opts.noise_variance;
        spec.seed = figure4_seed(opts.seed, gi, sensors);
        const auto stats = sim::ensemble_average(spec, model, opts.workers);
        table.add_row({std::string(sim::to_string(policy)), format_number(model.mean_power_gain()),
                       std::to_string(sensors), std::to_string(stats.trials), format_number(stats.mean),
                       format_number(stats.std_error)});
      }
    }
  }
  return table;
}

}  // namespace aircomp::tools
