#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "aircomp/baseline_peak.hpp"
#include "aircomp/mse_policy.hpp"
#include "aircomp/power_policy.hpp"
#include "aircomp/simulator.hpp"
#include "csv.hpp"
#include "experiments.hpp"

namespace aircomp::tools {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::uint64_t seed = 1;
  std::string out_dir;
  long long trials = 1'000'000;
  bool quiet = false;
  unsigned workers = 0;
};

struct ChannelOptions {
  std::string channels;
  std::string channels_file;
  std::string set;
  bool power_gains = false;
  double noise_var = 1.0;

  void attach(CLI::App* cmd) {
    auto* direct = cmd->add_option("--channels", channels, "Comma-separated channel magnitudes h_k");
    auto* file = cmd->add_option("--channels-file", channels_file, "File of channel values (comma/whitespace separated)");
    auto* named = cmd->add_option("--set", set, "Named channel-power set")->check(CLI::IsMember({"S1", "S2"}));
    direct->excludes(file)->excludes(named);
    file->excludes(named);
    cmd->add_flag("--power-gains", power_gains, "Interpret channel values as |h_k|^2 instead of |h_k|");
    cmd->add_option("--noise-var", noise_var, "Receiver noise variance sigma^2")->capture_default_str();
  }

  SystemInstance instance() const {
    std::vector<double> values;
    bool as_power = power_gains;
    if (!channels.empty()) {
      values = parse_real_list(channels);
    } else if (!channels_file.empty()) {
      std::string text;
      try {
        text = read_text_file(channels_file);
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      for (auto& ch : text) {
        if (ch == '\n' || ch == '\r' || ch == '\t' || ch == ' ' || ch == ';') ch = ',';
      }
      values = parse_real_list(text);
    } else if (!set.empty()) {
      values = channel_power_set(set);
      as_power = true;
    } else {
      throw UsageError("one of --channels, --channels-file or --set is required");
    }
    auto vec = as_power ? ChannelVector::from_power_gains(values) : ChannelVector(std::move(values));
    return SystemInstance(std::move(vec), noise_var);
  }

  std::string describe() const {
    if (!channels.empty()) return channels;
    if (!channels_file.empty()) return "file:" + channels_file;
    return "set:" + set;
  }
};

std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ' ';
    s += args[i];
  }
  return s;
}

std::string join_numbers(const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += format_number(values[i]);
  }
  return s;
}

class Emitter {
 public:
  Emitter(const GlobalOptions& globals, std::string command_line, std::ostream& out, std::ostream& err)
      : globals_(globals), command_line_(std::move(command_line)), out_(out), err_(err),
        start_(std::chrono::steady_clock::now()) {}

  void emit(const std::string& subcommand, const std::string& stem, const CsvTable& table,
            std::vector<std::pair<std::string, std::string>> parameters) {
    RunManifest manifest;
    manifest.subcommand = subcommand;
    manifest.command_line = command_line_;
    manifest.parameters = std::move(parameters);
    manifest.parameters.emplace_back("trials", std::to_string(globals_.trials));
    manifest.parameters.emplace_back("workers", std::to_string(globals_.workers));
    manifest.seed = globals_.seed;
    manifest.tool_version = kToolVersion;
    manifest.duration = std::chrono::steady_clock::now() - start_;

    if (globals_.out_dir.empty()) {
      manifest.output_path = "<stdout>";
      out_ << table.str();
      if (!globals_.quiet) err_ << manifest.str();
      return;
    }
    const std::filesystem::path dir(globals_.out_dir);
    std::filesystem::create_directories(dir);
    const auto csv_path = dir / (stem + ".csv");
    manifest.output_path = csv_path.string();
    write_text_file(csv_path, table.str());
    write_text_file(dir / (stem + ".manifest.txt"), manifest.str());
    if (!globals_.quiet) err_ << "wrote " << csv_path.string() << '\n';
  }

  std::ostream& warn() { return err_; }
  bool quiet() const { return globals_.quiet; }

 private:
  const GlobalOptions& globals_;
  std::string command_line_;
  std::ostream& out_;
  std::ostream& err_;
  std::chrono::steady_clock::time_point start_;
};

CsvTable solve_mse_table(const SystemInstance& instance, double sum_power_limit) {
  const auto report = solve_min_mse(instance, sum_power_limit);
  CsvTable table({"sensor", "h[amplitude]", "b_opt[amplitude]", "b_opt_power[power]", "g_opt[amplitude]",
                  "mse_opt[power]", "sum_power[power]"});
  for (std::size_t k = 0; k < instance.sensors(); ++k) {
    const double b = report.design.tx_gains[k];
    table.add_row({std::to_string(k + 1), format_number(instance.channels()[k]), format_number(b),
                   format_number(b * b), format_number(report.design.rx_gain), format_number(report.mse_star),
                   format_number(report.power_used)});
  }
  return table;
}

CsvTable solve_power_table(const SystemInstance& instance, double mse_limit, Emitter& emitter) {
  const auto report = solve_min_power(instance, mse_limit);
  CsvTable table({"sensor", "h[amplitude]", "b_opt[amplitude]", "b_opt_power[power]", "tau[-]", "g_opt[amplitude]",
                  "m_fixed_point[-]", "kkt_multiplier[-]", "pw_opt[power]", "note"});
  const std::string note = report.trivial ? "trivial" : "";
  if (report.trivial && !emitter.quiet()) {
    emitter.warn() << "warning: trivial case, MSE limit " << format_number(mse_limit)
                   << " >= K; the zero design is optimal\n";
  }
  for (std::size_t k = 0; k < instance.sensors(); ++k) {
    const double b = report.design.tx_gains[k];
    const double tau = report.trivial ? 1.0 : report.diagnostics.taus[k];
    table.add_row({std::to_string(k + 1), format_number(instance.channels()[k]), format_number(b),
                   format_number(b * b), format_number(tau), format_number(report.design.rx_gain),
                   format_number(report.diagnostics.m_value), format_number(report.diagnostics.kkt_multiplier),
                   format_number(report.pw_star), note});
  }
  return table;
}

CsvTable peak_table(const SystemInstance& instance, double peak_limit) {
  const auto result = solve_min_mse_peak(instance, PeakConstraint(peak_limit));
  CsvTable table({"sensor", "h[amplitude]", "b[amplitude]", "b_power[power]", "g[amplitude]", "mse[power]",
                  "sum_power[power]"});
  for (std::size_t k = 0; k < instance.sensors(); ++k) {
    const double b = result.design.tx_gains[k];
    table.add_row({std::to_string(k + 1), format_number(instance.channels()[k]), format_number(b),
                   format_number(b * b), format_number(result.design.rx_gain), format_number(result.point.mse),
                   format_number(result.point.sum_power)});
  }
  return table;
}

}  // namespace

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a number: '" + token + "'");
    }
    if (token.find_first_not_of(" \t", used) != std::string::npos) {
      throw std::invalid_argument("not a number: '" + token + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) throw std::invalid_argument("empty list");
  return values;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transmit/receive scaling design for over-the-air computation", "aircomp"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions globals;
  app.add_option("--seed", globals.seed, "Master random seed")->capture_default_str();
  app.add_option("--out", globals.out_dir, "Write CSV + manifest into this directory instead of stdout");
  app.add_option("--trials", globals.trials, "Monte Carlo trials")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--workers", globals.workers, "Worker threads for Monte Carlo (0 = all cores)")
      ->capture_default_str();
  app.add_flag("--quiet", globals.quiet, "Suppress manifests and warnings on stderr");

  // solve-mse
  auto* solve_mse_cmd = app.add_subcommand("solve-mse", "Minimum MSE under a sum-power limit");
  ChannelOptions mse_channels;
  mse_channels.attach(solve_mse_cmd);
  double sum_power_limit = 0.0;
  solve_mse_cmd->add_option("--sum-power", sum_power_limit, "Sum-power limit P")->required();

  // solve-power
  auto* solve_power_cmd = app.add_subcommand("solve-power", "Minimum sum power under an MSE limit");
  ChannelOptions power_channels;
  power_channels.attach(solve_power_cmd);
  double mse_limit = 0.0;
  solve_power_cmd->add_option("--mse-limit", mse_limit, "Computation-MSE limit eps")->required();

  // baseline-peak
  auto* peak_cmd = app.add_subcommand("baseline-peak", "Minimum MSE under per-sensor power caps");
  ChannelOptions peak_channels;
  peak_channels.attach(peak_cmd);
  double peak_limit = 0.0;
  peak_cmd->add_option("--peak-limit", peak_limit, "Per-sensor power cap P0")->required();

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Rayleigh-fading ensemble average of one policy");
  sim::EnsembleSpec spec;
  std::string policy_name = "sum_power_mse";
  double mean_gain = 1.0;
  sim_cmd->add_option("--policy", policy_name, "Policy")
      ->check(CLI::IsMember({"sum_power_mse", "sum_power_pw", "peak_mse"}))
      ->capture_default_str();
  sim_cmd->add_option("--sensors", spec.sensors, "Number of sensors K")->capture_default_str()->check(
      CLI::PositiveNumber);
  sim_cmd->add_option("--mean-gain", mean_gain, "Mean channel-power gain E[h^2]")->capture_default_str();
  sim_cmd->add_option("--sum-power-per-sensor", spec.sum_power_limit_per_sensor, "P/K")->capture_default_str();
  sim_cmd->add_option("--mse-limit-per-sensor", spec.mse_limit_per_sensor, "eps/K")->capture_default_str();
  sim_cmd->add_option("--peak-limit", spec.peak_limit, "Per-sensor cap P0")->capture_default_str();
  sim_cmd->add_option("--noise-var", spec.noise_variance, "Noise variance")->capture_default_str();

  // fig
  auto* fig_cmd = app.add_subcommand("fig", "Regenerate figure data as CSV");
  int which = 0;
  FigureDefaults fig;
  fig_cmd->add_option("--which", which, "Figure id")->required()->check(CLI::IsMember({1, 2, 3, 4}));
  fig_cmd->add_option("--noise-var", fig.noise_variance, "Noise variance")->capture_default_str();
  std::string fig2_limits, fig4_gains, fig4_sensors;
  fig_cmd->add_option("--mse-limits", fig2_limits, "fig2: comma-separated MSE limits (default 1,3,5,7)");
  fig_cmd->add_option("--fig3-points", fig.fig3_points, "fig3: sweep points")->capture_default_str();
  fig_cmd->add_option("--mean-gains", fig4_gains, "fig4: comma-separated mean channel-power gains (default 0.5,1)");
  fig_cmd->add_option("--sensors-list", fig4_sensors, "fig4: comma-separated K values (default 5,...,30)");

  std::vector<std::string> argv_store(args);
  if (argv_store.empty()) argv_store.emplace_back("aircomp");
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  Emitter emitter(globals, join_args(args), out, err);
  const auto number_list = [](const std::string& text) {
    try {
      return parse_real_list(text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  };
  const auto channel_instance = [&](const ChannelOptions& opts) {
    try {
      return opts.instance();
    } catch (const DomainError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--channels: ") + e.what());
    }
  };

  try {
    if (*solve_mse_cmd) {
      const auto instance = channel_instance(mse_channels);
      emitter.emit("solve-mse", "solve_mse", solve_mse_table(instance, sum_power_limit),
                   {{"channels", mse_channels.describe()},
                    {"power_gains", mse_channels.power_gains ? "true" : "false"},
                    {"noise_var", format_number(mse_channels.noise_var)},
                    {"sum_power", format_number(sum_power_limit)}});
    } else if (*solve_power_cmd) {
      const auto instance = channel_instance(power_channels);
      emitter.emit("solve-power", "solve_power", solve_power_table(instance, mse_limit, emitter),
                   {{"channels", power_channels.describe()},
                    {"power_gains", power_channels.power_gains ? "true" : "false"},
                    {"noise_var", format_number(power_channels.noise_var)},
                    {"mse_limit", format_number(mse_limit)}});
    } else if (*peak_cmd) {
      const auto instance = channel_instance(peak_channels);
      emitter.emit("baseline-peak", "baseline_peak", peak_table(instance, peak_limit),
                   {{"channels", peak_channels.describe()},
                    {"power_gains", peak_channels.power_gains ? "true" : "false"},
                    {"noise_var", format_number(peak_channels.noise_var)},
                    {"peak_limit", format_number(peak_limit)}});
    } else if (*sim_cmd) {
      spec.policy = sim::policy_from_string(policy_name);
      spec.trials = globals.trials;
      spec.seed = globals.seed;
      const sim::FadingModel model(mean_gain);
      const auto stats = sim::ensemble_average(spec, model, globals.workers);
      CsvTable table({"policy", "mean_power_gain[power]", "sensors", "trials", "mean_per_sensor[power]",
                      "std_error[power]"});
      table.add_row({policy_name, format_number(mean_gain), std::to_string(spec.sensors),
                     std::to_string(stats.trials), format_number(stats.mean), format_number(stats.std_error)});
      emitter.emit("simulate", "simulate", table,
                   {{"policy", policy_name},
                    {"sensors", std::to_string(spec.sensors)},
                    {"mean_gain", format_number(mean_gain)},
                    {"sum_power_per_sensor", format_number(spec.sum_power_limit_per_sensor)},
                    {"mse_limit_per_sensor", format_number(spec.mse_limit_per_sensor)},
                    {"peak_limit", format_number(spec.peak_limit)},
                    {"noise_var", format_number(spec.noise_variance)}});
    } else if (*fig_cmd) {
      if (!fig2_limits.empty()) fig.fig2_mse_limits = number_list(fig2_limits);
      if (!fig4_gains.empty()) fig.fig4_mean_gains = number_list(fig4_gains);
      if (!fig4_sensors.empty()) {
        fig.fig4_sensors.clear();
        for (double v : number_list(fig4_sensors)) {
          if (v < 1 || v != std::floor(v)) throw UsageError("--sensors-list needs positive integers");
          fig.fig4_sensors.push_back(static_cast<int>(v));
        }
      }
      fig.trials = globals.trials;
      fig.seed = globals.seed;
      fig.workers = globals.workers;
      std::vector<std::pair<std::string, std::string>> params{{"which", std::to_string(which)},
                                                              {"noise_var", format_number(fig.noise_variance)}};
      CsvTable table({});
      switch (which) {
        case 1:
          table = figure1(fig);
          break;
        case 2:
          table = figure2(fig);
          params.emplace_back("mse_limits", join_numbers(fig.fig2_mse_limits));
          break;
        case 3:
          table = figure3(fig);
          params.emplace_back("fig3_points", std::to_string(fig.fig3_points));
          params.emplace_back("fig3_range", format_number(fig.fig3_lo) + "," + format_number(fig.fig3_hi));
          break;
        default: {
          table = figure4(fig);
          std::vector<double> ks(fig.fig4_sensors.begin(), fig.fig4_sensors.end());
          params.emplace_back("mean_gains", join_numbers(fig.fig4_mean_gains));
          params.emplace_back("sensors_list", join_numbers(ks));
          params.emplace_back("sum_power_per_sensor", format_number(fig.fig4_sum_power_per_sensor));
          params.emplace_back("peak_limit", format_number(fig.fig4_peak_limit));
          break;
        }
      }
      emitter.emit("fig", "fig" + std::to_string(which), table, std::move(params));
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kSolverFailure;
  } catch (const SolverFailure& e) {
    err << "solver failure: " << e.what() << '\n';
    return kSolverFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kSolverFailure;
  }
  return kSuccess;
}

}  // namespace aircomp::tools
