// Copyright 2026 The vtr-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: runs experiments and the theory utilities.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vtrlab/config.h"
#include "vtrlab/csv.h"
#include "vtrlab/env.h"
#include "vtrlab/error.h"
#include "vtrlab/experiment.h"
#include "vtrlab/svg_plot.h"
#include "vtrlab/theory.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

// Whitespace-separated values, one function per line; '#' starts a comment.
std::vector<std::vector<double>> ReadTable(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw vtrlab::InvalidArgumentError("cannot open table file " + path);
  std::vector<std::vector<double>> table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream row(line);
    std::vector<double> values;
    std::string token;
    while (row >> token) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw vtrlab::InvalidArgumentError(path + ":" + std::to_string(line_no) +
                                           ": bad number '" + token + "'");
      }
      values.push_back(v);
    }
    if (!values.empty()) table.push_back(std::move(values));
  }
  if (table.empty()) throw vtrlab::InvalidArgumentError(path + ": no functions");
  return table;
}

vtrlab::FiniteFunctionClass LoadClass(const std::string& path, double bound) {
  std::vector<std::vector<double>> table = ReadTable(path);
  const int n = static_cast<int>(table.front().size());
  if (bound <= 0.0) {
    for (const auto& row : table) {
      for (double v : row) bound = std::max(bound, std::abs(v));
    }
  }
  return vtrlab::FiniteFunctionClass(n, std::move(table), bound);
}

int CmdRun(const std::string& config_path, const std::string& out_override, int threads,
           bool plots) {
  vtrlab::ExperimentConfig config = vtrlab::LoadConfig(config_path);
  if (!out_override.empty()) config.output_dir = out_override;
  if (plots) config.emit_plots = true;

  const vtrlab::ExperimentResult result = vtrlab::RunExperiment(config, threads);
  std::filesystem::create_directories(config.output_dir);
  const std::string env_name(vtrlab::EnvNameString(config.env));
  std::vector<vtrlab::PlotSeries> series;
  for (const vtrlab::AgentResult& agent : result.agents) {
    const std::string name(vtrlab::AgentKindName(agent.kind));
    const std::string path =
        (std::filesystem::path(config.output_dir) / (env_name + "_" + name + ".csv")).string();
    vtrlab::WriteCurvesCsv(path, agent.curves);
    const double final_regret =
        agent.curves.num_episodes() > 0 ? agent.curves.pseudo_regret_mean.back() : 0.0;
    std::printf("%-12s runs=%-3d final pseudo-regret %.4f -> %s\n", name.c_str(),
                agent.curves.num_runs, final_regret, path.c_str());
    series.push_back({name, &agent.curves});
  }
  if (config.emit_plots) {
    const std::string path =
        (std::filesystem::path(config.output_dir) / (env_name + ".svg")).string();
    vtrlab::WritePlotSvg(path, series, env_name);
    std::printf("plot -> %s\n", path.c_str());
  }
  return kExitOk;
}

int CmdCalibrate() {
  std::printf("%-8s %-8s %-8s %-8s %-8s %-8s %-8s %s\n", "success", "stay", "back", "r_left",
              "V(S=3)", "V(S=4)", "V(S=5)", "match");
  for (const vtrlab::CalibrationRow& row : vtrlab::RiverSwimCalibrationSweep()) {
    std::printf("%-8.3g %-8.3g %-8.3g %-8.3g %-8.4f %-8.4f %-8.4f %s\n", row.p_right_success,
                row.p_right_stay, row.p_right_back, row.reward_left_at_s1,
                row.optimal_values[0], row.optimal_values[1], row.optimal_values[2],
                row.matches_reference ? "yes" : "no");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vtr-lab: value-targeted regression experiments"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run an experiment from a config file");
  std::string config_path;
  std::string out_dir;
  int threads = 0;
  bool plots = false;
  run->add_option("--config", config_path, "Experiment config")->required();
  run->add_option("--out", out_dir, "Output directory (overrides the config)");
  run->add_option("--threads", threads, "Worker threads (0 = available parallelism)")
      ->check(CLI::NonNegativeNumber);
  run->add_flag("--plots", plots, "Also write an SVG plot");

  auto* theory = app.add_subcommand("theory", "Function-class complexity utilities");
  theory->require_subcommand(1);
  std::string table_path;
  double bound = 0.0;
  double epsilon = 0.0;
  double alpha = 0.0;
  auto* eluder = theory->add_subcommand("eluder", "Brute-force eluder dimension");
  eluder->add_option("--table", table_path, "Function table file")->required();
  eluder->add_option("--epsilon", epsilon, "Scale")->required();
  eluder->add_option("--bound", bound, "Sup-norm bound (default: max |entry|)");
  auto* cover = theory->add_subcommand("cover", "Brute-force covering number");
  cover->add_option("--table", table_path, "Function table file")->required();
  cover->add_option("--alpha", alpha, "Scale")->required();
  cover->add_option("--bound", bound, "Sup-norm bound (default: max |entry|)");
  auto* beta = theory->add_subcommand("beta", "Confidence width for the general set");
  double delta = 0.0;
  int horizon = 0;
  long long episode = 0;
  double log_cover = 0.0;
  beta->add_option("--alpha", alpha, "Covering scale")->required();
  beta->add_option("--delta", delta, "Failure probability")->required();
  beta->add_option("--horizon", horizon, "Horizon H")->required();
  beta->add_option("--episode", episode, "Episode k")->required();
  beta->add_option("--log-cover", log_cover, "log covering number")->required();

  auto* calibrate = app.add_subcommand("calibrate", "Print the RiverSwim calibration sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) return CmdRun(config_path, out_dir, threads, plots);
    if (*eluder) {
      std::printf("%d\n", vtrlab::EluderDimensionBruteForce(LoadClass(table_path, bound), epsilon));
      return kExitOk;
    }
    if (*cover) {
      std::printf("%d\n", vtrlab::CoveringNumberBruteForce(LoadClass(table_path, bound), alpha));
      return kExitOk;
    }
    if (*beta) {
      std::printf("%.17g\n", vtrlab::GeneralBeta(alpha, delta, horizon, episode, log_cover));
      return kExitOk;
    }
    if (*calibrate) return CmdCalibrate();
  } catch (const vtrlab::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const vtrlab::InvalidArgumentError& e) {
    std::fprintf(stderr, "invalid argument: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntime;
  }
  return kExitRuntime;
}
