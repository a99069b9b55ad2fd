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

#ifndef VTRLAB_CONFIG_H_
#define VTRLAB_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vtrlab/agent.h"
#include "vtrlab/env.h"
#include "vtrlab/error.h"

namespace vtrlab {

// Malformed or invalid experiment configuration. line() is 0 when the
// problem is not tied to a single line (e.g. a missing key).
class ConfigError : public Error {
 public:
  ConfigError(int line, std::string key, const std::string& message);

  int line() const { return line_; }
  const std::string& key() const { return key_; }

 private:
  int line_;
  std::string key_;
};

enum class EnvName { kRiverSwim, kWideTree };

std::string_view EnvNameString(EnvName env);

// Default run counts: dithering agents are averaged over more runs.
inline constexpr int kDefaultRunsDithering = 30;
inline constexpr int kDefaultRunsOptimistic = 10;

struct ExperimentConfig {
  EnvName env = EnvName::kRiverSwim;
  RiverSwimSpec riverswim;
  WideTreeSpec widetree;

  std::vector<AgentKind> agents;
  std::optional<double> epsilon;
  double lambda = 1.0;
  std::optional<double> delta;
  std::optional<double> norm_bound;
  bool mix_canonical = true;

  int episodes = 0;
  std::optional<int> runs;
  std::uint64_t seed = 1;
  std::string output_dir = "out";
  bool emit_plots = false;

  // 0.01 on RiverSwim, 0.1 on WideTree unless set.
  double EffectiveEpsilon() const;
  // 1 / K unless set.
  double EffectiveDelta() const;
  int RunsFor(AgentKind kind) const;
  AgentParams ParamsFor(AgentKind kind) const;
  Environment BuildEnvironment() const;
};

// Line-oriented `key = value` text with [env], [agent] and [run] sections.
// '#' starts a comment. Unknown or duplicate keys are errors.
//
//   [env]    name = riverswim | widetree, states, horizon, p_success,
//            p_stay, p_back, reward_left, reward_right, terminals_per_branch
//   [agent]  name = comma-separated agent kinds, epsilon, lambda, delta,
//            norm_bound, mix_canonical
//   [run]    episodes, runs, seed, output_dir, emit_plots
ExperimentConfig ParseConfig(std::string_view text);

// Reads and parses a file; I/O failures surface as ConfigError.
ExperimentConfig LoadConfig(const std::string& path);

}  // namespace vtrlab

#endif  // VTRLAB_CONFIG_H_
