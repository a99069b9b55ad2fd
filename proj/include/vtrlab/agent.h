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

#ifndef VTRLAB_AGENT_H_
#define VTRLAB_AGENT_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vtrlab/canonical_model.h"
#include "vtrlab/counts.h"
#include "vtrlab/env.h"
#include "vtrlab/planners.h"
#include "vtrlab/regression.h"
#include "vtrlab/rng.h"

namespace vtrlab {

enum class AgentKind { kUcrlVtr, kEgVtr, kEgFreq, kUcMatrixRl, kUcrlMix };

std::string_view AgentKindName(AgentKind kind);
std::optional<AgentKind> ParseAgentKind(std::string_view name);

// Value-targeted regression model (UCRL-VTR, EG-VTR, UCRL-MIX).
bool UsesValueTargets(AgentKind kind);
// Frequency-based canonical model (EG-Freq, UC-MatrixRL, UCRL-MIX).
bool UsesCanonicalModel(AgentKind kind);
// Epsilon-greedy actor (EG-VTR, EG-Freq).
bool IsDithering(AgentKind kind);

struct AgentParams {
  AgentKind kind = AgentKind::kUcrlVtr;
  double epsilon = 0.01;
  double lambda = 1.0;
  double delta = 0.01;
  // Bound on ||theta*||_2; <= 0 selects sqrt(|S||A|) of the tabular embedding.
  double norm_bound = 0.0;
  // UCRL-MIX only: false plans with the value-targeted model everywhere.
  bool mix_canonical_enabled = true;
};

// Everything recorded during one episode. Features and targets are taken
// against the planned V_{h+1} of this episode.
struct EpisodeTrace {
  std::vector<int> states;  // H + 1 entries, s_1 .. s_{H+1}
  std::vector<int> actions;
  std::vector<double> rewards;
  std::vector<FeatureVector> features;
  std::vector<double> targets;
  ModelChoiceTally model_choices;
};

struct EpisodePlan {
  ValueTables values;
  ModelChoiceTally model_choices;
};

// One learner. Owns its model state; not shared across threads.
class Agent {
 public:
  Agent(const Environment& env, const AgentParams& params);

  const AgentParams& params() const { return params_; }
  AgentKind kind() const { return params_.kind; }
  int horizon() const { return horizon_; }
  int num_actions() const { return mixture_.num_actions(); }
  double norm_bound() const { return norm_bound_; }
  const LinearMixtureMdp& mixture() const { return mixture_; }

  // Null for agents that do not maintain that model.
  const RegressionState* regression() const { return regression_ ? &*regression_ : nullptr; }
  const CanonicalModelState* canonical() const { return canonical_ ? &*canonical_ : nullptr; }
  const VisitCounts& counts() const { return counts_; }

  // Plans once for the coming episode from the current model state.
  EpisodePlan Plan() const;

  // Greedy action, or for dithering agents: one coin draw, then one
  // uniform action draw when the coin comes up below epsilon.
  int ChooseAction(const ValueTables& values, int h, int s, CounterRng& rng) const;

  // Applies the episode's data to every model the agent maintains.
  void EndOfEpisode(const EpisodeTrace& trace);

 private:
  AgentParams params_;
  int horizon_;
  double norm_bound_;
  LinearMixtureMdp mixture_;
  std::vector<double> rewards_;
  std::optional<RegressionState> regression_;
  std::optional<CanonicalModelState> canonical_;
  VisitCounts counts_;
};

// Rolls out H steps from the initial state with the planned values.
EpisodeTrace RunEpisode(const Agent& agent, const TabularMdp& mdp,
                        const ValueTables& values, CounterRng& rng);

inline void EndOfEpisodeUpdate(Agent& agent, const EpisodeTrace& trace) {
  agent.EndOfEpisode(trace);
}

}  // namespace vtrlab

#endif  // VTRLAB_AGENT_H_
