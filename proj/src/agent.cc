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

#include "vtrlab/agent.h"

#include <array>
#include <cmath>
#include <utility>

#include "vtrlab/error.h"

namespace vtrlab {
namespace {

constexpr std::array<std::pair<AgentKind, std::string_view>, 5> kAgentNames = {{
    {AgentKind::kUcrlVtr, "ucrl_vtr"},
    {AgentKind::kEgVtr, "eg_vtr"},
    {AgentKind::kEgFreq, "eg_freq"},
    {AgentKind::kUcMatrixRl, "uc_matrixrl"},
    {AgentKind::kUcrlMix, "ucrl_mix"},
}};

}  // namespace

std::string_view AgentKindName(AgentKind kind) {
  for (const auto& [k, name] : kAgentNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<AgentKind> ParseAgentKind(std::string_view name) {
  for (const auto& [k, n] : kAgentNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

bool UsesValueTargets(AgentKind kind) {
  return kind == AgentKind::kUcrlVtr || kind == AgentKind::kEgVtr ||
         kind == AgentKind::kUcrlMix;
}

bool UsesCanonicalModel(AgentKind kind) {
  return kind == AgentKind::kEgFreq || kind == AgentKind::kUcMatrixRl ||
         kind == AgentKind::kUcrlMix;
}

bool IsDithering(AgentKind kind) {
  return kind == AgentKind::kEgVtr || kind == AgentKind::kEgFreq;
}

Agent::Agent(const Environment& env, const AgentParams& params)
    : params_(params),
      horizon_(env.mdp.horizon()),
      mixture_(env.mixture),
      rewards_(env.mdp.rewards().begin(), env.mdp.rewards().end()),
      counts_(env.mdp.num_states(), env.mdp.num_actions()) {
  if (IsDithering(params.kind) && !(params.epsilon > 0.0 && params.epsilon < 1.0)) {
    throw InvalidArgumentError("Agent: epsilon must lie in (0, 1) for epsilon-greedy agents");
  }
  if (!(params.delta > 0.0 && params.delta < 1.0)) {
    throw InvalidArgumentError("Agent: delta must lie in (0, 1)");
  }
  norm_bound_ = params.norm_bound > 0.0
                    ? params.norm_bound
                    : std::sqrt(static_cast<double>(env.mdp.num_states()) *
                                env.mdp.num_actions());
  if (UsesValueTargets(params.kind)) regression_.emplace(mixture_.dim(), params.lambda);
  if (UsesCanonicalModel(params.kind)) {
    canonical_.emplace(env.mdp.num_states(), env.mdp.num_actions());
  }
}

EpisodePlan Agent::Plan() const {
  const double delta = params_.delta;
  switch (params_.kind) {
    case AgentKind::kUcrlVtr: {
      const Eigen::VectorXd theta = regression_->ThetaHat();
      const auto radii = VtrStageRadii(*regression_, horizon_, norm_bound_, delta);
      return {OptimisticValueIteration(mixture_, {theta.data(), static_cast<std::size_t>(theta.size())},
                                       *regression_, rewards_, horizon_, radii),
              {}};
    }
    case AgentKind::kEgVtr: {
      const Eigen::VectorXd theta = regression_->ThetaHat();
      return {EgValueIteration(mixture_, {theta.data(), static_cast<std::size_t>(theta.size())},
                               rewards_, horizon_, params_.epsilon),
              {}};
    }
    case AgentKind::kEgFreq:
      return {MatrixRlValueIteration(*canonical_, rewards_, horizon_, {}, params_.epsilon), {}};
    case AgentKind::kUcMatrixRl: {
      const auto radii = MatrixRlStageRadii(*canonical_, horizon_, delta);
      return {MatrixRlValueIteration(*canonical_, rewards_, horizon_, radii, 0.0), {}};
    }
    case AgentKind::kUcrlMix: {
      const Eigen::VectorXd theta = regression_->ThetaHat();
      // Union bound over the two confidence sets.
      const auto vtr_radii = VtrStageRadii(*regression_, horizon_, norm_bound_, delta / 2);
      const auto mat_radii = MatrixRlStageRadii(*canonical_, horizon_, delta / 2);
      MixPlan plan = MixValueIteration(
          mixture_, {theta.data(), static_cast<std::size_t>(theta.size())}, *regression_,
          *canonical_, rewards_, horizon_, vtr_radii, mat_radii,
          params_.mix_canonical_enabled);
      return {std::move(plan.values), plan.tally};
    }
  }
  throw InvalidArgumentError("Agent::Plan: unknown agent kind");
}

int Agent::ChooseAction(const ValueTables& values, int h, int s, CounterRng& rng) const {
  if (IsDithering(params_.kind) && rng.Uniform() < params_.epsilon) {
    return rng.UniformInt(num_actions());
  }
  return GreedyAction(values, h, s);
}

void Agent::EndOfEpisode(const EpisodeTrace& trace) {
  const int steps = static_cast<int>(trace.actions.size());
  if (regression_) {
    for (int h = 0; h < steps; ++h) regression_->Update(trace.features[h], trace.targets[h]);
  }
  std::vector<Transition> transitions;
  transitions.reserve(steps);
  for (int h = 0; h < steps; ++h) {
    transitions.push_back({trace.states[h], trace.actions[h], trace.states[h + 1]});
    counts_.Add(trace.states[h], trace.actions[h], trace.states[h + 1]);
  }
  if (canonical_) canonical_->Update(transitions);
}

EpisodeTrace RunEpisode(const Agent& agent, const TabularMdp& mdp,
                        const ValueTables& values, CounterRng& rng) {
  const int H = agent.horizon();
  EpisodeTrace trace;
  trace.states.reserve(H + 1);
  trace.actions.reserve(H);
  trace.rewards.reserve(H);
  trace.features.reserve(H);
  trace.targets.reserve(H);
  int s = mdp.initial_state();
  trace.states.push_back(s);
  for (int h = 1; h <= H; ++h) {
    const int a = agent.ChooseAction(values, h, s, rng);
    const int next = SampleTransition(mdp, s, a, rng);
    const auto next_v = values.v_stage(h + 1);
    trace.actions.push_back(a);
    trace.rewards.push_back(mdp.reward(s, a));
    trace.features.push_back(Features(agent.mixture(), next_v, s, a));
    trace.targets.push_back(next_v[next]);
    trace.states.push_back(next);
    s = next;
  }
  return trace;
}

}  // namespace vtrlab
