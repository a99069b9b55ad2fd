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

#include "vtrlab/experiment.h"

#include <chrono>
#include <exception>
#include <optional>
#include <string>

#include <omp.h>

#include "vtrlab/rng.h"

namespace vtrlab {
namespace {

double ModelErrorVtr(const Agent& agent, std::span<const double> theta,
                     const TabularMdp& mdp) {
  const std::vector<double> p_hat = ThetaToPhat(theta, agent.mixture());
  return WeightedL1Error(p_hat, mdp.transitions(), agent.counts());
}

double ModelErrorCanonical(const CanonicalModelState& canon, const TabularMdp& mdp) {
  const int S = mdp.num_states();
  const int A = mdp.num_actions();
  std::vector<double> p_hat(static_cast<std::size_t>(S) * A * S);
  for (int s = 0; s < S; ++s) {
    for (int a = 0; a < A; ++a) {
      for (int next = 0; next < S; ++next) {
        p_hat[(static_cast<std::size_t>(s) * A + a) * S + next] = canon.Predicted(s, a, next);
      }
    }
  }
  return WeightedL1Error(p_hat, mdp.transitions(), canon.counts());
}

EpisodeDiagnostics Diagnose(const Agent& agent, const Environment& env,
                            double v_star, double planned_value) {
  EpisodeDiagnostics d;
  d.planned_value = planned_value;
  d.optimal_value = v_star;
  if (const RegressionState* reg = agent.regression()) {
    const double delta = agent.kind() == AgentKind::kUcrlMix ? agent.params().delta / 2
                                                             : agent.params().delta;
    const int H = agent.horizon();
    const double distance = reg->MahalanobisDistance(env.mixture.theta_star());
    d.in_set_stage1 = distance <= reg->Radius(1, H, agent.norm_bound(), delta);
    // Stage radii grow with H - h + 1, so stage H is the binding one.
    d.in_set_all_stages = distance <= reg->Radius(H, H, agent.norm_bound(), delta);
  }
  return d;
}

}  // namespace

RunResult RunSingle(const Environment& env, const AgentParams& params, int episodes,
                    std::uint64_t seed, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Agent agent(env, params);
  CounterRng rng(seed);
  const TabularMdp& mdp = env.mdp;
  const double v_star = ExactValueIteration(mdp).values.v(1, mdp.initial_state());
  const double policy_epsilon = IsDithering(params.kind) ? params.epsilon : 0.0;

  RunResult result;
  MetricsSeries& series = result.series;
  series.seed = seed;
  series.run_id = std::string(AgentKindName(params.kind)) + "-" + std::to_string(seed);
  series.pseudo_regret_cum.reserve(episodes);
  series.empirical_regret_cum.reserve(episodes);
  const bool vtr = UsesValueTargets(params.kind);
  const bool canonical = UsesCanonicalModel(params.kind);
  const bool mix = params.kind == AgentKind::kUcrlMix;
  if (vtr) series.model_err_vtr.reserve(episodes);
  if (canonical) series.model_err_canonical.reserve(episodes);
  if (mix) series.mix_vtr_fraction.reserve(episodes);
  if (options.record_diagnostics) result.diagnostics.reserve(episodes);

  double pseudo = 0.0;
  double empirical = 0.0;
  for (int k = 0; k < episodes; ++k) {
    EpisodePlan plan = agent.Plan();
    if (options.record_diagnostics) {
      result.diagnostics.push_back(
          Diagnose(agent, env, v_star, plan.values.v(1, mdp.initial_state())));
    }
    const NonstationaryPolicy policy = GreedyPolicy(plan.values);
    pseudo += PseudoRegretIncrement(v_star, mdp, policy, policy_epsilon);

    EpisodeTrace trace = RunEpisode(agent, mdp, plan.values, rng);
    trace.model_choices = plan.model_choices;
    empirical += EmpiricalRegretIncrement(v_star, trace);
    agent.EndOfEpisode(trace);

    series.pseudo_regret_cum.push_back(pseudo);
    series.empirical_regret_cum.push_back(empirical);
    if (vtr) {
      const Eigen::VectorXd theta = agent.regression()->ThetaHat();
      series.model_err_vtr.push_back(ModelErrorVtr(
          agent, {theta.data(), static_cast<std::size_t>(theta.size())}, mdp));
    }
    if (canonical) series.model_err_canonical.push_back(ModelErrorCanonical(*agent.canonical(), mdp));
    if (mix) {
      const auto& t = plan.model_choices;
      series.mix_vtr_fraction.push_back(
          t.total() > 0 ? static_cast<double>(t.vtr) / static_cast<double>(t.total()) : 1.0);
    }
  }

  if (const RegressionState* reg = agent.regression()) {
    const Eigen::VectorXd theta = reg->ThetaHat();
    result.final_theta_hat.assign(theta.data(), theta.data() + theta.size());
    result.regression_rebaselines = reg->num_rebaselines();
    result.regression_max_drift = reg->max_observed_drift();
  }
  result.final_counts = agent.counts();
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<RunResult> ExecuteRuns(std::span<const RunJob> jobs, int threads) {
  const int n = static_cast<int>(jobs.size());
  std::vector<RunResult> results(n);
  std::vector<std::optional<std::string>> failures(n);
  auto run_one = [&](int i) {
    const RunJob& job = jobs[i];
    try {
      results[i] = RunSingle(*job.env, job.params, job.episodes, job.seed, job.options);
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  };
  if (threads == 1) {
    for (int i = 0; i < n; ++i) run_one(i);
  } else {
    const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
    for (int i = 0; i < n; ++i) run_one(i);
  }
  for (int i = 0; i < n; ++i) {
    if (failures[i]) throw RunFailedError(jobs[i].seed, *failures[i]);
  }
  return results;
}

ExperimentResult RunExperiment(const ExperimentConfig& config, int threads) {
  const Environment env = config.BuildEnvironment();
  std::vector<RunJob> jobs;
  for (AgentKind kind : config.agents) {
    const AgentParams params = config.ParamsFor(kind);
    for (int r = 0; r < config.RunsFor(kind); ++r) {
      jobs.push_back({&env, params, config.episodes, DeriveRunSeed(config.seed, r), {}});
    }
  }
  std::vector<RunResult> results = ExecuteRuns(jobs, threads);

  ExperimentResult out;
  std::size_t next = 0;
  for (AgentKind kind : config.agents) {
    AgentResult agent{kind, {}, {}};
    const int runs = config.RunsFor(kind);
    for (int r = 0; r < runs; ++r) agent.runs.push_back(std::move(results[next++]));
    std::vector<MetricsSeries> series;
    series.reserve(runs);
    for (const RunResult& rr : agent.runs) series.push_back(rr.series);
    agent.curves = AggregateRuns(series);
    out.agents.push_back(std::move(agent));
  }
  return out;
}

}  // namespace vtrlab
