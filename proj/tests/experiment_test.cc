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

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "vtrlab/config.h"
#include "vtrlab/csv.h"
#include "vtrlab/rng.h"

namespace vtrlab {
namespace {

ExperimentConfig SmallConfig() {
  return ParseConfig(R"(
[env]
name = riverswim
states = 3
[agent]
name = ucrl_vtr, eg_vtr, eg_freq, uc_matrixrl, ucrl_mix
[run]
episodes = 60
runs = 3
seed = 5
)");
}

TEST(RunSingleTest, SeriesShapes) {
  const ExperimentConfig config = SmallConfig();
  const Environment env = config.BuildEnvironment();
  for (AgentKind kind : config.agents) {
    const RunResult r = RunSingle(env, config.ParamsFor(kind), 60, 11);
    EXPECT_EQ(r.series.pseudo_regret_cum.size(), 60u);
    EXPECT_EQ(r.series.empirical_regret_cum.size(), 60u);
    EXPECT_EQ(r.series.model_err_vtr.size(), UsesValueTargets(kind) ? 60u : 0u);
    EXPECT_EQ(r.series.model_err_canonical.size(), UsesCanonicalModel(kind) ? 60u : 0u);
    EXPECT_EQ(r.series.mix_vtr_fraction.size(), kind == AgentKind::kUcrlMix ? 60u : 0u);
    EXPECT_EQ(r.final_counts.total(), 60 * 12);
    EXPECT_EQ(r.final_theta_hat.size(), UsesValueTargets(kind) ? 18u : 0u);
    for (std::size_t k = 1; k < 60; ++k) {
      EXPECT_GE(r.series.pseudo_regret_cum[k], r.series.pseudo_regret_cum[k - 1] - 1e-9);
    }
  }
}

TEST(RunSingleTest, DiagnosticsRecorded) {
  const ExperimentConfig config = SmallConfig();
  const Environment env = config.BuildEnvironment();
  RunOptions options;
  options.record_diagnostics = true;
  const RunResult r = RunSingle(env, config.ParamsFor(AgentKind::kUcrlVtr), 30, 3, options);
  ASSERT_EQ(r.diagnostics.size(), 30u);
  // The fresh ellipsoid always contains theta* (||theta*||_2 <= m2).
  EXPECT_TRUE(r.diagnostics[0].in_set_all_stages);
  for (const EpisodeDiagnostics& d : r.diagnostics) {
    EXPECT_GT(d.optimal_value, 0.0);
    if (d.in_set_all_stages) {
      EXPECT_GE(d.planned_value, d.optimal_value - 1e-9);
    }
  }
}

TEST(ExecuteRunsTest, SerialAndParallelAgree) {
  const ExperimentConfig config = SmallConfig();
  const Environment env = config.BuildEnvironment();
  std::vector<RunJob> jobs;
  for (AgentKind kind : config.agents) {
    for (int r = 0; r < 3; ++r) jobs.push_back({&env, config.ParamsFor(kind), 40, DeriveRunSeed(1, r), {}});
  }
  const std::vector<RunResult> serial = ExecuteRuns(jobs, 1);
  const std::vector<RunResult> parallel = ExecuteRuns(jobs, 4);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].series.pseudo_regret_cum, parallel[i].series.pseudo_regret_cum);
    EXPECT_EQ(serial[i].series.empirical_regret_cum, parallel[i].series.empirical_regret_cum);
    EXPECT_EQ(serial[i].series.model_err_vtr, parallel[i].series.model_err_vtr);
    EXPECT_EQ(serial[i].final_theta_hat, parallel[i].final_theta_hat);
  }
}

TEST(ExecuteRunsTest, FailureReportsSeed) {
  const ExperimentConfig config = SmallConfig();
  const Environment env = config.BuildEnvironment();
  AgentParams bad = config.ParamsFor(AgentKind::kEgVtr);
  bad.epsilon = 2.0;
  std::vector<RunJob> jobs = {{&env, config.ParamsFor(AgentKind::kUcrlVtr), 5, 1, {}},
                              {&env, bad, 5, 12345, {}}};
  try {
    ExecuteRuns(jobs, 2);
    FAIL() << "expected a failure";
  } catch (const RunFailedError& e) {
    EXPECT_EQ(e.seed(), 12345u);
    EXPECT_NE(std::string(e.what()).find("12345"), std::string::npos);
  }
}

TEST(RunExperimentTest, SingleRunAggregateEqualsSeries) {
  ExperimentConfig config = SmallConfig();
  config.runs = 1;
  config.agents = {AgentKind::kUcrlMix};
  const ExperimentResult result = RunExperiment(config, 1);
  ASSERT_EQ(result.agents.size(), 1u);
  const AgentResult& a = result.agents[0];
  ASSERT_EQ(a.runs.size(), 1u);
  EXPECT_EQ(a.curves.pseudo_regret_mean, a.runs[0].series.pseudo_regret_cum);
  EXPECT_EQ(a.curves.mix_vtr_fraction_mean, a.runs[0].series.mix_vtr_fraction);
  EXPECT_EQ(a.runs[0].series.seed, DeriveRunSeed(5, 0));
}

TEST(RunExperimentTest, DeterministicAcrossThreadCounts) {
  const ExperimentConfig config = SmallConfig();
  const ExperimentResult a = RunExperiment(config, 1);
  const ExperimentResult b = RunExperiment(config, 8);
  const ExperimentResult c = RunExperiment(config, 1);
  for (std::size_t i = 0; i < a.agents.size(); ++i) {
    EXPECT_EQ(FormatCurvesCsv(a.agents[i].curves), FormatCurvesCsv(b.agents[i].curves));
    EXPECT_EQ(FormatCurvesCsv(a.agents[i].curves), FormatCurvesCsv(c.agents[i].curves));
  }
}

TEST(RunExperimentTest, RunCountsFollowAgentFamily) {
  ExperimentConfig config = SmallConfig();
  config.runs.reset();
  config.episodes = 2;
  const ExperimentResult r = RunExperiment(config, 0);
  for (const AgentResult& a : r.agents) {
    EXPECT_EQ(static_cast<int>(a.runs.size()),
              IsDithering(a.kind) ? kDefaultRunsDithering : kDefaultRunsOptimistic);
  }
}

}  // namespace
}  // namespace vtrlab
