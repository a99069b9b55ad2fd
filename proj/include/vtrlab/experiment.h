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

#ifndef VTRLAB_EXPERIMENT_H_
#define VTRLAB_EXPERIMENT_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vtrlab/agent.h"
#include "vtrlab/config.h"
#include "vtrlab/counts.h"
#include "vtrlab/env.h"
#include "vtrlab/error.h"
#include "vtrlab/metrics.h"

namespace vtrlab {

// Per-episode confidence-set bookkeeping, recorded only on request.
struct EpisodeDiagnostics {
  // theta* inside the ellipsoid with the stage-1 radius, i.e. the plain
  // (H/2)-subgaussian set.
  bool in_set_stage1 = false;
  // theta* inside the ellipsoid at every stage radius used for planning.
  bool in_set_all_stages = false;
  // Planned V_1(s0) and the true optimum.
  double planned_value = 0.0;
  double optimal_value = 0.0;
};

struct RunOptions {
  bool record_diagnostics = false;
};

struct RunResult {
  MetricsSeries series;
  std::vector<double> final_theta_hat;
  VisitCounts final_counts{1, 1};
  double wall_seconds = 0.0;
  std::vector<EpisodeDiagnostics> diagnostics;
  // Regression bookkeeping for VTR agents.
  std::int64_t regression_rebaselines = 0;
  double regression_max_drift = 0.0;
};

// One seeded run: plan, act, record, update, for K episodes.
RunResult RunSingle(const Environment& env, const AgentParams& params, int episodes,
                    std::uint64_t seed, const RunOptions& options = {});

struct RunJob {
  const Environment* env;
  AgentParams params;
  int episodes;
  std::uint64_t seed;
  RunOptions options;
};

// Run failure carrying the seed of the run that failed.
class RunFailedError : public Error {
 public:
  RunFailedError(std::uint64_t seed, const std::string& message)
      : Error("run with seed " + std::to_string(seed) + " failed: " + message), seed_(seed) {}
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

// Executes jobs and returns results in job order. threads == 1 takes the
// plain serial loop; larger values fan jobs out over an OpenMP team. Each
// job owns all of its state, so the results do not depend on the thread
// count. threads <= 0 uses the OpenMP default.
std::vector<RunResult> ExecuteRuns(std::span<const RunJob> jobs, int threads);

struct AgentResult {
  AgentKind kind;
  AggregateCurves curves;
  std::vector<RunResult> runs;
};

struct ExperimentResult {
  std::vector<AgentResult> agents;
};

// Runs every configured agent with its run count. Run r of every agent
// uses seed DeriveRunSeed(config.seed, r).
ExperimentResult RunExperiment(const ExperimentConfig& config, int threads);

}  // namespace vtrlab

#endif  // VTRLAB_EXPERIMENT_H_
