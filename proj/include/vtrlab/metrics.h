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

#ifndef VTRLAB_METRICS_H_
#define VTRLAB_METRICS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vtrlab/agent.h"
#include "vtrlab/counts.h"
#include "vtrlab/mdp.h"

namespace vtrlab {

// Added to N(s, a) in the weighted-L1 denominator.
inline constexpr double kWeightedErrorEpsDiv = 1e-9;

// Per-episode series for one seeded run. An empty vector means the metric
// does not apply to the agent (e.g. mix fraction for UCRL-VTR).
struct MetricsSeries {
  std::string run_id;
  std::uint64_t seed = 0;
  std::vector<double> pseudo_regret_cum;
  std::vector<double> empirical_regret_cum;
  std::vector<double> model_err_vtr;
  std::vector<double> model_err_canonical;
  std::vector<double> mix_vtr_fraction;
};

// V*_1(s0) - V^pi_1(s0), pi played with probability 1 - epsilon.
double PseudoRegretIncrement(double v_star, const TabularMdp& mdp,
                             const NonstationaryPolicy& policy, double epsilon = 0.0);

// V*_1(s0) - sum_h r(s_h, a_h). Can be negative for a lucky episode.
double EmpiricalRegretIncrement(double v_star, const EpisodeTrace& trace);

// sum_{s,a,s'} N(s,a,s') / (N(s,a) + eps_div) |p_hat - p_star|, both
// tensors laid out (s, a, s').
double WeightedL1Error(std::span<const double> p_hat, std::span<const double> p_star,
                       const VisitCounts& counts, double eps_div = kWeightedErrorEpsDiv);

// sum_j theta_j P_j, unprojected.
std::vector<double> ThetaToPhat(std::span<const double> theta,
                                const LinearMixtureMdp& mixture);

// Pointwise mean and standard error (sample std / sqrt(n)) across runs.
// Empty vectors mark absent metrics.
struct AggregateCurves {
  int num_runs = 0;
  std::vector<double> pseudo_regret_mean;
  std::vector<double> pseudo_regret_stderr;
  std::vector<double> empirical_regret_mean;
  std::vector<double> empirical_regret_stderr;
  std::vector<double> model_err_vtr_mean;
  std::vector<double> model_err_vtr_stderr;
  std::vector<double> model_err_canonical_mean;
  std::vector<double> model_err_canonical_stderr;
  std::vector<double> mix_vtr_fraction_mean;

  std::size_t num_episodes() const { return pseudo_regret_mean.size(); }
};

// Reduces in run-index order with compensated summation. Throws
// InvalidArgumentError on empty input or mismatched lengths.
AggregateCurves AggregateRuns(std::span<const MetricsSeries> runs);

}  // namespace vtrlab

#endif  // VTRLAB_METRICS_H_
