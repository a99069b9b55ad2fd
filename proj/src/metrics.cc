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

#include "vtrlab/metrics.h"

#include <cmath>

#include "vtrlab/error.h"

namespace vtrlab {
namespace {

// Neumaier summation.
class CompensatedSum {
 public:
  void Add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

using Field = const std::vector<double> MetricsSeries::*;

void Reduce(std::span<const MetricsSeries> runs, Field field, std::vector<double>* mean,
            std::vector<double>* stderr_out) {
  const std::size_t len = (runs.front().*field).size();
  for (const MetricsSeries& r : runs) {
    if ((r.*field).size() != len) {
      throw InvalidArgumentError("AggregateRuns: series lengths differ across runs");
    }
  }
  if (len == 0) return;
  const double n = static_cast<double>(runs.size());
  mean->assign(len, 0.0);
  if (stderr_out) stderr_out->assign(len, 0.0);
  for (std::size_t t = 0; t < len; ++t) {
    CompensatedSum sum;
    for (const MetricsSeries& r : runs) sum.Add((r.*field)[t]);
    const double m = sum.value() / n;
    (*mean)[t] = m;
    if (stderr_out && runs.size() > 1) {
      CompensatedSum squares;
      for (const MetricsSeries& r : runs) {
        const double d = (r.*field)[t] - m;
        squares.Add(d * d);
      }
      (*stderr_out)[t] = std::sqrt(squares.value() / (n - 1.0)) / std::sqrt(n);
    }
  }
}

}  // namespace

double PseudoRegretIncrement(double v_star, const TabularMdp& mdp,
                             const NonstationaryPolicy& policy, double epsilon) {
  return v_star - PolicyEvaluation(mdp, policy, epsilon);
}

double EmpiricalRegretIncrement(double v_star, const EpisodeTrace& trace) {
  double collected = 0.0;
  for (double r : trace.rewards) collected += r;
  return v_star - collected;
}

double WeightedL1Error(std::span<const double> p_hat, std::span<const double> p_star,
                       const VisitCounts& counts, double eps_div) {
  const int S = counts.num_states();
  const int A = counts.num_actions();
  const std::size_t expected = static_cast<std::size_t>(S) * A * S;
  if (p_hat.size() != expected || p_star.size() != expected) {
    throw InvalidArgumentError("WeightedL1Error: tensor shape does not match counts");
  }
  if (!(eps_div > 0.0)) throw InvalidArgumentError("WeightedL1Error: eps_div must be positive");
  double error = 0.0;
  for (int s = 0; s < S; ++s) {
    for (int a = 0; a < A; ++a) {
      const double n = static_cast<double>(counts.pair(s, a));
      if (n == 0.0) continue;
      const std::size_t row = (static_cast<std::size_t>(s) * A + a) * S;
      for (int next = 0; next < S; ++next) {
        const double weight = static_cast<double>(counts.triple(s, a, next)) / (n + eps_div);
        error += weight * std::abs(p_hat[row + next] - p_star[row + next]);
      }
    }
  }
  return error;
}

std::vector<double> ThetaToPhat(std::span<const double> theta,
                                const LinearMixtureMdp& mixture) {
  return mixture.Expand(theta);
}

AggregateCurves AggregateRuns(std::span<const MetricsSeries> runs) {
  if (runs.empty()) throw InvalidArgumentError("AggregateRuns: no runs");
  AggregateCurves out;
  out.num_runs = static_cast<int>(runs.size());
  Reduce(runs, &MetricsSeries::pseudo_regret_cum, &out.pseudo_regret_mean,
         &out.pseudo_regret_stderr);
  Reduce(runs, &MetricsSeries::empirical_regret_cum, &out.empirical_regret_mean,
         &out.empirical_regret_stderr);
  Reduce(runs, &MetricsSeries::model_err_vtr, &out.model_err_vtr_mean,
         &out.model_err_vtr_stderr);
  Reduce(runs, &MetricsSeries::model_err_canonical, &out.model_err_canonical_mean,
         &out.model_err_canonical_stderr);
  Reduce(runs, &MetricsSeries::mix_vtr_fraction, &out.mix_vtr_fraction_mean, nullptr);
  if (out.empirical_regret_mean.size() != out.pseudo_regret_mean.size()) {
    throw InvalidArgumentError("AggregateRuns: regret series lengths differ");
  }
  return out;
}

}  // namespace vtrlab
